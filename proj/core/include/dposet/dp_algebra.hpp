#pragma once

#include <tuple>
#include <utility>

#include "dposet/canonical.hpp"
#include "dposet/linear_combination.hpp"

namespace dposet {

/// Element of the free Z-module on isomorphism classes of double posets.
using DElement = LinearCombination<CanonicalForm>;
using DTensor = LinearCombination<std::pair<CanonicalForm, CanonicalForm>>;
using DTensor3 = LinearCombination<std::tuple<CanonicalForm, CanonicalForm, CanonicalForm>>;

/// The class of `d` with coefficient 1.
DElement basis(const DoublePoset& d);
/// The empty double poset.
DElement unit();

inline DElement add(const DElement& a, const DElement& b) { return a + b; }
inline DElement scale(Coeff k, const DElement& a) { return k * a; }

/// Bilinear extension of `compose`.
DElement product(const DElement& a, const DElement& b);
/// Linear extension of `decompose`.
DTensor coproduct(const DElement& a);
/// Coefficient of the empty class.
Coeff counit(const DElement& a);

/// S(1) = 1 and S(x) = -x - sum S(x') x'' over coproduct terms with both
/// sides nonempty. Memoized per call on basis classes.
DElement antipode(const DElement& a);

/// Bilinear extension of the picture count.
Coeff pairing(const DElement& a, const DElement& b);
/// Bilinear extension of `internal_product_basis`; degree preserving.
DElement internal_product(const DElement& a, const DElement& b);

/// (a ⊗ b)(c ⊗ d) = ac ⊗ bd.
DTensor tensor_product(const DTensor& x, const DTensor& y);
/// m : a ⊗ b -> ab.
DElement multiply(const DTensor& t);
/// m ∘ (S ⊗ id) and m ∘ (id ⊗ S).
DElement multiply_antipode_left(const DTensor& t);
DElement multiply_antipode_right(const DTensor& t);
/// (ε ⊗ id) and (id ⊗ ε).
DElement counit_left(const DTensor& t);
DElement counit_right(const DTensor& t);
/// (δ ⊗ id) and (id ⊗ δ).
DTensor3 coproduct_left(const DTensor& t);
DTensor3 coproduct_right(const DTensor& t);
/// Sum of c · <a, g'> · <b, g''> over terms c · g' ⊗ g'' of `t`.
Coeff pairing(const DElement& a, const DElement& b, const DTensor& t);

}  // namespace dposet

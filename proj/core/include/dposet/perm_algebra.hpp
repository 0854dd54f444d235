#pragma once

#include <utility>
#include <vector>

#include "dposet/composition.hpp"
#include "dposet/dp_algebra.hpp"
#include "dposet/linear_combination.hpp"
#include "dposet/permutation.hpp"

namespace dposet {

/// Element of the free Z-module on permutations of all sizes.
using SElement = LinearCombination<Permutation>;
using STensor = LinearCombination<std::pair<Permutation, Permutation>>;

/// Interleavings of sigma with tau shifted up by |sigma|.
SElement shifted_shuffle(const Permutation& sigma, const Permutation& tau);
/// (st(u), st(v)) for every factorization sigma = uv, shortest u first.
std::vector<std::pair<Permutation, Permutation>> coproduct_s(const Permutation& sigma);

/// Bilinear extensions of the basis operations above.
SElement product_s(const SElement& a, const SElement& b);
STensor coproduct_s(const SElement& a);
STensor tensor_product_s(const STensor& x, const STensor& y);

/// (sigma, tau) = 1 iff tau = sigma^-1, extended bilinearly.
Coeff joellenbeck(const SElement& a, const SElement& b);
/// Bilinear extension of functional composition; unequal sizes give zero.
SElement internal_s(const SElement& a, const SElement& b);

/// Lengths of the maximal ascending runs. Throws EmptyError for n = 0.
Composition descent_composition(const Permutation& sigma);

/// Permutations omega(e_1) ... omega(e_n) over linear extensions e_1 ... e_n of
/// the first order, in lexicographic order of the e's. Throws NotSpecialError.
std::vector<Permutation> linear_extensions_special(const DoublePoset& d);

/// Sum of linear extensions, extended linearly. Throws NotSpecialError if any
/// basis term is not special.
SElement linear_extension_map(const DElement& a);
SElement linear_extension_map(const DoublePoset& d);

}  // namespace dposet

#pragma once

#include <utility>

#include "dposet/composition.hpp"
#include "dposet/dp_algebra.hpp"
#include "dposet/linear_combination.hpp"
#include "dposet/perm_algebra.hpp"

namespace dposet {

/// Quasi-symmetric function in monomial coordinates: coefficient of M_C.
using QElement = LinearCombination<Composition>;
using QTensor = LinearCombination<std::pair<Composition, Composition>>;

/// Largest size accepted by `gamma`.
inline constexpr int kGammaCap = 8;

/// Generating function of d-partitions. The coefficient of M_(c1..ck) counts
/// surjections x : E -> {1..k} with fibre sizes c_i such that e <1 e' implies
/// x(e) <= x(e'), strictly when additionally e' <2 e.
/// Throws SizeCapError above kGammaCap.
QElement gamma(const DoublePoset& d);
QElement gamma(const DElement& a);

/// Quasi-shuffle product in the monomial basis.
QElement qsym_product(const QElement& a, const QElement& b);
/// Deconcatenation: M_(c1..ck) -> sum_i M_(c1..ci) ⊗ M_(ci+1..ck).
QTensor qsym_coproduct(const QElement& a);

/// F_C as the sum of M_D over compositions D refining C.
QElement fundamental_to_monomial(const Composition& c);
/// sigma -> F_{C(sigma)}, extended linearly; the empty permutation maps to M_().
QElement fundamental_of(const SElement& a);

}  // namespace dposet

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dposet/canonical.hpp"
#include "dposet/double_poset.hpp"
#include "dposet/relation.hpp"

namespace dposet {

/// Every strict partial order on {0..n-1} (labeled), in a fixed order.
/// Counts are 1, 1, 3, 19, 219, 4231, 130023, ...
std::vector<Relation> all_posets(int n);

/// Canonical forms of every isomorphism class of double posets of size n, sorted.
std::vector<CanonicalForm> all_double_posets(int n);

/// One representative per isomorphism class of special double posets of size
/// n: second order natural on 0..n-1, first order any labeled poset.
std::vector<DoublePoset> all_special(int n);

/// Random order on n elements: shuffle the elements, keep each forward pair
/// with probability 1/2, close transitively. Only raw 64-bit draws of the
/// engine are used, so the result is fixed by the seed on every platform.
Relation random_poset(int n, std::mt19937_64& rng);
DoublePoset random_double_poset(int n, std::mt19937_64& rng);

}  // namespace dposet

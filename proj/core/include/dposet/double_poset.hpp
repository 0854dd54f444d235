#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dposet/composition.hpp"
#include "dposet/permutation.hpp"
#include "dposet/relation.hpp"

namespace dposet {

/// Finite set {0,...,n-1} carrying two strict partial orders.
class DoublePoset {
 public:
  /// The empty double poset.
  DoublePoset() = default;
  /// Throws SizeMismatchError if the two orders live on different sizes.
  DoublePoset(Relation first, Relation second);

  static DoublePoset point();
  /// n elements, both orders empty.
  static DoublePoset antichain(int n);

  int size() const { return first_.size(); }
  const Relation& first() const { return first_; }
  const Relation& second() const { return second_; }

  /// Transports both orders along `image` (element i becomes image[i]).
  DoublePoset relabeled(std::span<const int> image) const;
  /// Restriction of both orders to `subset`, relabeled by ascending index.
  DoublePoset restricted(Mask subset) const;

  friend bool operator==(const DoublePoset&, const DoublePoset&) = default;

 private:
  Relation first_;
  Relation second_;
};

/// Image table of a bijection between ground sets: phi[x] is the image of x.
using Bijection = std::vector<int>;

/// EF: disjoint union, first orders side by side, every e below every f in the
/// second order. Elements of `f` are shifted by e.size().
DoublePoset compose(const DoublePoset& e, const DoublePoset& f);

/// (lower ideal, complementary upper ideal) of the first order, both orders
/// restricted; one pair per lower ideal in `lower_ideals` order.
std::vector<std::pair<DoublePoset, DoublePoset>> decompose(const DoublePoset& d);

/// Bijections increasing from the first order of `e` to the second order of `f`.
std::vector<Bijection> increasing_bijections(const DoublePoset& e, const DoublePoset& f);

/// Pictures e -> f: increasing bijections whose inverse is increasing from the
/// first order of `f` to the second order of `e`. Lexicographic on image tables.
std::vector<Bijection> pictures(const DoublePoset& e, const DoublePoset& f);

/// Number of pictures, without materializing them.
std::int64_t pairing_basis(const DoublePoset& e, const DoublePoset& f);

/// Graph of `phi` as a double poset, indexed by the elements of `e`: first
/// order pulled back from f's first order, second order copied from e's.
/// Throws NotIncreasingError unless phi is increasing (e, <1) -> (f, <2).
DoublePoset internal_graph(const DoublePoset& e, const DoublePoset& f, const Bijection& phi);

/// One graph per increasing bijection, repeats kept.
std::vector<DoublePoset> internal_product_basis(const DoublePoset& e, const DoublePoset& f);

/// P_sigma: second order natural on 0..n-1, first order the chain
/// sigma(1)-1 < sigma(2)-1 < ... < sigma(n)-1.
DoublePoset from_permutation(const Permutation& sigma);

/// pi_nu on the Ferrers diagram of `nu`. Cell (x, y) with 0 <= y < length,
/// 0 <= x < nu[y] gets index (nu[0] + ... + nu[y-1]) + x. First order is the
/// product order; (x,y) <2 (x',y') iff y > y', or y == y' and x < x'.
DoublePoset pi_from_partition(const Partition& nu);

/// Both orders reversed.
DoublePoset tilde(const DoublePoset& d);

bool is_special(const DoublePoset& d);
bool is_naturally_labelled(const DoublePoset& d);
/// omega[e] in 1..n, the rank of e in the (total) second order.
/// Throws NotSpecialError.
std::vector<int> labelling(const DoublePoset& d);

}  // namespace dposet

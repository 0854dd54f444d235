#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dposet {

/// Subset of {0,...,31} as a bit mask.
using Mask = std::uint32_t;

inline constexpr int kMaxElements = 32;
/// Largest n accepted by the 2^n ideal scan.
inline constexpr int kIdealScanCap = 20;

inline constexpr Mask bit(int i) { return Mask{1} << i; }
inline constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : bit(n) - 1; }
inline constexpr bool contains(Mask m, int i) { return (m >> i) & 1u; }
inline int popcount(Mask m) { return std::popcount(m); }

/// Elements of a mask in ascending order.
std::vector<int> members(Mask m);
Mask mask_of(std::span<const int> elements);

using Pair = std::pair<int, int>;

/// Strict partial order on {0,...,n-1}, stored transitively closed.
class Relation {
 public:
  Relation() = default;
  /// Antichain on n elements.
  explicit Relation(int n);

  /// Transitive closure of `pairs`; throws IndexError / CycleError.
  static Relation validate(int n, std::span<const Pair> pairs);
  static Relation chain(int n);

  int size() const { return static_cast<int>(up_.size()); }
  bool less(int i, int j) const { return contains(up_[i], j); }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  /// {j : i < j}
  Mask above(int i) const { return up_[i]; }
  /// {j : j < i}
  Mask below(int i) const { return down_[i]; }

  /// All (i, j) with i < j, lexicographically sorted.
  std::vector<Pair> pairs() const;
  /// Covering pairs (transitive reduction), lexicographically sorted.
  std::vector<Pair> cover_pairs() const;
  std::size_t pair_count() const;

  bool is_total() const;
  bool is_subset_of(const Relation& other) const;
  Relation opposite() const;
  /// Relation transported along `image`: i < j  becomes  image[i] < image[j].
  Relation relabeled(std::span<const int> image) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  void set(int i, int j) {
    up_[i] |= bit(j);
    down_[j] |= bit(i);
  }
  friend Relation induced(const Relation&, Mask);
  friend Relation disjoint_union(const Relation&, const Relation&, bool);
};

bool is_lower_ideal(const Relation& r, Mask s);

/// Downward-closed subsets, ordered by size then lexicographically on members.
std::vector<Mask> lower_ideals(const Relation& r);

struct Decomposition {
  Mask lower;
  Mask upper;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// One (I, complement of I) per lower ideal I, in `lower_ideals` order.
std::vector<Decomposition> decompositions(const Relation& r);

/// Restriction to `subset`, relabeled to 0..|subset|-1 by ascending index.
Relation induced(const Relation& r, Mask subset);

/// Orders of `a` and `b` side by side on a.size()+b.size() elements (b shifted);
/// `a_below_b` additionally puts every element of `a` below every element of `b`.
Relation disjoint_union(const Relation& a, const Relation& b, bool a_below_b);

/// Every linear extension as a sequence of elements, in lexicographic order.
std::vector<std::vector<int>> linear_extensions(const Relation& r);
std::uint64_t count_linear_extensions(const Relation& r);

}  // namespace dposet

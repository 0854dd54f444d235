#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <vector>

namespace dposet {

/// Sequence of positive parts.
class Composition {
 public:
  Composition() = default;
  /// Throws InvalidCompositionError on a non-positive part.
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidPartitionError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool is_strict() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// "(1,5,2)"; the empty composition prints as "()".
std::string to_string(const Composition& c);
std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Composition& c);
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All compositions of n in lexicographic order.
std::vector<Composition> compositions_of(int n);
/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

}  // namespace dposet

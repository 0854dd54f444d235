#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace dposet {

/// Word over the positive integers.
using Word = std::vector<int>;

/// Permutation of {1,...,n} in one-line notation; n = 0 is the empty permutation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutationError unless `word` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// n n-1 ... 1
  static Permutation longest(int n);

  int size() const { return static_cast<int>(word_.size()); }
  /// 1-based evaluation, sigma(i).
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  /// (this ∘ other)(i) = this(other(i)); sizes must agree.
  Permutation compose(const Permutation& other) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Digits concatenated when all letters are < 10 ("51247836"), space-separated otherwise.
std::string to_string(std::span<const int> word);
std::string to_string(const Permutation& p);
std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Positions numbered 1..n starting with the smallest letter, ties left to right.
Permutation standardize(std::span<const int> w);

}  // namespace dposet

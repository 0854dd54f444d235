#include "dposet/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "dposet/errors.hpp"

namespace dposet {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v])
      throw InvalidPermutationError("'" + to_string(word_) + "' is not a permutation of 1.." +
                                    std::to_string(n));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (int i = 0; i < size(); ++i) w[word_[i] - 1] = i + 1;
  Permutation p;
  p.word_ = std::move(w);
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size())
    throw SizeMismatchError("composing permutations of sizes " + std::to_string(size()) +
                            " and " + std::to_string(other.size()));
  Permutation p;
  p.word_.resize(word_.size());
  for (int i = 0; i < size(); ++i) p.word_[i] = word_[other.word_[i] - 1];
  return p;
}

std::string to_string(std::span<const int> word) {
  const bool compact = std::all_of(word.begin(), word.end(), [](int v) { return v >= 0 && v < 10; });
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) s += ' ';
    s += std::to_string(word[i]);
  }
  return s;
}

std::string to_string(const Permutation& p) {
  return p.size() == 0 ? std::string("()") : to_string(p.word());
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }

Permutation standardize(std::span<const int> w) {
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
  std::vector<int> st(w.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) st[order[rank]] = static_cast<int>(rank) + 1;
  return Permutation(std::move(st));
}

}  // namespace dposet

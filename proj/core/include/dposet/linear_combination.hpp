#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "dposet/checked.hpp"

namespace dposet {

/// Finite Z-linear combination over an ordered basis `Key`. Zero coefficients
/// are never stored, so two combinations are equal iff their maps are equal.
/// Iteration follows `Key`'s ordering.
template <typename Key>
class LinearCombination {
 public:
  using map_type = std::map<Key, Coeff>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key k, Coeff c = 1) { add_term(std::move(k), c); }

  static LinearCombination zero() { return {}; }

  /// Adds c·k in place with overflow checking.
  void add_term(const Key& k, Coeff c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  Coeff coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const map_type& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, checked_mul(-1, c));
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    a += b;
    return a;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    a -= b;
    return a;
  }
  friend LinearCombination operator*(Coeff k, const LinearCombination& a) {
    LinearCombination r;
    if (k == 0) return r;
    for (const auto& [key, c] : a.terms_) r.terms_.emplace(key, checked_mul(k, c));
    return r;
  }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  map_type terms_;
};

/// Extends `f : Key -> LinearCombination<Out>` linearly.
template <typename Out, typename Key, typename F>
LinearCombination<Out> linear_map(const LinearCombination<Key>& a, F&& f) {
  LinearCombination<Out> r;
  for (const auto& [k, c] : a) {
    for (const auto& [ok, oc] : f(k)) r.add_term(ok, checked_mul(c, oc));
  }
  return r;
}

/// Extends `f : (KeyA, KeyB) -> LinearCombination<Out>` bilinearly.
template <typename Out, typename KeyA, typename KeyB, typename F>
LinearCombination<Out> bilinear_map(const LinearCombination<KeyA>& a,
                                    const LinearCombination<KeyB>& b, F&& f) {
  LinearCombination<Out> r;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const Coeff c = checked_mul(ca, cb);
      for (const auto& [ok, oc] : f(ka, kb)) r.add_term(ok, checked_mul(c, oc));
    }
  }
  return r;
}

/// Extends an integer-valued `f : (KeyA, KeyB) -> Coeff` bilinearly.
template <typename KeyA, typename KeyB, typename F>
Coeff bilinear_form(const LinearCombination<KeyA>& a, const LinearCombination<KeyB>& b,
                    F&& f) {
  Coeff total = 0;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const Coeff v = f(ka, kb);
      if (v != 0) total = checked_add(total, checked_mul(checked_mul(ca, cb), v));
    }
  }
  return total;
}

}  // namespace dposet

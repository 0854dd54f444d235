#include "dposet/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dposet {

std::vector<Relation> all_posets(int n) {
  // Extend each poset on {0..m-1} by a new element m placed above a lower
  // ideal D and below an upper ideal U, disjoint, with D entirely below U.
  std::vector<Relation> level{Relation(0)};
  for (int m = 0; m < n; ++m) {
    std::vector<Relation> next;
    for (const Relation& r : level) {
      const std::vector<Mask> ideals = lower_ideals(r);
      const Mask all = full_mask(m);
      for (Mask down : ideals) {
        for (Mask comp : ideals) {
          const Mask up = all & ~comp;  // complements of lower ideals are upper ideals
          if (down & up) continue;
          bool ok = true;
          for (int d : members(down)) {
            if ((r.above(d) & up) != up) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          std::vector<Pair> pairs = r.pairs();
          for (int d : members(down)) pairs.emplace_back(d, m);
          for (int u : members(up)) pairs.emplace_back(m, u);
          next.push_back(Relation::validate(m + 1, pairs));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<CanonicalForm> all_double_posets(int n) {
  const std::vector<Relation> posets = all_posets(n);
  std::set<CanonicalForm> classes;
  for (const Relation& a : posets) {
    for (const Relation& b : posets) classes.insert(canonical_form(DoublePoset(a, b)));
  }
  return {classes.begin(), classes.end()};
}

std::vector<DoublePoset> all_special(int n) {
  std::vector<DoublePoset> out;
  const Relation natural = Relation::chain(n);
  for (Relation& r : all_posets(n)) out.emplace_back(std::move(r), natural);
  return out;
}

Relation random_poset(int n, std::mt19937_64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng() >> 63) pairs.emplace_back(order[i], order[j]);
    }
  }
  return Relation::validate(n, pairs);
}

DoublePoset random_double_poset(int n, std::mt19937_64& rng) {
  Relation first = random_poset(n, rng);
  Relation second = random_poset(n, rng);
  return {std::move(first), std::move(second)};
}

}  // namespace dposet

#include "dposet/relation.hpp"

#include <algorithm>
#include <string>

#include "dposet/errors.hpp"

namespace dposet {

std::vector<int> members(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) m |= bit(e);
  return m;
}

Relation::Relation(int n) {
  if (n < 0 || n > kMaxElements)
    throw SizeCapError("relation size " + std::to_string(n) + " outside [0, 32]");
  up_.assign(n, 0);
  down_.assign(n, 0);
}

Relation Relation::validate(int n, std::span<const Pair> pairs) {
  Relation r(n);
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw IndexError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                       ") outside 0.." + std::to_string(n - 1));
    if (i == j) throw CycleError("reflexive pair (" + std::to_string(i) + "," + std::to_string(i) + ")");
    r.set(i, j);
  }
  // Warshall on bit rows.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (contains(r.up_[i], k)) r.up_[i] |= r.up_[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (contains(r.up_[i], i))
      throw CycleError("element " + std::to_string(i) + " lies on a cycle");
  }
  std::fill(r.down_.begin(), r.down_.end(), 0);
  for (int i = 0; i < n; ++i) {
    for (int j : members(r.up_[i])) r.down_[j] |= bit(i);
  }
  return r;
}

Relation Relation::chain(int n) {
  Relation r(n);
  for (int i = 0; i < n; ++i) {
    r.up_[i] = full_mask(n) & ~full_mask(i + 1);
    r.down_[i] = full_mask(i);
  }
  return r;
}

std::vector<Pair> Relation::pairs() const {
  std::vector<Pair> out;
  for (int i = 0; i < size(); ++i) {
    for (int j : members(up_[i])) out.emplace_back(i, j);
  }
  return out;
}

std::vector<Pair> Relation::cover_pairs() const {
  std::vector<Pair> out;
  for (int i = 0; i < size(); ++i) {
    Mask covers = up_[i];
    for (int j : members(up_[i])) covers &= ~up_[j];
    for (int j : members(covers)) out.emplace_back(i, j);
  }
  return out;
}

std::size_t Relation::pair_count() const {
  std::size_t c = 0;
  for (Mask m : up_) c += popcount(m);
  return c;
}

bool Relation::is_total() const {
  const Mask all = full_mask(size());
  for (int i = 0; i < size(); ++i) {
    if ((up_[i] | down_[i] | bit(i)) != all) return false;
  }
  return true;
}

bool Relation::is_subset_of(const Relation& other) const {
  if (other.size() != size()) return false;
  for (int i = 0; i < size(); ++i) {
    if (up_[i] & ~other.up_[i]) return false;
  }
  return true;
}

Relation Relation::opposite() const {
  Relation r;
  r.up_ = down_;
  r.down_ = up_;
  return r;
}

Relation Relation::relabeled(std::span<const int> image) const {
  Relation r(size());
  for (int i = 0; i < size(); ++i) {
    for (int j : members(up_[i])) r.set(image[i], image[j]);
  }
  return r;
}

bool is_lower_ideal(const Relation& r, Mask s) {
  for (int y : members(s)) {
    if (r.below(y) & ~s) return false;
  }
  return true;
}

std::vector<Mask> lower_ideals(const Relation& r) {
  const int n = r.size();
  if (n > kIdealScanCap)
    throw SizeCapError("ideal enumeration capped at n = " + std::to_string(kIdealScanCap));
  std::vector<Mask> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (is_lower_ideal(r, static_cast<Mask>(s))) out.push_back(static_cast<Mask>(s));
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    const int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    const Mask diff = a ^ b;
    return diff != 0 && (a & diff & (~diff + 1)) != 0;
  });
  return out;
}

std::vector<Decomposition> decompositions(const Relation& r) {
  const Mask all = full_mask(r.size());
  std::vector<Decomposition> out;
  for (Mask ideal : lower_ideals(r)) out.push_back({ideal, all & ~ideal});
  return out;
}

Relation induced(const Relation& r, Mask subset) {
  if (subset & ~full_mask(r.size()))
    throw IndexError("subset mentions elements outside 0.." + std::to_string(r.size() - 1));
  const std::vector<int> keep = members(subset);
  std::vector<int> index(r.size(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) index[keep[k]] = static_cast<int>(k);
  Relation out(static_cast<int>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    for (int j : members(r.above(keep[k]) & subset)) out.set(static_cast<int>(k), index[j]);
  }
  return out;
}

Relation disjoint_union(const Relation& a, const Relation& b, bool a_below_b) {
  const int na = a.size(), nb = b.size();
  if (na + nb > kMaxElements) throw SizeCapError("disjoint union exceeds 32 elements");
  Relation r(na + nb);
  for (int i = 0; i < na; ++i) {
    r.up_[i] = a.up_[i];
    r.down_[i] = a.down_[i];
    if (a_below_b) r.up_[i] |= full_mask(na + nb) & ~full_mask(na);
  }
  for (int j = 0; j < nb; ++j) {
    r.up_[na + j] = b.up_[j] << na;
    r.down_[na + j] = b.down_[j] << na;
    if (a_below_b) r.down_[na + j] |= full_mask(na);
  }
  return r;
}

namespace {

void extend(const Relation& r, Mask placed, std::vector<int>& prefix,
            std::vector<std::vector<int>>& out) {
  const int n = r.size();
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  for (int e = 0; e < n; ++e) {
    if (contains(placed, e) || (r.below(e) & ~placed)) continue;
    prefix.push_back(e);
    extend(r, placed | bit(e), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> linear_extensions(const Relation& r) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  prefix.reserve(r.size());
  extend(r, 0, prefix, out);
  return out;
}

std::uint64_t count_linear_extensions(const Relation& r) {
  const int n = r.size();
  if (n > kIdealScanCap)
    throw SizeCapError("extension counting capped at n = " + std::to_string(kIdealScanCap));
  // Number of ways to list each lower ideal.
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (std::size_t s = 0; s < ways.size(); ++s) {
    if (ways[s] == 0) continue;
    const Mask placed = static_cast<Mask>(s);
    for (int e = 0; e < n; ++e) {
      if (!contains(placed, e) && !(r.below(e) & ~placed)) ways[s | bit(e)] += ways[s];
    }
  }
  return ways.back();
}

}  // namespace dposet

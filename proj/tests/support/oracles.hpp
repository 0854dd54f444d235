#pragma once

// Brute-force reference computations used only by tests. None of these call
// the library's enumeration kernels; they work from definitions on plain
// adjacency matrices.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "dposet/dposet.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const dposet::Relation& r) {
  const int n = r.size();
  Matrix m(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = r.less(i, j);
  return m;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Sequences (0-based) respecting r, by filtering all n! orderings.
inline std::vector<std::vector<int>> linear_extensions(const dposet::Relation& r) {
  const Matrix m = matrix_of(r);
  std::vector<std::vector<int>> out;
  for (const auto& p : all_permutations(r.size())) {
    bool ok = true;
    for (std::size_t a = 0; a < p.size() && ok; ++a)
      for (std::size_t b = a + 1; b < p.size() && ok; ++b)
        if (m[p[b]][p[a]]) ok = false;
    if (ok) out.push_back(p);
  }
  return out;
}

/// Lower ideals by checking every subset.
inline std::size_t count_lower_ideals(const dposet::Relation& r) {
  const Matrix m = matrix_of(r);
  const int n = r.size();
  std::size_t count = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y)
      for (int x = 0; x < n && ok; ++x)
        if (((s >> y) & 1u) && m[x][y] && !((s >> x) & 1u)) ok = false;
    count += ok;
  }
  return count;
}

/// Pictures by testing every bijection against both monotonicity conditions.
inline std::int64_t pictures(const dposet::DoublePoset& e, const dposet::DoublePoset& f) {
  if (e.size() != f.size()) return 0;
  const Matrix e1 = matrix_of(e.first()), e2 = matrix_of(e.second());
  const Matrix f1 = matrix_of(f.first()), f2 = matrix_of(f.second());
  std::int64_t count = 0;
  for (const auto& phi : all_permutations(e.size())) {
    std::vector<int> inv(phi.size());
    for (std::size_t x = 0; x < phi.size(); ++x) inv[phi[x]] = static_cast<int>(x);
    bool ok = true;
    for (int x = 0; x < e.size() && ok; ++x)
      for (int y = 0; y < e.size() && ok; ++y) {
        if (e1[x][y] && !f2[phi[x]][phi[y]]) ok = false;
        if (f1[x][y] && !e2[inv[x]][inv[y]]) ok = false;
      }
    count += ok;
  }
  return count;
}

/// Bijections increasing from (e, <1) to (f, <2).
inline std::int64_t increasing_bijections(const dposet::DoublePoset& e, const dposet::DoublePoset& f) {
  if (e.size() != f.size()) return 0;
  const Matrix e1 = matrix_of(e.first()), f2 = matrix_of(f.second());
  std::int64_t count = 0;
  for (const auto& phi : all_permutations(e.size())) {
    bool ok = true;
    for (int x = 0; x < e.size() && ok; ++x)
      for (int y = 0; y < e.size() && ok; ++y)
        if (e1[x][y] && !f2[phi[x]][phi[y]]) ok = false;
    count += ok;
  }
  return count;
}

/// Isomorphism class key: the minimal row-major (r1, r2) adjacency string over
/// all n! relabelings.
inline std::string naive_key(const dposet::DoublePoset& d) {
  const Matrix m1 = matrix_of(d.first()), m2 = matrix_of(d.second());
  const int n = d.size();
  std::string best;
  for (const auto& p : all_permutations(n)) {
    // p[new] = old
    std::string s;
    for (const Matrix* m : {&m1, &m2})
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += (*m)[p[i]][p[j]] ? '1' : '0';
    if (best.empty() || s < best) best = s;
  }
  return std::to_string(n) + ":" + best;
}

inline bool naive_isomorphic(const dposet::DoublePoset& a, const dposet::DoublePoset& b) {
  return a.size() == b.size() && naive_key(a) == naive_key(b);
}

/// Every strict partial order on n points, by scanning all 2^(n(n-1))
/// candidate arc sets (n <= 4).
inline std::vector<dposet::Relation> brute_posets(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) arcs.emplace_back(i, j);
  std::vector<dposet::Relation> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << arcs.size()); ++s) {
    Matrix m(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < arcs.size(); ++k)
      if ((s >> k) & 1u) m[arcs[k].first][arcs[k].second] = true;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (m[i][j] && m[j][i]) ok = false;
        for (int k = 0; k < n && ok; ++k)
          if (m[i][j] && m[j][k] && !m[i][k]) ok = false;
      }
    if (!ok) continue;
    std::vector<dposet::Pair> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m[i][j]) pairs.emplace_back(i, j);
    out.push_back(dposet::Relation::validate(n, pairs));
  }
  return out;
}

/// Double-poset partitions counted over all maps E -> {1..n}, grouped by the
/// composition of fibre sizes of surjections onto an initial segment.
inline std::map<std::vector<int>, std::int64_t> gamma(const dposet::DoublePoset& d) {
  const int n = d.size();
  const Matrix m1 = matrix_of(d.first()), m2 = matrix_of(d.second());
  std::map<std::vector<int>, std::int64_t> out;
  std::vector<int> x(n, 1);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= n;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      x[i] = static_cast<int>(c % n) + 1;
      c /= n;
    }
    bool ok = true;
    for (int e = 0; e < n && ok; ++e)
      for (int f = 0; f < n && ok; ++f) {
        if (!m1[e][f]) continue;
        if (x[e] > x[f]) ok = false;
        if (m2[f][e] && x[e] >= x[f]) ok = false;
      }
    if (!ok) continue;
    const int k = n == 0 ? 0 : *std::max_element(x.begin(), x.end());
    std::vector<int> fibre(k, 0);
    for (int v : x) ++fibre[v - 1];
    if (std::find(fibre.begin(), fibre.end(), 0) != fibre.end()) continue;
    ++out[fibre];
  }
  return out;
}

/// Standard Young tableaux of shape nu, by removing corners recursively.
inline std::int64_t syt_count(std::vector<int> nu) {
  while (!nu.empty() && nu.back() == 0) nu.pop_back();
  if (nu.empty()) return 1;
  std::int64_t total = 0;
  for (std::size_t r = 0; r < nu.size(); ++r) {
    const bool corner = r + 1 == nu.size() || nu[r + 1] < nu[r];
    if (!corner) continue;
    --nu[r];
    total += syt_count(nu);
    ++nu[r];
  }
  return total;
}

/// Monomial expansion of the Schur function s_nu: coefficient of M_C is the
/// number of semistandard tableaux of shape nu and content C (rows weakly
/// increasing, columns strictly increasing).
inline std::map<std::vector<int>, std::int64_t> schur_monomial(const std::vector<int>& nu) {
  const int n = std::accumulate(nu.begin(), nu.end(), 0);
  std::map<std::vector<int>, std::int64_t> out;
  std::function<void(int, std::vector<int>&)> each_composition = [&](int left, std::vector<int>& c) {
    if (left == 0) {
      std::vector<std::vector<int>> rows;
      for (int len : nu) rows.emplace_back(len, 0);
      std::vector<int> remaining = c;
      std::int64_t count = 0;
      std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t x) {
        if (r == rows.size()) {
          ++count;
          return;
        }
        if (x == rows[r].size()) return fill(r + 1, 0);
        for (int v = 1; v <= static_cast<int>(c.size()); ++v) {
          if (remaining[v - 1] == 0) continue;
          if (x > 0 && v < rows[r][x - 1]) continue;
          if (r > 0 && v <= rows[r - 1][x]) continue;
          rows[r][x] = v;
          --remaining[v - 1];
          fill(r, x + 1);
          ++remaining[v - 1];
        }
      };
      fill(0, 0);
      if (count) out[c] = count;
      return;
    }
    for (int p = 1; p <= left; ++p) {
      c.push_back(p);
      each_composition(left - p, c);
      c.pop_back();
    }
  };
  std::vector<int> c;
  each_composition(n, c);
  return out;
}

/// Littlewood-Richardson coefficient c^lambda_{mu,nu}: semistandard fillings
/// of lambda/mu with content nu whose reverse reading word is a lattice word.
/// English notation; rows are read top to bottom, each right to left.
inline std::int64_t lr_coefficient(const std::vector<int>& lambda, const std::vector<int>& mu,
                                   const std::vector<int>& nu) {
  const int size_l = std::accumulate(lambda.begin(), lambda.end(), 0);
  const int size_m = std::accumulate(mu.begin(), mu.end(), 0);
  const int size_n = std::accumulate(nu.begin(), nu.end(), 0);
  if (size_l != size_m + size_n || mu.size() > lambda.size()) return 0;
  for (std::size_t r = 0; r < mu.size(); ++r)
    if (mu[r] > lambda[r]) return 0;
  auto mu_at = [&](std::size_t r) { return r < mu.size() ? mu[r] : 0; };
  // cells in English order: row 0 is the longest (top) row.
  std::vector<std::vector<int>> fill(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) fill[r].assign(lambda[r], 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int x = mu_at(r); x < lambda[r]; ++x) cells.emplace_back(static_cast<int>(r), x);
  std::vector<int> remaining = nu;
  std::int64_t count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == cells.size()) {
      std::vector<int> seen(nu.size() + 1, 0);
      for (std::size_t r = 0; r < lambda.size(); ++r)
        for (int x = lambda[r] - 1; x >= mu_at(r); --x) {
          const int v = fill[r][x];
          ++seen[v - 1];
          if (v > 1 && seen[v - 1] > seen[v - 2]) return;
        }
      ++count;
      return;
    }
    const auto [r, x] = cells[k];
    for (int v = 1; v <= static_cast<int>(nu.size()); ++v) {
      if (remaining[v - 1] == 0) continue;
      if (x > mu_at(r) && v < fill[r][x - 1]) continue;
      if (r > 0 && x >= mu_at(r - 1) && v <= fill[r - 1][x]) continue;
      fill[r][x] = v;
      --remaining[v - 1];
      place(k + 1);
      ++remaining[v - 1];
    }
    fill[r][x] = 0;
  };
  place(0);
  return count;
}

}  // namespace oracle

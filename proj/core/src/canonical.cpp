#include "dposet/canonical.hpp"

#include <algorithm>
#include <map>

#include "dposet/errors.hpp"

namespace dposet {

namespace {

inline unsigned char pair_byte(const DoublePoset& d, int a, int b) {
  const Relation& r1 = d.first();
  const Relation& r2 = d.second();
  return static_cast<unsigned char>(r1.less(a, b) | (r1.less(b, a) << 1) | (r2.less(a, b) << 2) |
                                    (r2.less(b, a) << 3));
}

// Colour refinement: repeatedly split classes by the multisets of colours seen
// through each of the four neighbourhoods. Colours are ranks of sorted
// signatures, hence invariant under relabeling.
std::vector<int> refined_colors(const DoublePoset& d) {
  const int n = d.size();
  std::vector<int> color(n, 0);
  int classes = 1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int i = 0; i < n; ++i) {
      sig[i].push_back(color[i]);
      for (Mask m : {d.first().below(i), d.first().above(i), d.second().below(i), d.second().above(i)}) {
        std::vector<int> seen;
        for (int j : members(m)) seen.push_back(color[j]);
        std::sort(seen.begin(), seen.end());
        sig[i].push_back(static_cast<int>(seen.size()));
        sig[i].insert(sig[i].end(), seen.begin(), seen.end());
      }
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int i = 0; i < n; ++i)
      color[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[i]) - distinct.begin());
    const int next = static_cast<int>(distinct.size());
    if (next == classes) return color;
    classes = next;
  }
}

}  // namespace

struct CanonicalSearch {
  const DoublePoset& d;
  int n;
  std::vector<int> color;
  // twin[u] has bit v when swapping u and v is an automorphism.
  std::vector<Mask> twin;
  std::vector<int> order;
  std::vector<int> best_order;
  std::string cur;
  std::string best;
  bool have_best = false;

  explicit CanonicalSearch(const DoublePoset& dp) : d(dp), n(dp.size()), color(refined_colors(dp)), twin(n, 0) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (color[u] != color[v] || pair_byte(d, u, v) != 0) continue;
        bool same = true;
        for (int w = 0; w < n && same; ++w) {
          if (w != u && w != v) same = pair_byte(d, u, w) == pair_byte(d, v, w);
        }
        if (same) {
          twin[u] |= bit(v);
          twin[v] |= bit(u);
        }
      }
    }
    order.reserve(n);
    cur.assign(1, static_cast<char>(n));
  }

  void run() { dfs(0, 0, false); }

  void dfs(int k, Mask placed, bool below_best) {
    if (k == n) {
      if (!have_best || below_best) {
        best = cur;
        best_order = order;
        have_best = true;
      }
      return;
    }
    int min_color = n;
    for (int e = 0; e < n; ++e) {
      if (!contains(placed, e)) min_color = std::min(min_color, color[e]);
    }
    Mask tried = 0;
    const std::size_t base = cur.size();
    for (int e = 0; e < n; ++e) {
      if (contains(placed, e) || color[e] != min_color || (twin[e] & tried)) continue;
      tried |= bit(e);
      bool below = below_best;
      bool prune = false;
      for (int j = 0; j < k; ++j) {
        const char b = static_cast<char>(pair_byte(d, order[j], e));
        cur.push_back(b);
        if (have_best && !below) {
          const auto cb = static_cast<unsigned char>(b);
          const auto bb = static_cast<unsigned char>(best[base + j]);
          if (cb > bb) {
            prune = true;
            break;
          }
          if (cb < bb) below = true;
        }
      }
      if (!prune) {
        order.push_back(e);
        dfs(k + 1, placed | bit(e), below);
        order.pop_back();
      }
      cur.resize(base);
    }
  }
};

Canonicalization canonicalize(const DoublePoset& d, int cap) {
  if (d.size() > cap)
    throw SizeCapError("canonicalization capped at n = " + std::to_string(cap) + ", got " +
                       std::to_string(d.size()));
  CanonicalSearch search(d);
  search.run();
  std::vector<int> relabeling(d.size());
  for (int pos = 0; pos < d.size(); ++pos) relabeling[search.best_order[pos]] = pos;
  return {CanonicalForm(std::move(search.best)), std::move(relabeling)};
}

CanonicalForm canonical_form(const DoublePoset& d, int cap) { return canonicalize(d, cap).form; }

bool isomorphic(const DoublePoset& a, const DoublePoset& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::string CanonicalForm::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  for (unsigned char c : key_) {
    s += digits[c >> 4];
    s += digits[c & 15];
  }
  return s;
}

CanonicalForm CanonicalForm::from_hex(std::string_view hex) {
  auto nibble = [&](std::size_t i) {
    const char c = hex[i];
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ParseError(1, static_cast<int>(i) + 1, "invalid hex digit");
  };
  if (hex.empty() || hex.size() % 2) throw ParseError(1, 1, "key must be a nonempty even-length hex string");
  std::string key;
  for (std::size_t i = 0; i < hex.size(); i += 2) key += static_cast<char>(nibble(i) * 16 + nibble(i + 1));
  const int n = static_cast<unsigned char>(key[0]);
  if (key.size() != 1 + static_cast<std::size_t>(n) * (n - 1) / 2)
    throw ParseError(1, 1, "key length does not match its grade");
  CanonicalForm form(std::move(key));
  form.decode();  // validates orders
  return form;
}

DoublePoset CanonicalForm::decode() const {
  const int n = grade();
  std::vector<Pair> first, second;
  std::size_t at = 1;
  for (int k = 1; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      const auto b = static_cast<unsigned char>(key_[at++]);
      if (b & 1) first.emplace_back(j, k);
      if (b & 2) first.emplace_back(k, j);
      if (b & 4) second.emplace_back(j, k);
      if (b & 8) second.emplace_back(k, j);
    }
  }
  return {Relation::validate(n, first), Relation::validate(n, second)};
}

}  // namespace dposet

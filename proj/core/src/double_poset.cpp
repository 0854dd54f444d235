#include "dposet/double_poset.hpp"

#include <string>

#include "dposet/errors.hpp"

namespace dposet {

DoublePoset::DoublePoset(Relation first, Relation second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_.size() != second_.size())
    throw SizeMismatchError("orders on " + std::to_string(first_.size()) + " and " +
                            std::to_string(second_.size()) + " elements");
}

DoublePoset DoublePoset::point() { return antichain(1); }

DoublePoset DoublePoset::antichain(int n) { return {Relation(n), Relation(n)}; }

DoublePoset DoublePoset::relabeled(std::span<const int> image) const {
  return {first_.relabeled(image), second_.relabeled(image)};
}

DoublePoset DoublePoset::restricted(Mask subset) const {
  return {induced(first_, subset), induced(second_, subset)};
}

DoublePoset compose(const DoublePoset& e, const DoublePoset& f) {
  return {disjoint_union(e.first(), f.first(), false),
          disjoint_union(e.second(), f.second(), true)};
}

std::vector<std::pair<DoublePoset, DoublePoset>> decompose(const DoublePoset& d) {
  std::vector<std::pair<DoublePoset, DoublePoset>> out;
  for (const auto& [lower, upper] : decompositions(d.first()))
    out.emplace_back(d.restricted(lower), d.restricted(upper));
  return out;
}

namespace {

// Backtracking over bijections e -> f, assigning e's elements in index order.
// Every constraint between a newly assigned element and the earlier ones is
// checked on assignment, so each complete assignment is valid.
class BijectionSearch {
 public:
  BijectionSearch(const DoublePoset& e, const DoublePoset& f, bool inverse_too)
      : e_(e), f_(f), inverse_too_(inverse_too), image_(e.size(), -1), preimage_(f.size(), -1) {}

  template <typename Visit>
  void run(Visit&& visit) {
    if (e_.size() != f_.size()) return;
    step(0, visit);
  }

 private:
  bool admissible(int x, int fx) const {
    const Relation& e1 = e_.first();
    const Relation& e2 = e_.second();
    const Relation& f1 = f_.first();
    const Relation& f2 = f_.second();
    for (int y = 0; y < x; ++y) {
      const int fy = image_[y];
      if (e1.less(y, x) && !f2.less(fy, fx)) return false;
      if (e1.less(x, y) && !f2.less(fx, fy)) return false;
      if (inverse_too_) {
        if (f1.less(fy, fx) && !e2.less(y, x)) return false;
        if (f1.less(fx, fy) && !e2.less(x, y)) return false;
      }
    }
    return true;
  }

  template <typename Visit>
  void step(int x, Visit& visit) {
    if (x == e_.size()) {
      visit(image_);
      return;
    }
    for (int fx = 0; fx < f_.size(); ++fx) {
      if (preimage_[fx] != -1 || !admissible(x, fx)) continue;
      image_[x] = fx;
      preimage_[fx] = x;
      step(x + 1, visit);
      preimage_[fx] = -1;
    }
    image_[x] = -1;
  }

  const DoublePoset& e_;
  const DoublePoset& f_;
  bool inverse_too_;
  Bijection image_;
  std::vector<int> preimage_;
};

}  // namespace

std::vector<Bijection> increasing_bijections(const DoublePoset& e, const DoublePoset& f) {
  std::vector<Bijection> out;
  BijectionSearch(e, f, false).run([&](const Bijection& phi) { out.push_back(phi); });
  return out;
}

std::vector<Bijection> pictures(const DoublePoset& e, const DoublePoset& f) {
  std::vector<Bijection> out;
  BijectionSearch(e, f, true).run([&](const Bijection& phi) { out.push_back(phi); });
  return out;
}

std::int64_t pairing_basis(const DoublePoset& e, const DoublePoset& f) {
  std::int64_t count = 0;
  BijectionSearch(e, f, true).run([&](const Bijection&) { ++count; });
  return count;
}

DoublePoset internal_graph(const DoublePoset& e, const DoublePoset& f, const Bijection& phi) {
  const int n = e.size();
  if (f.size() != n || static_cast<int>(phi.size()) != n)
    throw NotIncreasingError("map is not a bijection between the ground sets");
  Bijection inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    if (phi[x] < 0 || phi[x] >= n || inverse[phi[x]] != -1)
      throw NotIncreasingError("map is not a bijection between the ground sets");
    inverse[phi[x]] = x;
  }
  for (const auto& [x, y] : e.first().pairs()) {
    if (!f.second().less(phi[x], phi[y]))
      throw NotIncreasingError("map is not increasing from the first order of E to the second order of F");
  }
  return {f.first().relabeled(inverse), e.second()};
}

std::vector<DoublePoset> internal_product_basis(const DoublePoset& e, const DoublePoset& f) {
  std::vector<DoublePoset> out;
  for (const Bijection& phi : increasing_bijections(e, f)) out.push_back(internal_graph(e, f, phi));
  return out;
}

DoublePoset from_permutation(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<Pair> chain;
  for (int i = 1; i < n; ++i) chain.emplace_back(sigma(i) - 1, sigma(i + 1) - 1);
  return {Relation::validate(n, chain), Relation::chain(n)};
}

DoublePoset pi_from_partition(const Partition& nu) {
  struct Cell {
    int x, y;
  };
  std::vector<Cell> cells;
  for (int y = 0; y < nu.length(); ++y) {
    for (int x = 0; x < nu.parts()[y]; ++x) cells.push_back({x, y});
  }
  const int n = static_cast<int>(cells.size());
  std::vector<Pair> first, second;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Cell a = cells[i], b = cells[j];
      if (a.x <= b.x && a.y <= b.y) first.emplace_back(i, j);
      if (a.y > b.y || (a.y == b.y && a.x < b.x)) second.emplace_back(i, j);
    }
  }
  return {Relation::validate(n, first), Relation::validate(n, second)};
}

DoublePoset tilde(const DoublePoset& d) { return {d.first().opposite(), d.second().opposite()}; }

bool is_special(const DoublePoset& d) { return d.second().is_total(); }

bool is_naturally_labelled(const DoublePoset& d) {
  return is_special(d) && d.first().is_subset_of(d.second());
}

std::vector<int> labelling(const DoublePoset& d) {
  if (!is_special(d)) throw NotSpecialError("second order is not total");
  std::vector<int> omega(d.size());
  for (int e = 0; e < d.size(); ++e) omega[e] = 1 + popcount(d.second().below(e));
  return omega;
}

}  // namespace dposet

#include "dposet/perm_algebra.hpp"

#include "dposet/errors.hpp"

namespace dposet {

namespace {

void interleave(const std::vector<int>& a, std::size_t i, const std::vector<int>& b, std::size_t j,
                std::vector<int>& cur, SElement& out) {
  if (i == a.size() && j == b.size()) {
    out.add_term(Permutation(cur), 1);
    return;
  }
  if (i < a.size()) {
    cur.push_back(a[i]);
    interleave(a, i + 1, b, j, cur, out);
    cur.pop_back();
  }
  if (j < b.size()) {
    cur.push_back(b[j]);
    interleave(a, i, b, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SElement shifted_shuffle(const Permutation& sigma, const Permutation& tau) {
  std::vector<int> shifted = tau.word();
  for (int& v : shifted) v += sigma.size();
  SElement out;
  std::vector<int> cur;
  cur.reserve(sigma.size() + tau.size());
  interleave(sigma.word(), 0, shifted, 0, cur, out);
  return out;
}

std::vector<std::pair<Permutation, Permutation>> coproduct_s(const Permutation& sigma) {
  std::vector<std::pair<Permutation, Permutation>> out;
  const auto& w = sigma.word();
  for (std::size_t cut = 0; cut <= w.size(); ++cut) {
    const std::span<const int> all(w);
    out.emplace_back(standardize(all.first(cut)), standardize(all.subspan(cut)));
  }
  return out;
}

SElement product_s(const SElement& a, const SElement& b) {
  return bilinear_map<Permutation>(a, b, shifted_shuffle);
}

STensor coproduct_s(const SElement& a) {
  return linear_map<std::pair<Permutation, Permutation>>(a, [](const Permutation& p) {
    STensor t;
    for (auto& term : coproduct_s(p)) t.add_term(term, 1);
    return t;
  });
}

STensor tensor_product_s(const STensor& x, const STensor& y) {
  using Key = std::pair<Permutation, Permutation>;
  return bilinear_map<Key>(x, y, [](const Key& p, const Key& q) {
    STensor r;
    const SElement left = shifted_shuffle(p.first, q.first);
    const SElement right = shifted_shuffle(p.second, q.second);
    for (const auto& [l, cl] : left) {
      for (const auto& [rr, cr] : right) r.add_term({l, rr}, checked_mul(cl, cr));
    }
    return r;
  });
}

Coeff joellenbeck(const SElement& a, const SElement& b) {
  Coeff total = 0;
  for (const auto& [sigma, c] : a) {
    const Coeff other = b.coefficient(sigma.inverse());
    if (other != 0) total = checked_add(total, checked_mul(c, other));
  }
  return total;
}

SElement internal_s(const SElement& a, const SElement& b) {
  return bilinear_map<Permutation>(a, b, [](const Permutation& s, const Permutation& t) {
    if (s.size() != t.size()) return SElement();
    return SElement(s.compose(t));
  });
}

Composition descent_composition(const Permutation& sigma) {
  if (sigma.size() == 0) throw EmptyError("descent composition of the empty permutation");
  std::vector<int> runs{1};
  for (int i = 2; i <= sigma.size(); ++i) {
    if (sigma(i) > sigma(i - 1))
      ++runs.back();
    else
      runs.push_back(1);
  }
  return Composition(std::move(runs));
}

std::vector<Permutation> linear_extensions_special(const DoublePoset& d) {
  const std::vector<int> omega = labelling(d);
  std::vector<Permutation> out;
  for (const auto& ext : linear_extensions(d.first())) {
    std::vector<int> word;
    word.reserve(ext.size());
    for (int e : ext) word.push_back(omega[e]);
    out.emplace_back(std::move(word));
  }
  return out;
}

SElement linear_extension_map(const DoublePoset& d) {
  SElement r;
  for (auto& sigma : linear_extensions_special(d)) r.add_term(sigma, 1);
  return r;
}

SElement linear_extension_map(const DElement& a) {
  return linear_map<Permutation>(a, [](const CanonicalForm& x) { return linear_extension_map(x.decode()); });
}

}  // namespace dposet

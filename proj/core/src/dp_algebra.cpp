#include "dposet/dp_algebra.hpp"

#include <map>

namespace dposet {

DElement basis(const DoublePoset& d) { return DElement(canonical_form(d)); }

DElement unit() { return DElement(CanonicalForm()); }

namespace {

DElement product_basis(const CanonicalForm& a, const CanonicalForm& b) {
  return basis(compose(a.decode(), b.decode()));
}

DTensor coproduct_basis(const CanonicalForm& a) {
  DTensor t;
  for (const auto& [lower, upper] : decompose(a.decode()))
    t.add_term({canonical_form(lower), canonical_form(upper)}, 1);
  return t;
}

DElement antipode_basis(const CanonicalForm& x, std::map<CanonicalForm, DElement>& memo) {
  if (x.grade() == 0) return unit();
  if (auto it = memo.find(x); it != memo.end()) return it->second;
  DElement s = -1 * DElement(x);
  for (const auto& [pair, c] : coproduct_basis(x)) {
    const auto& [left, right] = pair;
    if (left.grade() == 0 || right.grade() == 0) continue;
    s -= c * product(antipode_basis(left, memo), DElement(right));
  }
  memo.emplace(x, s);
  return s;
}

}  // namespace

DElement product(const DElement& a, const DElement& b) {
  return bilinear_map<CanonicalForm>(a, b, product_basis);
}

DTensor coproduct(const DElement& a) {
  return linear_map<std::pair<CanonicalForm, CanonicalForm>>(a, coproduct_basis);
}

Coeff counit(const DElement& a) { return a.coefficient(CanonicalForm()); }

DElement antipode(const DElement& a) {
  std::map<CanonicalForm, DElement> memo;
  return linear_map<CanonicalForm>(a, [&](const CanonicalForm& x) { return antipode_basis(x, memo); });
}

Coeff pairing(const DElement& a, const DElement& b) {
  return bilinear_form(a, b, [](const CanonicalForm& x, const CanonicalForm& y) -> Coeff {
    if (x.grade() != y.grade()) return 0;
    return pairing_basis(x.decode(), y.decode());
  });
}

DElement internal_product(const DElement& a, const DElement& b) {
  return bilinear_map<CanonicalForm>(a, b, [](const CanonicalForm& x, const CanonicalForm& y) {
    DElement r;
    if (x.grade() != y.grade()) return r;
    for (const DoublePoset& g : internal_product_basis(x.decode(), y.decode()))
      r.add_term(canonical_form(g), 1);
    return r;
  });
}

DTensor tensor_product(const DTensor& x, const DTensor& y) {
  using Key = std::pair<CanonicalForm, CanonicalForm>;
  return bilinear_map<Key>(x, y, [](const Key& p, const Key& q) {
    DTensor r;
    const DElement left = product_basis(p.first, q.first);
    const DElement right = product_basis(p.second, q.second);
    for (const auto& [l, cl] : left) {
      for (const auto& [rr, cr] : right) r.add_term({l, rr}, checked_mul(cl, cr));
    }
    return r;
  });
}

DElement multiply(const DTensor& t) {
  DElement r;
  for (const auto& [pair, c] : t) r += c * product_basis(pair.first, pair.second);
  return r;
}

DElement multiply_antipode_left(const DTensor& t) {
  std::map<CanonicalForm, DElement> memo;
  DElement r;
  for (const auto& [pair, c] : t) r += c * product(antipode_basis(pair.first, memo), DElement(pair.second));
  return r;
}

DElement multiply_antipode_right(const DTensor& t) {
  std::map<CanonicalForm, DElement> memo;
  DElement r;
  for (const auto& [pair, c] : t) r += c * product(DElement(pair.first), antipode_basis(pair.second, memo));
  return r;
}

DElement counit_left(const DTensor& t) {
  DElement r;
  for (const auto& [pair, c] : t) {
    if (pair.first.grade() == 0) r.add_term(pair.second, c);
  }
  return r;
}

DElement counit_right(const DTensor& t) {
  DElement r;
  for (const auto& [pair, c] : t) {
    if (pair.second.grade() == 0) r.add_term(pair.first, c);
  }
  return r;
}

DTensor3 coproduct_left(const DTensor& t) {
  DTensor3 r;
  for (const auto& [pair, c] : t) {
    for (const auto& [inner, ci] : coproduct_basis(pair.first))
      r.add_term({inner.first, inner.second, pair.second}, checked_mul(c, ci));
  }
  return r;
}

DTensor3 coproduct_right(const DTensor& t) {
  DTensor3 r;
  for (const auto& [pair, c] : t) {
    for (const auto& [inner, ci] : coproduct_basis(pair.second))
      r.add_term({pair.first, inner.first, inner.second}, checked_mul(c, ci));
  }
  return r;
}

Coeff pairing(const DElement& a, const DElement& b, const DTensor& t) {
  Coeff total = 0;
  for (const auto& [pair, c] : t) {
    const Coeff left = pairing(a, DElement(pair.first));
    if (left == 0) continue;
    const Coeff right = pairing(b, DElement(pair.second));
    total = checked_add(total, checked_mul(c, checked_mul(left, right)));
  }
  return total;
}

}  // namespace dposet

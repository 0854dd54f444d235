#include "dposet/qsym.hpp"

#include <string>

#include "dposet/errors.hpp"

namespace dposet {

namespace {

class PartitionCounter {
 public:
  explicit PartitionCounter(const DoublePoset& d) : d_(d), n_(d.size()), value_(n_, 0), fibre_(n_ + 1, 0) {}

  QElement run() {
    step(0, 0, 0);
    return out_;
  }

 private:
  bool admissible(int e, int v) const {
    for (int f = 0; f < e; ++f) {
      if (d_.first().less(f, e)) {
        if (value_[f] > v) return false;
        if (value_[f] == v && d_.second().less(e, f)) return false;
      }
      if (d_.first().less(e, f)) {
        if (v > value_[f]) return false;
        if (v == value_[f] && d_.second().less(f, e)) return false;
      }
    }
    return true;
  }

  // `used` counts distinct values taken so far, `top` is the largest one.
  void step(int e, int used, int top) {
    if (top - used > n_ - e) return;  // gaps below top can no longer be filled
    if (e == n_) {
      if (used != top) return;
      out_.add_term(Composition(std::vector<int>(fibre_.begin() + 1, fibre_.begin() + 1 + top)), 1);
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (!admissible(e, v)) continue;
      value_[e] = v;
      const bool fresh = fibre_[v]++ == 0;
      step(e + 1, used + fresh, std::max(top, v));
      --fibre_[v];
    }
  }

  const DoublePoset& d_;
  int n_;
  std::vector<int> value_;
  std::vector<int> fibre_;
  QElement out_;
};

void quasi_shuffle(const std::vector<int>& a, std::size_t i, const std::vector<int>& b, std::size_t j,
                   std::vector<int>& cur, QElement& out) {
  if (i == a.size() && j == b.size()) {
    out.add_term(Composition(cur), 1);
    return;
  }
  if (i < a.size()) {
    cur.push_back(a[i]);
    quasi_shuffle(a, i + 1, b, j, cur, out);
    cur.pop_back();
  }
  if (j < b.size()) {
    cur.push_back(b[j]);
    quasi_shuffle(a, i, b, j + 1, cur, out);
    cur.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    cur.push_back(a[i] + b[j]);
    quasi_shuffle(a, i + 1, b, j + 1, cur, out);
    cur.pop_back();
  }
}

void refinements(const std::vector<int>& parts, std::size_t i, std::vector<int>& cur, QElement& out) {
  if (i == parts.size()) {
    out.add_term(Composition(cur), 1);
    return;
  }
  // Split parts[i] into an ordered sequence of positive summands.
  const std::size_t base = cur.size();
  const int p = parts[i];
  for (unsigned cuts = 0; cuts < (1u << (p - 1)); ++cuts) {
    int run = 1;
    for (int k = 1; k < p; ++k) {
      if ((cuts >> (k - 1)) & 1u) {
        cur.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    cur.push_back(run);
    refinements(parts, i + 1, cur, out);
    cur.resize(base);
  }
}

}  // namespace

QElement gamma(const DoublePoset& d) {
  if (d.size() > kGammaCap)
    throw SizeCapError("gamma capped at n = " + std::to_string(kGammaCap));
  return PartitionCounter(d).run();
}

QElement gamma(const DElement& a) {
  return linear_map<Composition>(a, [](const CanonicalForm& x) { return gamma(x.decode()); });
}

QElement qsym_product(const QElement& a, const QElement& b) {
  return bilinear_map<Composition>(a, b, [](const Composition& x, const Composition& y) {
    QElement out;
    std::vector<int> cur;
    quasi_shuffle(x.parts(), 0, y.parts(), 0, cur, out);
    return out;
  });
}

QTensor qsym_coproduct(const QElement& a) {
  return linear_map<std::pair<Composition, Composition>>(a, [](const Composition& c) {
    QTensor t;
    const auto& p = c.parts();
    for (std::size_t cut = 0; cut <= p.size(); ++cut) {
      t.add_term({Composition(std::vector<int>(p.begin(), p.begin() + cut)),
                  Composition(std::vector<int>(p.begin() + cut, p.end()))},
                 1);
    }
    return t;
  });
}

QElement fundamental_to_monomial(const Composition& c) {
  QElement out;
  std::vector<int> cur;
  refinements(c.parts(), 0, cur, out);
  return out;
}

QElement fundamental_of(const SElement& a) {
  return linear_map<Composition>(a, [](const Permutation& sigma) {
    if (sigma.size() == 0) return QElement(Composition());
    return fundamental_to_monomial(descent_composition(sigma));
  });
}

}  // namespace dposet

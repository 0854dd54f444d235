#include "cli/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "dposet/dposet.hpp"

namespace dposet::cli {

namespace {

constexpr int kExhaustive = 4;
constexpr int kExhaustiveTriples = 3;
constexpr std::size_t kSampleSize = 64;
constexpr std::size_t kTupleSample = 300;

struct Basis {
  CanonicalForm form;
  DoublePoset poset;
};

// The objects a suite quantifies over: every class up to kExhaustive, a
// seeded sample above it.
class Universe {
 public:
  Universe(int max_n, std::uint64_t seed) : max_n_(max_n), rng_(seed) {}

  int max_n() const { return max_n_; }
  std::mt19937_64& rng() { return rng_; }

  bool exhaustive(int n) const { return n <= kExhaustive; }

  const std::vector<Basis>& classes(int n) {
    auto it = classes_.find(n);
    if (it != classes_.end()) return it->second;
    std::vector<CanonicalForm> forms;
    if (exhaustive(n)) {
      forms = all_double_posets(n);
    } else {
      std::set<CanonicalForm> seen;
      for (std::size_t k = 0; k < kSampleSize; ++k) seen.insert(canonical_form(random_double_poset(n, rng_)));
      forms.assign(seen.begin(), seen.end());
    }
    std::vector<Basis> out;
    for (auto& f : forms) out.push_back({f, f.decode()});
    return classes_.emplace(n, std::move(out)).first->second;
  }

  const std::vector<DoublePoset>& special(int n) {
    auto it = special_.find(n);
    if (it != special_.end()) return it->second;
    std::vector<DoublePoset> out;
    if (exhaustive(n)) {
      out = all_special(n);
    } else {
      std::set<std::vector<Pair>> seen;
      for (std::size_t k = 0; k < kSampleSize; ++k) {
        Relation r = random_poset(n, rng_);
        if (seen.insert(r.pairs()).second) out.emplace_back(std::move(r), Relation::chain(n));
      }
    }
    return special_.emplace(n, std::move(out)).first->second;
  }

  // Calls fn(a, b) over a x b, or over a seeded sample of it when either side
  // is itself sampled.
  template <typename T, typename F>
  void pairs(const std::vector<T>& a, const std::vector<T>& b, bool exhaustive, F&& fn) {
    if (a.empty() || b.empty()) return;
    if (exhaustive) {
      for (const T& x : a)
        for (const T& y : b) fn(x, y);
      return;
    }
    for (std::size_t k = 0; k < kTupleSample; ++k) fn(a[rng_() % a.size()], b[rng_() % b.size()]);
  }

  template <typename T, typename F>
  void triples(const std::vector<T>& a, const std::vector<T>& b, const std::vector<T>& c, bool exhaustive,
               F&& fn) {
    if (a.empty() || b.empty() || c.empty()) return;
    if (exhaustive) {
      for (const T& x : a)
        for (const T& y : b)
          for (const T& z : c) fn(x, y, z);
      return;
    }
    for (std::size_t k = 0; k < kTupleSample; ++k)
      fn(a[rng_() % a.size()], b[rng_() % b.size()], c[rng_() % c.size()]);
  }

 private:
  int max_n_;
  std::mt19937_64 rng_;
  std::map<int, std::vector<Basis>> classes_;
  std::map<int, std::vector<DoublePoset>> special_;
};

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  PropertyResult& property(const std::string& name, bool informational = false) {
    for (auto& p : report_.properties) {
      if (p.name == name) return p;
    }
    report_.properties.push_back({name, 0, 0, informational});
    return report_.properties.back();
  }

  void record(const std::string& name, bool ok) {
    PropertyResult& p = property(name);
    ++p.cases;
    if (!ok) ++p.failures;
  }

 private:
  SuiteReport& report_;
};

std::vector<Permutation> permutations_of(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// ----------------------------------------------------------------------------

void hopf_suite(Universe& u, Recorder& rec) {
  const int max_n = u.max_n();
  for (int n = 0; n <= max_n; ++n) {
    for (const Basis& x : u.classes(n)) {
      const DElement ex(x.form);
      const DTensor d = coproduct(ex);
      rec.record("hopf.counit", counit_left(d) == ex && counit_right(d) == ex);
      rec.record("hopf.coassociativity", coproduct_left(d) == coproduct_right(d));
      const DElement expected = counit(ex) * unit();
      rec.record("hopf.antipode-left", multiply_antipode_left(d) == expected);
      rec.record("hopf.antipode-right", multiply_antipode_right(d) == expected);
      bool graded = true;
      for (const auto& [pair, c] : d) graded = graded && pair.first.grade() + pair.second.grade() == n;
      rec.record("hopf.coproduct-grading", graded);
    }
  }
  for (int p = 0; p <= max_n; ++p) {
    for (int q = 0; p + q <= max_n; ++q) {
      u.pairs(u.classes(p), u.classes(q), u.exhaustive(p) && u.exhaustive(q), [&](const Basis& a, const Basis& b) {
        const DElement ea(a.form), eb(b.form);
        const DElement ab = product(ea, eb);
        rec.record("hopf.bialgebra", coproduct(ab) == tensor_product(coproduct(ea), coproduct(eb)));
        rec.record("hopf.counit-multiplicative", counit(ab) == counit(ea) * counit(eb));
        rec.record("hopf.product-grading", ab.size() == 1 && ab.begin()->first.grade() == p + q);
      });
    }
  }
  for (int p = 1; p <= max_n; ++p) {
    for (int q = 1; p + q <= max_n; ++q) {
      for (int r = 1; p + q + r <= max_n; ++r) {
        const bool exhaustive = p + q + r <= kExhaustive;
        u.triples(u.classes(p), u.classes(q), u.classes(r), exhaustive,
                  [&](const Basis& a, const Basis& b, const Basis& c) {
                    const DElement ea(a.form), eb(b.form), ec(c.form);
                    rec.record("hopf.associativity", product(product(ea, eb), ec) == product(ea, product(eb, ec)));
                  });
      }
    }
  }
}

void selfdual_suite(Universe& u, Recorder& rec) {
  const int max_n = u.max_n();
  for (int n = 0; n <= max_n; ++n) {
    u.pairs(u.classes(n), u.classes(n), u.exhaustive(n), [&](const Basis& a, const Basis& b) {
      rec.record("selfdual.pairing-symmetry", pairing_basis(a.poset, b.poset) == pairing_basis(b.poset, a.poset));
    });
  }
  for (int n = 0; n <= max_n; ++n) {
    for (const Basis& g : u.classes(n)) {
      struct Split {
        int p;
        DoublePoset lower, upper;
      };
      std::vector<Split> splits;
      for (auto& [lower, upper] : decompose(g.poset)) splits.push_back({lower.size(), lower, upper});
      for (int p = 0; p <= n; ++p) {
        u.pairs(u.classes(p), u.classes(n - p), u.exhaustive(p) && u.exhaustive(n - p),
                [&](const Basis& e, const Basis& f) {
                  const std::int64_t lhs = pairing_basis(compose(e.poset, f.poset), g.poset);
                  std::int64_t rhs = 0;
                  for (const Split& s : splits) {
                    if (s.p != p) continue;
                    rhs += pairing_basis(e.poset, s.lower) * pairing_basis(f.poset, s.upper);
                  }
                  rec.record("selfdual.duality", lhs == rhs);
                });
      }
    }
  }
}

void internal_suite(Universe& u, Recorder& rec) {
  const int max_n = u.max_n();
  for (int n = 0; n <= std::min(max_n, 5); ++n) {
    const std::vector<Permutation> perms = permutations_of(n);
    std::vector<DElement> ps;
    for (const auto& s : perms) ps.push_back(basis(from_permutation(s)));
    for (std::size_t i = 0; i < perms.size(); ++i) {
      for (std::size_t j = 0; j < perms.size(); ++j) {
        rec.record("internal.permutation-composition",
                   internal_product(ps[i], ps[j]) == basis(from_permutation(perms[i].compose(perms[j]))));
      }
    }
  }
  for (int n = 0; n <= max_n; ++n) {
    u.pairs(u.classes(n), u.classes(n), u.exhaustive(n), [&](const Basis& a, const Basis& b) {
      bool ok = true;
      for (const auto& [k, c] : internal_product(DElement(a.form), DElement(b.form))) ok = ok && k.grade() == n;
      rec.record("internal.degree", ok);
    });
    const bool exhaustive = n <= kExhaustiveTriples;
    u.triples(u.classes(n), u.classes(n), u.classes(n), exhaustive,
              [&](const Basis& e, const Basis& f, const Basis& g) {
                const DElement ee(e.form), ef(f.form), eg(g.form);
                rec.record("internal.adjunction",
                           pairing(internal_product(ee, ef), eg) == pairing(ee, internal_product(ef, eg)));
              });
  }
  rec.property("internal.associativity", true);
  for (int n = 0; n <= std::min(max_n, kExhaustiveTriples); ++n) {
    u.triples(u.classes(n), u.classes(n), u.classes(n), true, [&](const Basis& e, const Basis& f, const Basis& g) {
      const DElement ee(e.form), ef(f.form), eg(g.form);
      rec.record("internal.associativity",
                 internal_product(internal_product(ee, ef), eg) == internal_product(ee, internal_product(ef, eg)));
    });
  }
}

void lmap_suite(Universe& u, Recorder& rec) {
  const int max_n = u.max_n();
  for (int p = 0; p <= max_n; ++p) {
    for (int q = 0; p + q <= max_n; ++q) {
      u.pairs(u.special(p), u.special(q), u.exhaustive(p) && u.exhaustive(q),
              [&](const DoublePoset& a, const DoublePoset& b) {
                const DElement ab = product(basis(a), basis(b));
                rec.record("lmap.algebra-morphism",
                           linear_extension_map(ab) == product_s(linear_extension_map(a), linear_extension_map(b)));
                rec.record("lmap.special-closed-under-product", is_special(ab.begin()->first.decode()));
                if (is_naturally_labelled(a) && is_naturally_labelled(b))
                  rec.record("lmap.natural-closed-under-product", is_naturally_labelled(compose(a, b)));
              });
    }
  }
  for (int n = 0; n <= max_n; ++n) {
    const std::vector<Permutation> perms = permutations_of(n);
    for (const DoublePoset& d : u.special(n)) {
      const SElement l = linear_extension_map(d);
      STensor via_d;
      bool closed = true, natural_closed = true;
      for (const auto& [lower, upper] : decompose(d)) {
        closed = closed && is_special(lower) && is_special(upper);
        if (is_naturally_labelled(d))
          natural_closed = natural_closed && is_naturally_labelled(lower) && is_naturally_labelled(upper);
        for (const auto& [x, cx] : linear_extension_map(lower))
          for (const auto& [y, cy] : linear_extension_map(upper)) via_d.add_term({x, y}, cx * cy);
      }
      rec.record("lmap.coalgebra-morphism", coproduct_s(l) == via_d);
      rec.record("lmap.special-closed-under-decomposition", closed);
      rec.record("lmap.natural-closed-under-decomposition", natural_closed);
      bool duality = true;
      for (const Permutation& s : perms)
        duality = duality && ((l.coefficient(s) != 0) == fits_into(s.inverse().word(), d));
      rec.record("lmap.extension-fits-duality", duality);
    }
    u.pairs(u.special(n), u.special(n), u.exhaustive(n), [&](const DoublePoset& a, const DoublePoset& b) {
      const SElement la = linear_extension_map(a), lb = linear_extension_map(b);
      rec.record("lmap.isometry", pairing_basis(a, b) == joellenbeck(la, lb));
      rec.record("lmap.internal-product",
                 linear_extension_map(internal_product(basis(a), basis(b))) == internal_s(la, lb));
    });
  }
}

// Monomial expansion of the Schur function s_nu: coefficient of M_C is the
// number of semistandard tableaux of shape nu and content C.
QElement schur_monomial(const Partition& nu) {
  const int n = nu.weight();
  QElement out;
  for (const Composition& c : compositions_of(n)) {
    std::vector<std::vector<int>> rows;
    for (int len : nu.parts()) rows.emplace_back(len, 0);
    std::vector<int> left = c.parts();
    std::int64_t count = 0;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t x) {
      if (r == rows.size()) {
        ++count;
        return;
      }
      if (x == rows[r].size()) return fill(r + 1, 0);
      for (int v = 1; v <= c.length(); ++v) {
        if (left[v - 1] == 0) continue;
        if (x > 0 && v < rows[r][x - 1]) continue;
        if (r > 0 && v <= rows[r - 1][x]) continue;
        rows[r][x] = v;
        --left[v - 1];
        fill(r, x + 1);
        ++left[v - 1];
      }
    };
    fill(0, 0);
    out.add_term(c, count);
  }
  return out;
}

void qsym_suite(Universe& u, Recorder& rec) {
  const int max_n = std::min(u.max_n(), kGammaCap);
  for (int p = 0; p <= max_n; ++p) {
    for (int q = 0; p + q <= max_n; ++q) {
      u.pairs(u.classes(p), u.classes(q), u.exhaustive(p) && u.exhaustive(q), [&](const Basis& a, const Basis& b) {
        rec.record("qsym.gamma-algebra-morphism",
                   gamma(compose(a.poset, b.poset)) == qsym_product(gamma(a.poset), gamma(b.poset)));
      });
    }
  }
  for (int n = 0; n <= max_n; ++n) {
    for (const Basis& x : u.classes(n)) {
      const QElement g = gamma(x.poset);
      QTensor via_d;
      for (const auto& [lower, upper] : decompose(x.poset)) {
        for (const auto& [a, ca] : gamma(lower))
          for (const auto& [b, cb] : gamma(upper)) via_d.add_term({a, b}, ca * cb);
      }
      rec.record("qsym.gamma-coalgebra-morphism", qsym_coproduct(g) == via_d);
      bool homogeneous = true;
      for (const auto& [c, k] : g) homogeneous = homogeneous && c.weight() == n;
      rec.record("qsym.homogeneity", homogeneous);
    }
    for (const DoublePoset& d : u.special(n))
      rec.record("qsym.fundamental-of-extensions-equals-gamma", fundamental_of(linear_extension_map(d)) == gamma(d));
    for (const Partition& nu : partitions_of(n))
      rec.record("qsym.schur-specialization", gamma(pi_from_partition(nu)) == schur_monomial(nu));
  }
}

std::int64_t hook_length_count(const Partition& nu) {
  const auto& parts = nu.parts();
  std::int64_t num = 1;
  for (int k = 2; k <= nu.weight(); ++k) num *= k;
  std::int64_t den = 1;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int x = 0; x < parts[r]; ++x) {
      int above = 0;
      for (std::size_t s = r + 1; s < parts.size() && parts[s] > x; ++s) ++above;
      den *= parts[r] - x + above;
    }
  }
  return num / den;
}

void lr_suite(Universe& u, Recorder& rec) {
  const int max_n = u.max_n();
  for (int n = 0; n <= max_n; ++n) {
    const std::vector<Partition> parts = partitions_of(n);
    std::vector<DoublePoset> pis;
    for (const auto& nu : parts) pis.push_back(pi_from_partition(nu));
    for (const DoublePoset& d : u.special(n)) {
      for (std::size_t k = 0; k < parts.size(); ++k) {
        const std::int64_t pics = pairing_basis(d, pis[k]);
        rec.record("lr.theorem", pics == lr_count_complement(d, parts[k]) && pics == lr_count_mirror(d, parts[k]));
      }
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = 0; j < parts.size(); ++j)
        rec.record("lr.orthonormality", pairing_basis(pis[i], pis[j]) == (i == j ? 1 : 0));
    }
    for (const Partition& nu : parts) {
      const std::vector<Word> words = lattice_words(nu);
      rec.record("lr.lattice-word-count", static_cast<std::int64_t>(words.size()) == hook_length_count(nu));
      for (const Word& w : words) {
        const Tableau t = tableau_from_lattice(w);
        rec.record("lr.tableau-shape-is-weight", t.shape() == weight(w) && t.shape() == nu);
        rec.record("lr.reading-word-identities", st_identities_check(w).all_hold());
        rec.record("lr.self-inverse", complement(complement(w)) == w && mirror(mirror(w)) == w);
      }
    }
    const std::vector<Permutation> perms = permutations_of(n);
    const Permutation w0 = Permutation::longest(n);
    for (const DoublePoset& d : u.special(n)) {
      const DoublePoset t = tilde(d);
      bool ok = true;
      for (const Permutation& s : perms) ok = ok && fits_into(s.word(), d) == fits_into(w0.compose(s).compose(w0).word(), t);
      rec.record("lr.tilde-duality", ok);
    }
    // Words over {1..min(n,3)}.
    const int letters = std::min(n, 3);
    std::vector<Word> words{{}};
    for (int pos = 0; pos < n; ++pos) {
      std::vector<Word> next;
      for (const Word& w : words) {
        for (int a = 1; a <= letters; ++a) {
          Word x = w;
          x.push_back(a);
          next.push_back(std::move(x));
        }
      }
      words = std::move(next);
    }
    for (const DoublePoset& d : u.special(n)) {
      bool ok = true;
      for (const Word& w : words) {
        const FitsPair f = fits_standardization_check(w, d);
        ok = ok && f.word == f.standardized;
      }
      rec.record("lr.fits-iff-standardization-fits", ok);
    }
  }
}

using SuiteFn = void (*)(Universe&, Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"hopf", hopf_suite},   {"selfdual", selfdual_suite}, {"internal", internal_suite},
      {"lmap", lmap_suite},   {"qsym", qsym_suite},         {"lr", lr_suite},
  };
  return suites;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

SuiteReport run_suite(const std::string& suite, int max_n, std::uint64_t seed) {
  SuiteReport report{suite, max_n, seed, {}};
  Universe universe(max_n, seed);
  Recorder rec(report);
  for (const auto& [name, fn] : registry()) {
    if (suite == "all" || suite == name) fn(universe, rec);
  }
  return report;
}

void print_report(const SuiteReport& report, std::ostream& os) {
  for (const PropertyResult& p : report.properties) {
    const char* status = p.informational ? "INFO" : (p.failures == 0 ? "PASS" : "FAIL");
    os << status << ' ' << p.name << " cases=" << p.cases << " failures=" << p.failures << '\n';
  }
  os << "suite=" << report.suite << " max-n=" << report.max_n << " seed=" << report.seed << ": "
     << (report.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace dposet::cli

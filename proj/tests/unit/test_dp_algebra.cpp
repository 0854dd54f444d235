#include <doctest.h>

#include "dposet/dposet.hpp"
#include "support/oracles.hpp"

using namespace dposet;

namespace {

CanonicalForm key(const DoublePoset& d) { return canonical_form(d); }

}  // namespace

TEST_SUITE("dp_algebra") {
  const DoublePoset pt = DoublePoset::point();
  const DoublePoset p12 = from_permutation(Permutation({1, 2}));
  const DoublePoset pp = compose(pt, pt);

  TEST_CASE("unit and counit") {
    CHECK(unit() == basis(DoublePoset()));
    CHECK(counit(unit()) == 1);
    CHECK(counit(basis(pt)) == 0);
    CHECK(product(unit(), basis(p12)) == basis(p12));
    CHECK(product(basis(p12), unit()) == basis(p12));
  }

  TEST_CASE("product is the composition class") {
    CHECK(product(basis(pt), basis(pt)) == basis(pp));
    CHECK(product(2 * basis(pt), basis(pt) - basis(p12)) == 2 * basis(compose(pt, pt)) - 2 * basis(compose(pt, p12)));
  }

  TEST_CASE("coproduct of a two-chain") {
    DTensor expected;
    expected.add_term({CanonicalForm(), key(p12)}, 1);
    expected.add_term({key(pt), key(pt)}, 1);
    expected.add_term({key(p12), CanonicalForm()}, 1);
    CHECK(coproduct(basis(p12)) == expected);
    DTensor anti;
    anti.add_term({CanonicalForm(), key(DoublePoset::antichain(2))}, 1);
    anti.add_term({key(pt), key(pt)}, 2);
    anti.add_term({key(DoublePoset::antichain(2)), CanonicalForm()}, 1);
    CHECK(coproduct(basis(DoublePoset::antichain(2))) == anti);
  }

  TEST_CASE("antipode values") {
    CHECK(antipode(unit()) == unit());
    CHECK(antipode(basis(pt)) == -1 * basis(pt));
    CHECK(antipode(basis(p12)) == basis(pp) - basis(p12));
    for (int n = 0; n <= 4; ++n)
      for (const CanonicalForm& f : all_double_posets(n)) {
        const DElement x(f);
        for (const auto& [k, c] : antipode(x)) CHECK(k.grade() == n);
      }
  }

  TEST_CASE("antipode reverses products") {
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; p + q <= 4; ++q)
        for (const CanonicalForm& a : all_double_posets(p))
          for (const CanonicalForm& b : all_double_posets(q)) {
            const DElement ea(a), eb(b);
            CHECK(antipode(product(ea, eb)) == product(antipode(eb), antipode(ea)));
          }
  }

  TEST_CASE("pairing is bilinear on combinations") {
    const DElement a = 3 * basis(p12) - basis(pp);
    const DElement b = basis(p12) + 2 * basis(pp);
    Coeff expected = 0;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) expected += ca * cb * oracle::pictures(ka.decode(), kb.decode());
    CHECK(pairing(a, b) == expected);
    CHECK(pairing(basis(pt), basis(p12)) == 0);
  }

  TEST_CASE("self-duality on small triples") {
    for (int n = 0; n <= 3; ++n)
      for (const CanonicalForm& g : all_double_posets(n)) {
        const DTensor dg = coproduct(DElement(g));
        for (int p = 0; p <= n; ++p)
          for (const CanonicalForm& e : all_double_posets(p))
            for (const CanonicalForm& f : all_double_posets(n - p))
              CHECK(pairing(product(DElement(e), DElement(f)), DElement(g)) == pairing(DElement(e), DElement(f), dg));
      }
  }

  TEST_CASE("internal product of permutation double posets") {
    const Permutation s({2, 3, 1}), t({3, 1, 2});
    CHECK(internal_product(basis(from_permutation(s)), basis(from_permutation(t))) ==
          basis(from_permutation(s.compose(t))));
    CHECK(internal_product(basis(pt), basis(p12)).is_zero());
  }

  TEST_CASE("tensor helpers") {
    const DTensor d = coproduct(basis(p12));
    CHECK(multiply(d) == product(basis(pt), basis(pt)) + 2 * basis(p12));
    CHECK(counit_left(d) == basis(p12));
    CHECK(coproduct_left(d) == coproduct_right(d));
  }
}

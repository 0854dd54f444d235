#include <doctest.h>

#include <map>
#include <set>

#include "dposet/dposet.hpp"
#include "support/oracles.hpp"

using namespace dposet;

TEST_SUITE("canonical") {
  TEST_CASE("class counts") {
    const std::vector<std::size_t> expected{1, 1, 5, 65, 2098};
    for (int n = 0; n <= 4; ++n) CHECK(all_double_posets(n).size() == expected[n]);
  }

  TEST_CASE("canonical forms separate exactly the brute-force isomorphism classes") {
    for (int n = 0; n <= 4; ++n) {
      const auto posets = all_posets(n);
      std::map<std::string, CanonicalForm> by_naive;
      std::set<CanonicalForm> forms;
      for (const Relation& a : posets)
        for (const Relation& b : posets) {
          const DoublePoset d(a, b);
          const CanonicalForm f = canonical_form(d);
          const auto [it, fresh] = by_naive.emplace(oracle::naive_key(d), f);
          CHECK(it->second == f);
          forms.insert(f);
        }
      CHECK(forms.size() == by_naive.size());
    }
  }

  TEST_CASE("relabeling carries the input onto the decoded form") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      const DoublePoset d = random_double_poset(1 + static_cast<int>(rng() % 7), rng);
      const Canonicalization c = canonicalize(d);
      CHECK(d.relabeled(c.relabeling) == c.form.decode());
      CHECK(canonical_form(c.form.decode()) == c.form);
      CHECK(CanonicalForm::from_hex(c.form.hex()) == c.form);
    }
  }

  TEST_CASE("invariance under random relabelings") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
      const int n = 1 + static_cast<int>(rng() % kCanonicalCap);
      const DoublePoset d = random_double_poset(n, rng);
      std::vector<int> image(n);
      std::iota(image.begin(), image.end(), 0);
      std::shuffle(image.begin(), image.end(), rng);
      CHECK(canonical_form(d.relabeled(image)) == canonical_form(d));
    }
  }

  TEST_CASE("keys encode the grade and reject malformed hex") {
    CHECK(CanonicalForm().grade() == 0);
    CHECK(CanonicalForm().hex() == "00");
    CHECK(canonical_form(DoublePoset::point()).hex() == "01");
    CHECK(canonical_form(from_permutation(Permutation({1, 2}))).hex() == "0205");
    CHECK_THROWS_AS(CanonicalForm::from_hex("0"), ParseError);
    CHECK_THROWS_AS(CanonicalForm::from_hex("zz"), ParseError);
    CHECK_THROWS_AS(CanonicalForm::from_hex("0100"), ParseError);
    CHECK_THROWS_AS(canonical_form(DoublePoset::antichain(kCanonicalCap + 1)), SizeCapError);
  }

  TEST_CASE("isomorphic") {
    const DoublePoset a = from_permutation(Permutation({2, 1}));
    const std::vector<int> swap{1, 0};
    CHECK(isomorphic(a, a.relabeled(swap)));
    CHECK_FALSE(isomorphic(a, from_permutation(Permutation({1, 2}))));
    CHECK_FALSE(isomorphic(a, DoublePoset::point()));
  }
}

#include <doctest.h>

#include "dposet/dposet.hpp"
#include "support/oracles.hpp"

using namespace dposet;

TEST_SUITE("littlewood_richardson") {
  const Word w{1, 2, 3, 1, 4, 2, 1, 1, 3, 2, 2};

  TEST_CASE("complement, mirror and weight") {
    CHECK(complement(Word{1, 1, 1, 2, 2, 1, 3, 2}) == Word{3, 3, 3, 2, 2, 3, 1, 2});
    CHECK(weight(Word{1, 1, 1, 2, 2, 1, 3, 2}) == Partition({4, 3, 1}));
    CHECK(mirror(w) == Word{2, 2, 3, 1, 1, 2, 4, 1, 3, 2, 1});
    CHECK(complement(Word{}).empty());
    CHECK_THROWS_AS(weight(Word{1, 2, 2}), NotAPartitionError);
    CHECK_THROWS_AS(complement(Word{0, 1}), PreconditionError);
  }

  TEST_CASE("lattice words") {
    CHECK(is_lattice(Word{1, 1, 2}));
    CHECK(is_lattice(w));
    CHECK_FALSE(is_lattice(Word{2, 1}));
    CHECK(lattice_words(Partition({2, 1})) == std::vector<Word>{{1, 1, 2}, {1, 2, 1}});
    for (int n = 0; n <= 6; ++n)
      for (const Partition& nu : partitions_of(n))
        CHECK(static_cast<std::int64_t>(lattice_words(nu).size()) == oracle::syt_count(nu.parts()));
  }

  TEST_CASE("tableau of a lattice word") {
    const Tableau t = tableau_from_lattice(w);
    CHECK(t.shape() == Partition({4, 4, 2, 1}));
    CHECK(row_word(t) == Permutation({1, 4, 7, 8, 2, 6, 10, 11, 3, 9, 5}));
    CHECK(read_word(t) == Word{5, 3, 9, 2, 6, 10, 11, 1, 4, 7, 8});
    CHECK_THROWS_AS(tableau_from_lattice(Word{2, 1}), NotLatticeError);
    CHECK_THROWS_AS(Tableau({{1}, {2, 3}}), PreconditionError);
  }

  TEST_CASE("standardization chain") {
    const Permutation st_m = standardize(mirror(w));
    CHECK(standardize(complement(w)) == Permutation({8, 4, 2, 9, 1, 5, 10, 11, 3, 6, 7}));
    CHECK(st_m == Permutation({5, 6, 9, 1, 2, 7, 11, 3, 10, 8, 4}));
    CHECK(complement(st_m.inverse().word()) == Word{8, 7, 4, 1, 11, 10, 6, 2, 9, 3, 5});
  }

  TEST_CASE("identity report") {
    const StandardizationReport r = st_identities_check(w);
    CHECK(r.all_hold());
    CHECK_FALSE(r.complement_identity.has_value());
    const StandardizationReport strict = st_identities_check(Word{1, 1, 2, 1, 2, 3});
    REQUIRE(strict.complement_identity.has_value());
    CHECK(*strict.complement_identity);
    CHECK(strict.all_hold());
    for (int n = 0; n <= 6; ++n)
      for (const Partition& nu : partitions_of(n))
        for (const Word& x : lattice_words(nu)) CHECK(st_identities_check(x).all_hold());
  }

  TEST_CASE("young longest element") {
    CHECK(young_longest(Partition({3, 2})) == Permutation({3, 2, 1, 5, 4}));
  }

  TEST_CASE("counts agree with pictures") {
    for (int n = 0; n <= 4; ++n)
      for (const DoublePoset& d : all_special(n))
        for (const Partition& nu : partitions_of(n)) {
          const std::int64_t pics = pairing_basis(d, pi_from_partition(nu));
          CHECK(lr_count_complement(d, nu) == pics);
          CHECK(lr_count_mirror(d, nu) == pics);
        }
    CHECK_THROWS_AS(lr_count_complement(DoublePoset::antichain(2), Partition({2})), NotSpecialError);
    CHECK_THROWS_AS(lr_count_mirror(DoublePoset::point(), Partition({2})), SizeMismatchError);
  }

  TEST_CASE("classical coefficients") {
    for (int n = 0; n <= 4; ++n)
      for (const Partition& lambda : partitions_of(n))
        for (int k = 0; k <= n; ++k)
          for (const Partition& mu : partitions_of(k))
            for (const Partition& nu : partitions_of(n - k))
              CHECK(pairing_basis(compose(pi_from_partition(mu), pi_from_partition(nu)), pi_from_partition(lambda)) ==
                    oracle::lr_coefficient(lambda.parts(), mu.parts(), nu.parts()));
    CHECK(oracle::lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  }

  TEST_CASE("fits and standardization") {
    const DoublePoset p = from_permutation(Permutation({1, 2}));
    const FitsPair f = fits_standardization_check(Word{1, 1}, p);
    CHECK(f.word == f.standardized);
    for (int n = 1; n <= 3; ++n)
      for (const DoublePoset& d : all_special(n))
        for (const auto& x : oracle::all_permutations(n)) {
          Word word;
          for (int v : x) word.push_back(v % 2 + 1);
          const FitsPair r = fits_standardization_check(word, d);
          CHECK(r.word == r.standardized);
        }
  }
}

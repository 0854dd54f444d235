#include <doctest.h>

#include <algorithm>
#include <set>

#include "dposet/dposet.hpp"
#include "support/oracles.hpp"

using namespace dposet;

TEST_SUITE("poset_core") {
  TEST_CASE("validate closes transitively and rejects cycles") {
    const std::vector<Pair> chain{{0, 1}, {1, 2}};
    const Relation r = Relation::validate(3, chain);
    CHECK(r.less(0, 2));
    CHECK_FALSE(r.less(2, 0));
    CHECK(r.is_total());
    CHECK(r.cover_pairs() == std::vector<Pair>{{0, 1}, {1, 2}});
    CHECK(r.pairs() == std::vector<Pair>{{0, 1}, {0, 2}, {1, 2}});

    const std::vector<Pair> cycle{{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(Relation::validate(3, cycle), CycleError);
    const std::vector<Pair> loop{{1, 1}};
    CHECK_THROWS_AS(Relation::validate(2, loop), CycleError);
    const std::vector<Pair> out_of_range{{0, 3}};
    CHECK_THROWS_AS(Relation::validate(3, out_of_range), IndexError);
    CHECK_THROWS_AS(Relation(kMaxElements + 1), SizeCapError);
  }

  TEST_CASE("empty and single-element relations") {
    const Relation empty(0);
    CHECK(lower_ideals(empty) == std::vector<Mask>{0});
    CHECK(linear_extensions(empty) == std::vector<std::vector<int>>{{}});
    CHECK(count_linear_extensions(empty) == 1);
    const Relation one(1);
    CHECK(lower_ideals(one).size() == 2);
  }

  TEST_CASE("lower ideals match subset filtering") {
    for (int n = 0; n <= 5; ++n)
      for (const Relation& r : all_posets(n)) {
        const auto ideals = lower_ideals(r);
        REQUIRE(ideals.size() == oracle::count_lower_ideals(r));
        for (Mask s : ideals) CHECK(is_lower_ideal(r, s));
        for (std::size_t i = 1; i < ideals.size(); ++i)
          CHECK(popcount(ideals[i - 1]) <= popcount(ideals[i]));
      }
  }

  TEST_CASE("decompositions pair each ideal with its complement") {
    const std::vector<Pair> v{{0, 2}, {1, 2}};
    const Relation r = Relation::validate(3, v);
    for (const Decomposition& d : decompositions(r)) {
      CHECK((d.lower | d.upper) == full_mask(3));
      CHECK((d.lower & d.upper) == 0);
      CHECK(is_lower_ideal(r, d.lower));
    }
    CHECK(decompositions(r).size() == 5);
  }

  TEST_CASE("linear extensions match permutation filtering") {
    for (int n = 0; n <= 5; ++n)
      for (const Relation& r : all_posets(n)) {
        const auto brute = oracle::linear_extensions(r);
        CHECK(linear_extensions(r) == brute);
        CHECK(count_linear_extensions(r) == brute.size());
      }
  }

  TEST_CASE("all_posets enumerates every labelled poset exactly once") {
    const std::vector<std::size_t> expected{1, 1, 3, 19, 219, 4231};
    for (int n = 0; n <= 5; ++n) CHECK(all_posets(n).size() == expected[n]);
    for (int n = 0; n <= 4; ++n) {
      auto ours = all_posets(n);
      auto brute = oracle::brute_posets(n);
      auto key = [](const Relation& r) { return r.pairs(); };
      std::set<std::vector<Pair>> a, b;
      for (const auto& r : ours) a.insert(key(r));
      for (const auto& r : brute) b.insert(key(r));
      CHECK(a.size() == ours.size());
      CHECK(a == b);
    }
  }

  TEST_CASE("induced, opposite, relabeled and disjoint union") {
    const std::vector<Pair> v{{0, 1}, {1, 2}};
    const Relation r = Relation::validate(3, v);
    const Relation sub = induced(r, bit(0) | bit(2));
    CHECK(sub.size() == 2);
    CHECK(sub.less(0, 1));
    CHECK(r.opposite().less(2, 0));
    const std::vector<int> image{2, 1, 0};
    CHECK(r.relabeled(image) == r.opposite());
    const Relation u = disjoint_union(Relation(1), Relation(1), true);
    CHECK(u.less(0, 1));
    CHECK_FALSE(disjoint_union(Relation(1), Relation(1), false).comparable(0, 1));
    CHECK(Relation(2).is_subset_of(Relation::chain(2)));
  }

  TEST_CASE("random posets are valid and reproducible") {
    std::mt19937_64 a(3), b(3);
    for (int i = 0; i < 50; ++i) {
      const Relation x = random_poset(6, a);
      CHECK(x == random_poset(6, b));
      for (int p = 0; p < 6; ++p) CHECK_FALSE(x.less(p, p));
    }
  }
}

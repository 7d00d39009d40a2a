#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "diagramkit/dcc.hpp"
#include "diagramkit/errors.hpp"

using namespace diagramkit;

TEST_SUITE("dcc_sets") {
  TEST_CASE("membership in the standard set") {
    const auto s = CoefficientSet::standard();
    CHECK(contains(s, Rational(5, 12)));
    CHECK(contains(s, Rational(6, 7)));
    CHECK_FALSE(contains(s, Rational(13, 29)));
    CHECK(contains(s, Rational(1, 2)));
    CHECK_FALSE(contains(s, 0));
    CHECK_FALSE(contains(s, 1));
    CHECK(contains(s, Rational(999, 1000)));
    CHECK_FALSE(contains(s, Rational(-1, 2)));
  }

  TEST_CASE("min positive") {
    CHECK(min_positive(CoefficientSet::standard()) == Rational(1, 12));
    CHECK_FALSE(min_positive(CoefficientSet({0}, {})).has_value());
    CHECK(min_positive(CoefficientSet({}, {{1, 1, 2}})) == Rational(1, 2));
    // Members below 0 are not in the set; the first nonnegative one is 0 here.
    CHECK(min_positive(CoefficientSet({}, {{Rational(1, 2), 1, 1}})) == Rational(1, 6));
  }

  TEST_CASE("below threshold") {
    const auto s = CoefficientSet::standard();
    CHECK(below_threshold(s, Rational(1, 2)) ==
          std::vector<Rational>{Rational(1, 12), Rational(1, 6), Rational(1, 4), Rational(1, 3), Rational(5, 12),
                                Rational(1, 2)});
    CHECK(below_threshold(s, 0).empty());
    CHECK(below_threshold(CoefficientSet({0, Rational(1, 3)}, {}), 0) == std::vector<Rational>{0});
    CHECK(below_threshold(s, Rational(4, 5)).back() == Rational(4, 5));
    CHECK_THROWS_AS(below_threshold(s, 1), InfiniteTail);
  }

  TEST_CASE("parse and describe") {
    const auto s = CoefficientSet::parse("1/12, 1/2, fam(1,1,2)");
    CHECK(s.finite_part() == std::vector<Rational>{Rational(1, 12), Rational(1, 2)});
    REQUIRE(s.families().size() == 1);
    CHECK(s.families()[0].k_min == 2);
    CHECK(CoefficientSet::parse(s.describe()).describe() == s.describe());
    CHECK(CoefficientSet::parse("standard").describe() == CoefficientSet::standard().describe());
    CHECK_THROWS_AS(CoefficientSet::parse("3/2"), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientSet::parse("fam(1,1)"), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientSet::parse("fam(1,1,2"), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientSet::parse("1/2,,1/3"), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientSet::parse("fam(1,0,2)"), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientSet::parse("0.5"), std::invalid_argument);
  }

  TEST_CASE("quotient transform examples") {
    const CoefficientSet half({Rational(1, 2)}, {});
    const auto one = hurwitz_quotient_transform(half, 1, 1, 1);
    CHECK(one.complete);
    CHECK(one.values == std::vector<Rational>{0, Rational(1, 2)});
    const auto empty_sum = hurwitz_quotient_transform(CoefficientSet({}, {}), 4, 1, 1);
    CHECK(empty_sum.values == std::vector<Rational>{0, Rational(1, 2), Rational(2, 3), Rational(3, 4)});
    CHECK_FALSE(hurwitz_quotient_transform(CoefficientSet::standard(), 2, 2, 2).complete);
    CHECK_THROWS_AS(hurwitz_quotient_transform(half, 0, 1, 1), std::invalid_argument);
  }

  TEST_CASE("quotient transform against direct recomputation") {
    const CoefficientSet s({Rational(1, 3), Rational(1, 2)}, {});
    const int max_m = 3;
    const int max_n = 2;
    const auto image = hurwitz_quotient_transform(s, max_m, 2, max_n);
    // Up to two summands n_j b_j; a zero coefficient stands for no summand.
    std::set<Rational> expected;
    const std::vector<Rational> b{Rational(1, 3), Rational(1, 2)};
    for (int n1 = 0; n1 <= max_n; ++n1) {
      for (int n2 = 0; n2 <= max_n; ++n2) {
        for (std::size_t i = 0; i < b.size(); ++i) {
          for (std::size_t j = 0; j < b.size(); ++j) {
            const Rational sum = n1 * b[i] + n2 * b[j];
            for (int m = 1; m <= max_m; ++m) {
              const Rational v = 1 - (1 - sum) / m;
              if (v >= 0 && v <= 1) expected.insert(v);
            }
          }
        }
      }
    }
    CHECK(std::set<Rational>(image.values.begin(), image.values.end()) == expected);
    const CoefficientSet image_set(image.values, {});
    for (const auto& x : image.values) CHECK(contains(image_set, x));
  }

  TEST_CASE("descending chains") {
    const auto r = is_dcc_witnessed({1, Rational(1, 2), Rational(1, 3), Rational(1, 4)}, 3);
    CHECK(r.longest_decreasing == 4);
    CHECK_FALSE(r.within_bound);
    CHECK(r.decreasing_chain.size() == 4);
    CHECK(is_dcc_witnessed({Rational(1, 4), Rational(1, 3), Rational(1, 2), 1}, 1).longest_decreasing == 1);

    // 1000 standard-set elements in enumeration order: the finite part, then
    // the family by increasing k. A decreasing chain uses each finite element
    // at most once and the family at most once.
    const auto s = CoefficientSet::standard();
    std::vector<Rational> sample = s.finite_part();
    for (long k = 2; sample.size() < 1000; ++k) sample.push_back(s.families()[0].member(k));
    const std::size_t bound = s.finite_part().size() + s.families().size();
    const auto chains = is_dcc_witnessed(sample, bound);
    CHECK(chains.within_bound);
    CHECK(chains.longest_nondecreasing >= 989);

    // In arbitrary order the family alone yields long decreasing chains.
    std::mt19937_64 rng(51);
    std::shuffle(sample.begin(), sample.end(), rng);
    const auto shuffled = is_dcc_witnessed(sample, bound);
    CHECK_FALSE(shuffled.within_bound);
    for (std::size_t i = 1; i < shuffled.decreasing_chain.size(); ++i) {
      CHECK(shuffled.decreasing_chain[i] < shuffled.decreasing_chain[i - 1]);
    }
  }

  TEST_CASE("set properties") {
    const auto s = CoefficientSet::standard();
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<int> num(0, 998);
    const auto least = *min_positive(s);
    for (int i = 0; i < 20; ++i) {
      const Rational t = Rational(num(rng)) / 999;
      const auto below = below_threshold(s, t);
      for (const auto& x : below) {
        CHECK(x <= t);
        CHECK(contains(s, x));
        if (x > 0) CHECK(least <= x);
      }
    }
    const auto image = hurwitz_quotient_transform(CoefficientSet({Rational(1, 5), Rational(3, 4)}, {}), 2, 2, 2);
    for (const auto& v : image.values) CHECK((v >= 0 && v <= 1));
    const std::set<Rational> values(image.values.begin(), image.values.end());
    CHECK(values.count(Rational(1, 5)) == 1);
    CHECK(values.count(Rational(3, 4)) == 1);
  }
}

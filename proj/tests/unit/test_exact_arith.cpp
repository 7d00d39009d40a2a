#include <doctest.h>

#include <random>

#include "diagramkit/feasibility.hpp"
#include "diagramkit/linalg.hpp"
#include "diagramkit/rational.hpp"
#include "support.hpp"

using namespace diagramkit;

namespace {

SymMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  SymMatrixBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) b.set(i, j, entry(rng));
  }
  return std::move(b).build();
}

// Random matrix of small rank: sum of r signed rank-one terms.
SymMatrix random_low_rank(std::mt19937_64& rng, std::size_t n, std::size_t r) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t t = 0; t < r; ++t) {
    std::vector<int> v(n);
    for (auto& x : v) x = entry(rng);
    const int s = (t % 2 == 0) ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rows[i][j] += s * v[i] * v[j];
    }
  }
  return SymMatrix(rows);
}

}  // namespace

TEST_SUITE("exact_arith") {
  TEST_CASE("rational format and parse") {
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational(" 2/3 ") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(5), 0) == 1);
    CHECK(is_integer(Rational(4) / 2));
    CHECK_FALSE(is_integer(Rational(1, 2)));
  }

  TEST_CASE("rational round trip on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 1000; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      CHECK(parse_rational(to_string(q)) == q);
    }
  }

  TEST_CASE("big values stay exact") {
    Rational q = pow(Rational(3, 2), 200);
    CHECK(q * pow(Rational(2, 3), 200) == 1);
    CHECK(parse_rational(to_string(q)) == q);
  }

  TEST_CASE("symmetric matrix construction") {
    CHECK_THROWS_AS(SymMatrix({{Rational(1), Rational(2)}, {Rational(3), Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(SymMatrix({{Rational(1), Rational(2)}}), std::invalid_argument);
    const auto m = SymMatrix::from_integers({{-2, 1}, {1, -2}});
    CHECK(m(0, 1) == 1);
    const std::vector<std::size_t> idx{1};
    CHECK(m.principal(idx) == SymMatrix::from_integers({{-2}}));
    const std::vector<Rational> x{1, 1};
    CHECK(m.multiply(x) == std::vector<Rational>{-1, -1});
  }

  TEST_CASE("signature examples") {
    CHECK(signature(SymMatrix::from_integers({{-2, 1}, {1, -2}})) == Signature{0, 0, 2});
    CHECK(signature(SymMatrix::from_integers({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}})) == Signature{0, 1, 2});
    CHECK(signature(SymMatrix::from_integers({{-1, 1, 0}, {1, -1, 1}, {0, 1, -2}})) == Signature{1, 0, 2});
    CHECK(signature(SymMatrix::from_integers({{0, 1}, {1, 0}})) == Signature{1, 0, 1});
    CHECK(signature(SymMatrix(3)) == Signature{0, 3, 0});
    CHECK(signature(SymMatrix()) == Signature{0, 0, 0});
    CHECK(to_string(Signature{1, 0, 2}) == "(1,0,2)");
    CHECK(is_negative_definite(SymMatrix::from_integers({{-2, 1}, {1, -2}})));
    CHECK_FALSE(is_negative_definite(SymMatrix::from_integers({{-1, 1}, {1, -1}})));
    CHECK_FALSE(is_negative_definite(SymMatrix::from_integers({{0, 1}, {1, -3}})));
  }

  TEST_CASE("signature agrees with the Sturm oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
      const auto m = random_symmetric(rng, dim(rng), -5, 5);
      CHECK(support::to_oracle(signature(m)) == oracle::sturm_inertia(support::to_oracle(m)));
    }
    // Repeated eigenvalues and kernels, where square-free handling matters.
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = dim(rng);
      const auto m = random_low_rank(rng, n, std::min<std::size_t>(n, trial % 4));
      CHECK(support::to_oracle(signature(m)) == oracle::sturm_inertia(support::to_oracle(m)));
    }
    const auto identity2 = SymMatrix::from_integers({{2, 0, 0}, {0, 2, 0}, {0, 0, -1}});
    CHECK(oracle::sturm_inertia(support::to_oracle(identity2)) == oracle::Inertia{2, 0, 1});
  }

  TEST_CASE("negative definite agrees with signature") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
      const auto m = random_symmetric(rng, 1 + trial % 5, -4, 2);
      const auto s = signature(m);
      CHECK(is_negative_definite(m) == (s.negative == m.dim()));
    }
  }

  TEST_CASE("solve_linear") {
    const auto m = SymMatrix::from_integers({{-2, 1}, {1, -2}});
    const std::vector<Rational> rhs{-1, 0};
    const auto x = std::get<std::vector<Rational>>(solve_linear(m, rhs));
    CHECK(x == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});

    const auto singular = SymMatrix::from_integers({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}});
    const std::vector<Rational> zero(3);
    const auto report = std::get<SingularReport>(solve_linear(singular, zero));
    CHECK(report.rank == 2);
    CHECK(report.consistent);
    CHECK(singular.multiply(report.kernel) == zero);
    CHECK(report.kernel != zero);
    const std::vector<Rational> bad{1, 0, 0};
    CHECK_FALSE(std::get<SingularReport>(solve_linear(singular, bad)).consistent);
  }

  TEST_CASE("solve_linear on random nonsingular systems") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> entry(-9, 9);
    int solved = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto m = random_symmetric(rng, 1 + trial % 6, -5, 5);
      std::vector<Rational> rhs(m.dim());
      for (auto& r : rhs) r = entry(rng);
      const auto sol = solve_linear(m, rhs);
      if (const auto* x = std::get_if<std::vector<Rational>>(&sol)) {
        CHECK(m.multiply(*x) == rhs);
        ++solved;
      } else {
        CHECK(signature(m).zero > 0);
      }
    }
    CHECK(solved > 150);
  }

  TEST_CASE("Fourier-Motzkin examples") {
    // x + y <= 1, x, y in [0, 1]
    auto r = feasible_box_lp({{{1, 1}, 1}}, {{0, 1}, {0, 1}});
    CHECK(r.feasible());
    CHECK(satisfies({{{1, 1}, 1}}, {{0, 1}, {0, 1}}, r.witness));
    // x + y <= -1 with nonnegative box
    CHECK(feasible_box_lp({{{1, 1}, -1}}, {{0, 1}, {0, 1}}).status == FeasibilityStatus::infeasible);
    // no variables
    CHECK(feasible_box_lp({{{}, 0}}, {}).status == FeasibilityStatus::feasible);
    CHECK(feasible_box_lp({{{}, -1}}, {}).status == FeasibilityStatus::degenerate);
    // empty box interval is rejected
    CHECK_THROWS_AS(feasible_box_lp({}, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(feasible_box_lp({{{1}, 0}}, {{0, 1}, {0, 1}}), std::invalid_argument);
    // a single point
    r = feasible_box_lp({{{1, -1}, 0}, {{-1, 1}, 0}, {{-1, -1}, Rational(-1)}}, {{0, Rational(1, 2)}, {0, Rational(1, 2)}});
    CHECK(r.feasible());
    CHECK(r.witness == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  }

  TEST_CASE("Fourier-Motzkin agrees with vertex enumeration") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> bound(-3, 4);
    std::uniform_int_distribution<std::size_t> vars(1, 4);
    std::uniform_int_distribution<std::size_t> rows(0, 6);
    int feasible = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 600; ++trial) {
      const std::size_t n = vars(rng);
      std::vector<LinearConstraint> cs(rows(rng));
      std::vector<oracle::Row> ors;
      for (auto& c : cs) {
        c.coeffs.resize(n);
        for (auto& a : c.coeffs) a = coeff(rng);
        c.bound = Rational(bound(rng), 2);
        ors.push_back({c.coeffs, c.bound});
      }
      std::vector<Interval> box(n, {0, Rational(2, 3)});
      const auto r = feasible_box_lp(cs, box);
      const bool expected = oracle::box_feasible(ors, std::vector<oracle::Q>(n, 0), std::vector<oracle::Q>(n, Rational(2, 3)));
      CHECK(r.feasible() == expected);
      if (r.feasible()) {
        CHECK(satisfies(cs, box, r.witness));
        ++feasible;
      } else {
        ++infeasible;
      }
    }
    CHECK(feasible > 50);
    CHECK(infeasible > 50);
  }

  TEST_CASE("Fourier-Motzkin agrees with a grid scan") {
    // Every grid point that satisfies the system proves feasibility.
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> bound(-2, 3);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<LinearConstraint> cs(3);
      for (auto& c : cs) {
        c.coeffs = {coeff(rng), coeff(rng)};
        c.bound = bound(rng);
      }
      const std::vector<Interval> box{{0, 1}, {0, 1}};
      bool grid = false;
      for (int i = 0; i <= 12 && !grid; ++i) {
        for (int j = 0; j <= 12 && !grid; ++j) grid = satisfies(cs, box, {Rational(i) / 12, Rational(j) / 12});
      }
      if (grid) CHECK(feasible_box_lp(cs, box).feasible());
    }
  }

  TEST_CASE("Fourier-Motzkin on wider systems") {
    // Larger systems where history pruning matters; compare with the oracle.
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 5;
      std::vector<LinearConstraint> cs(6);
      std::vector<oracle::Row> ors;
      for (auto& c : cs) {
        c.coeffs.resize(n);
        for (auto& a : c.coeffs) a = coeff(rng);
        c.bound = coeff(rng);
        ors.push_back({c.coeffs, c.bound});
      }
      std::vector<Interval> box(n, {0, 1});
      const bool expected = oracle::box_feasible(ors, std::vector<oracle::Q>(n, 0), std::vector<oracle::Q>(n, 1));
      CHECK(feasible_box_lp(cs, box).feasible() == expected);
    }
  }
}

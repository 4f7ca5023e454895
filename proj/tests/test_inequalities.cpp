#include <doctest.h>

#include <cmath>
#include <random>

#include "qwb/errors.hpp"
#include "qwb/inequalities.hpp"
#include "qwb/oracles.hpp"

using namespace qwb;

TEST_SUITE("inequalities") {
  TEST_CASE("weighted multiplicity bound") {
    CHECK(weighted_multiplicity_bound(1, 1, 1, 1) == Rational(32, 5));
    for (int n = 1; n <= 5; ++n) CHECK(weighted_multiplicity_bound(1, 0, 0, n) == 2 * n * n);
  }

  TEST_CASE("the bound is the constrained minimum") {
    // minimize 2 r1 x1^2 + sum r_i x_i^2 subject to the boundary
    // r1 x1 + sum_lower r_i x_i + sum_upper x_i = n (r1 + 2 S0 + S1)
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> small(1, 5), count(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
      int r1 = small(rng), lower = count(rng), upper = count(rng);
      std::vector<double> w{2.0 * r1}, c{double(r1)};
      std::int64_t s0 = 0;
      for (int i = 0; i < lower; ++i) {
        int r = small(rng);
        s0 += r;
        w.push_back(r);
        c.push_back(r);
      }
      for (int i = 0; i < upper; ++i) {
        w.push_back(1);
        c.push_back(1);
      }
      const double n = 1.0 + trial % 7;
      const double rhs = n * (r1 + 2.0 * s0 + upper);
      oracle::QuadraticMinimum min = oracle::constrained_quadratic_minimum(w, c, rhs);
      Rational exact = weighted_multiplicity_bound(r1, Rational(s0), Rational(upper), Rational(std::int64_t(n)));
      CHECK(std::abs(min.value - exact.get_d()) < 1e-9 * exact.get_d());
      for (std::size_t k = 1; k < min.x.size(); ++k) CHECK(std::abs(2 * min.x[0] - min.x[k]) < 1e-9 * rhs);
    }
  }

  TEST_CASE("pair sum ratio") {
    RatioCheck a = pair_sum_ratio_check(1, 1, 1);
    REQUIRE(a.holds);
    CHECK(*a.holds);
    CHECK(a.ratio == Rational(16, 5));
    for (int c = 1; c <= 10; ++c) {
      RatioCheck e = pair_sum_ratio_check(c, c, 0);
      CHECK(e.equality);
      CHECK(e.polynomial == 0);
    }
    CHECK_FALSE(pair_sum_ratio_check(2, 1, 0).holds);
    CHECK_FALSE(pair_sum_ratio_check(0, 1, 0).holds);
    RatioScan scan = pair_sum_scan(12, 30, true);
    CHECK(scan.counterexamples.empty());
    CHECK(scan.equality_cases.size() == 12);
    RatioScan serial = pair_sum_scan(12, 30, false);
    CHECK(serial.checked == scan.checked);
    CHECK(serial.equality_cases == scan.equality_cases);
  }

  TEST_CASE("long chain ratio") {
    RatioCheck a = long_chain_ratio_check(1, 1, 4);
    REQUIRE(a.holds);
    CHECK(a.ratio == Rational(49, 22));
    // the boundary S1 = r1 + 2 S0 with r1 = S0 is equality but outside the precondition
    for (std::int64_t c = 1; c <= 6; ++c) {
      CHECK(c * c + 2 * c * c + 2 * c * 3 * c - 9 * c * c == 0);
      CHECK_FALSE(long_chain_ratio_check(c, c, 3 * c).holds);
      CHECK(*long_chain_ratio_check(c, c, 3 * c + 1).holds);
    }
    RatioScan scan = long_chain_scan(60, true);
    CHECK(scan.counterexamples.empty());
    CHECK(long_chain_scan(60, false).checked == scan.checked);
  }

  TEST_CASE("feasibility forms") {
    CHECK(parse_feasibility_form("plane_pair") == FeasibilityForm::PlanePair);
    CHECK(parse_feasibility_form("section_bound") == FeasibilityForm::SectionBound);
    CHECK_THROWS_AS(parse_feasibility_form("e"), InputError);

    FeasibilityResult a = feasibility_scan(FeasibilityForm::TwistedCubic, {12});
    CHECK(a.feasible.empty());
    CHECK(a.claim_holds);

    FeasibilityResult b = feasibility_scan(FeasibilityForm::PlanePair, {12});
    CHECK(b.claim_holds);
    std::vector<std::int64_t> ms;
    for (const auto& row : b.feasible)
      if (row[0] == 2 && row[1] == 2) ms.push_back(row[2]);
    CHECK(ms == std::vector<std::int64_t>{0, 1, 2});

    FeasibilityResult c = feasibility_scan(FeasibilityForm::SectionBound, {10});
    CHECK(c.claim_holds);
    for (const auto& row : c.feasible) CHECK(theta_below_threshold(row[0], row[1], row[2]));

    FeasibilityResult d = feasibility_scan(FeasibilityForm::SelfIntersection, {10});
    CHECK(d.claim_holds);
    for (const auto& row : d.feasible) CHECK(row[1] <= 4 * row[0] * row[0]);
    CHECK(feasibility_scan(FeasibilityForm::PlanePair, {12}, false).feasible == b.feasible);
  }

  TEST_CASE("section profile") {
    for (int n = 1; n <= 6; ++n) CHECK(section_profile(Rational(n), Rational(n), Rational(n)) == 0);
    Rational n = 5, b = 2, t(7, 3);
    Rational h(1, 1000);
    Rational central = (section_profile(n, b, t + h) - section_profile(n, b, t - h)) / (2 * h);
    CHECK(central == section_profile_slope(b, t));  // exact for a quadratic
    SectionAnalysis s = section_bound_analysis(3, 2);
    REQUIRE(s.decreasing_beyond_half);
    CHECK(*s.decreasing_beyond_half);
    CHECK(s.max_slope_error < 1e-9);
    CHECK(std::abs(s.threshold_ratio - (2 * std::sqrt(6.0) - 3) / 3) < 1e-15);
    CHECK(std::abs(s.threshold_ratio - oracle::positive_quadratic_root(1.5, 3.0, -2.5)) < 1e-12);
    CHECK(section_bound_analysis(3, 4).refusal.size() > 0);
    // peak over nu_B at (3 theta - n)/2
    Rational theta(4, 3);
    Rational arg = section_profile_peak_argument(3, theta);
    CHECK(arg == (3 * theta - 3) / 2);
    CHECK(section_profile(Rational(3), arg, theta) == section_profile_peak(3, theta));
  }

  TEST_CASE("line component bound") {
    for (int n = 1; n <= 6; ++n) {
      Rational deg = 4 * n * n;
      CHECK(line_component_bound(n, deg, 6 * n * n) == 2 * n * n);
      CHECK(line_component_bound(n, deg, 6 * n * n + 2) == 2 * n * n + 2);
      // beta = nu_B^2 + d_B with nu_B <= n and beta > 2n^2 forces d_B > n^2
      for (int nu_b = 0; nu_b <= n; ++nu_b) CHECK(2 * n * n - nu_b * nu_b >= n * n);
    }
    CHECK_THROWS_AS(line_component_bound(2, 15, 30), InputError);
  }
}

#ifndef QWB_INEQUALITIES_HPP
#define QWB_INEQUALITIES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwb/rational.hpp"

namespace qwb {

/// Minimum of 2 r1 nu_1^2 + sum r_i nu_i^2 on the boundary hyperplane of the
/// modified Noether-Fano inequality:
/// 2 (r1 + 2 S0 + S1)^2 / (r1 + 2 S0 + 2 S1) n^2.
Rational weighted_multiplicity_bound(const Rational& r1, const Rational& s0, const Rational& s1, const Rational& n);

struct RatioCheck {
  std::optional<bool> holds;  // nullopt when the preconditions fail
  Rational ratio;             // the displayed quotient
  std::int64_t polynomial = 0;  // the equivalent polynomial, <= 0 when holding
  bool equality = false;
  std::string refusal;
};

/// 2 (r1+2 S0+S1)^2 / ((r1+S0)(r1+2 S0+2 S1)) >= 3 for 1 <= r1 <= S0, S1 >= 0;
/// polynomial r1^2 + r1 (S0 + 2 S1) - (2 S0^2 + 2 S0 S1 + 2 S1^2).
RatioCheck pair_sum_ratio_check(std::int64_t r1, std::int64_t s0, std::int64_t s1);

/// (r1+2 S0+S1)^2 / ((r1+S0)(r1+2 S0+2 S1)) >= 2 for 1 <= r1 <= S0 and
/// S1 > r1 + 2 S0; polynomial r1^2 + 2 r1 S0 + 2 r1 S1 - S1^2.
RatioCheck long_chain_ratio_check(std::int64_t r1, std::int64_t s0, std::int64_t s1);

using Triple = std::array<std::int64_t, 3>;

struct RatioScan {
  std::int64_t checked = 0;
  std::vector<Triple> counterexamples;  // sorted
  std::vector<Triple> equality_cases;   // sorted
};

/// All 1 <= r1 <= S0 <= max_s0, 0 <= S1 <= max_s1.
RatioScan pair_sum_scan(std::int64_t max_s0, std::int64_t max_s1, bool parallel = true);
/// All 1 <= r1 <= S0, r1 + 2 S0 < S1 <= max.
RatioScan long_chain_scan(std::int64_t max, bool parallel = true);

enum class FeasibilityForm { TwistedCubic, PlanePair, SectionBound, SelfIntersection };

/// Accepts "twisted_cubic" (alias "a"), "plane_pair" ("b"),
/// "section_bound" ("c"), "self_intersection" ("d", "4n2").
FeasibilityForm parse_feasibility_form(std::string_view name);
std::string to_string(FeasibilityForm form);

struct FeasibilityBounds {
  std::int64_t n_max = 30;
};

struct FeasibilityResult {
  FeasibilityForm form;
  std::vector<std::string> columns;
  std::vector<std::vector<std::int64_t>> feasible;  // sorted
  std::int64_t checked = 0;
  std::string claim;
  bool claim_holds = true;
  std::vector<std::vector<std::int64_t>> claim_violations;
};

/// Integer grid scans:
///  twisted_cubic: 8n^2 - 6n mu - m^2 - 4 mu^2 - (mu - m)^2 >= 0 over
///    n < mu <= 4n, 0 <= m <= 4n; claim: nothing feasible.
///  plane_pair: 4n^2 - m^2 - mu^2 - 2n mu - (m - mu)^2 >= 0 over
///    n <= mu <= 4n, 0 <= m <= 4n; claim: m <= n.
///  section_bound: 4n^2 - nu1^2 - (nu1 - nuB)^2 - (nu2 - nuB)^2 - 2n nuB >= beta
///    for some beta in (2n^2, 4n^2], over 0 <= nu1 <= n, 0 <= nu2 <= 2 nu1,
///    0 <= nuB <= n; rows carry the largest admissible beta; claim:
///    theta = (nu1 + nu2)/3 < (2 sqrt 6 - 3)/3 n.
///  self_intersection: multiplicity m1 of a cycle of degree 4n^2 over
///    0 <= m1 <= 8n^2; claim: every m1 > 4n^2 is infeasible.
FeasibilityResult feasibility_scan(FeasibilityForm form, const FeasibilityBounds& bounds, bool parallel = true);

/// Lambda(t) = 4n^2 - 2n nuB - t^2 - (t - nuB)^2 - (2t - nuB)^2, the upper
/// bound on the section inequality along nu1 = t, nu2 = 2t.
Rational section_profile(const Rational& n, const Rational& nu_b, const Rational& t);
double section_profile(double n, double nu_b, double t);
/// d Lambda / dt = 6 (-2t + nuB).
Rational section_profile_slope(const Rational& nu_b, const Rational& t);

/// max over nuB of Lambda(theta) = 9/2 n^2 - 3 n theta - 3/2 theta^2, at
/// nuB = (3 theta - n) / 2.
Rational section_profile_peak(const Rational& n, const Rational& theta);
Rational section_profile_peak_argument(const Rational& n, const Rational& theta);

/// (2 sqrt 6 - 3) / 3.
double theta_threshold_ratio();
/// Exact test of theta < (2 sqrt 6 - 3)/3 n with theta = (nu1 + nu2) / 3,
/// i.e. (nu1 + nu2 + 3n)^2 < 24 n^2.
bool theta_below_threshold(const Rational& n, const Rational& nu1, const Rational& nu2);

struct SectionAnalysis {
  std::optional<bool> decreasing_beyond_half;  // nullopt when nuB is outside [0, n]
  double max_slope_error = 0.0;  // exact slope against central differences
  Rational peak_argument;
  Rational peak_value;
  double threshold_ratio = 0.0;
  double threshold_residual = 0.0;  // |peak(theta*) - 2 n^2| / n^2
  std::string refusal;
};

/// Checks monotone decrease of Lambda for t > n/2 on a grid, compares the
/// slope formula with central differences, and locates the theta threshold.
SectionAnalysis section_bound_analysis(const Rational& n, const Rational& nu_b, int grid = 200);

/// Strict lower bound for the multiplicity of the line in the cycle:
/// beta > m_sum_lower_bound - deg_z.
Rational line_component_bound(const Rational& n, const Rational& deg_z, const Rational& m_sum_lower_bound);

}  // namespace qwb

#endif

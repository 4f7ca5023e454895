#include "qwb/inequalities.hpp"

#include <algorithm>
#include <cmath>

#include "qwb/errors.hpp"

namespace qwb {

Rational weighted_multiplicity_bound(const Rational& r1, const Rational& s0, const Rational& s1, const Rational& n) {
  if (r1 < 0 || s0 < 0 || s1 < 0) throw InputError("negative weight sum");
  const Rational den = r1 + 2 * s0 + 2 * s1;
  if (den == 0) throw DomainError("zero denominator in the weighted multiplicity bound");
  const Rational num = r1 + 2 * s0 + s1;
  Rational out = 2 * num * num * n * n / den;
  out.canonicalize();
  return out;
}

namespace {

Rational quotient(std::int64_t r1, std::int64_t s0, std::int64_t s1) {
  const Rational num = Rational(r1 + 2 * s0 + s1) * Rational(r1 + 2 * s0 + s1);
  Rational q = num / (Rational(r1 + s0) * Rational(r1 + 2 * s0 + 2 * s1));
  q.canonicalize();
  return q;
}

std::int64_t pair_sum_polynomial(std::int64_t r1, std::int64_t s0, std::int64_t s1) {
  return r1 * r1 + r1 * (s0 + 2 * s1) - (2 * s0 * s0 + 2 * s0 * s1 + 2 * s1 * s1);
}

std::int64_t long_chain_polynomial(std::int64_t r1, std::int64_t s0, std::int64_t s1) {
  return r1 * r1 + 2 * r1 * s0 + 2 * r1 * s1 - s1 * s1;
}

// Keeps the int64 polynomials far from overflow.
constexpr std::int64_t kMaxParameter = 1'000'000;

bool in_range(std::int64_t v) { return v >= -kMaxParameter && v <= kMaxParameter; }

}  // namespace

RatioCheck pair_sum_ratio_check(std::int64_t r1, std::int64_t s0, std::int64_t s1) {
  RatioCheck out;
  if (!in_range(r1) || !in_range(s0) || !in_range(s1)) {
    out.refusal = "parameters out of range";
    return out;
  }
  if (r1 < 1 || r1 > s0 || s1 < 0) {
    out.refusal = "needs 1 <= r1 <= S0 and S1 >= 0";
    return out;
  }
  out.ratio = 2 * quotient(r1, s0, s1);
  out.polynomial = pair_sum_polynomial(r1, s0, s1);
  out.holds = out.ratio >= 3;
  out.equality = out.ratio == 3;
  return out;
}

RatioCheck long_chain_ratio_check(std::int64_t r1, std::int64_t s0, std::int64_t s1) {
  RatioCheck out;
  if (!in_range(r1) || !in_range(s0) || !in_range(s1)) {
    out.refusal = "parameters out of range";
    return out;
  }
  if (r1 < 1 || r1 > s0 || s1 <= r1 + 2 * s0) {
    out.refusal = "needs 1 <= r1 <= S0 and S1 > r1 + 2 S0";
    return out;
  }
  out.ratio = quotient(r1, s0, s1);
  out.polynomial = long_chain_polynomial(r1, s0, s1);
  out.holds = out.ratio >= 2;
  out.equality = out.ratio == 2;
  return out;
}

namespace {

// The scans compare the cross-multiplied ratio in int64; the rational
// quotient above is only for reporting.
template <class Visit>
RatioScan run_scan(std::int64_t outer_max, bool parallel, Visit visit) {
  std::vector<RatioScan> per_outer(static_cast<std::size_t>(std::max<std::int64_t>(outer_max, 0)) + 1);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t s0 = 1; s0 <= outer_max; ++s0) visit(s0, per_outer[s0]);
  RatioScan out;
  for (auto& part : per_outer) {
    out.checked += part.checked;
    out.counterexamples.insert(out.counterexamples.end(), part.counterexamples.begin(), part.counterexamples.end());
    out.equality_cases.insert(out.equality_cases.end(), part.equality_cases.begin(), part.equality_cases.end());
  }
  std::sort(out.counterexamples.begin(), out.counterexamples.end());
  std::sort(out.equality_cases.begin(), out.equality_cases.end());
  return out;
}

}  // namespace

RatioScan pair_sum_scan(std::int64_t max_s0, std::int64_t max_s1, bool parallel) {
  if (max_s0 > kMaxParameter || max_s1 > kMaxParameter) throw InputError("scan bound too large");
  return run_scan(max_s0, parallel, [max_s1](std::int64_t s0, RatioScan& part) {
    for (std::int64_t r1 = 1; r1 <= s0; ++r1) {
      for (std::int64_t s1 = 0; s1 <= max_s1; ++s1) {
        const std::int64_t a = r1 + 2 * s0 + s1;
        const std::int64_t lhs = 2 * a * a;
        const std::int64_t rhs = 3 * (r1 + s0) * (r1 + 2 * s0 + 2 * s1);
        ++part.checked;
        if (lhs < rhs) part.counterexamples.push_back({r1, s0, s1});
        if (lhs == rhs) part.equality_cases.push_back({r1, s0, s1});
      }
    }
  });
}

RatioScan long_chain_scan(std::int64_t max, bool parallel) {
  if (max > kMaxParameter) throw InputError("scan bound too large");
  return run_scan(max, parallel, [max](std::int64_t s0, RatioScan& part) {
    for (std::int64_t r1 = 1; r1 <= s0; ++r1) {
      for (std::int64_t s1 = r1 + 2 * s0 + 1; s1 <= max; ++s1) {
        const std::int64_t a = r1 + 2 * s0 + s1;
        const std::int64_t lhs = a * a;
        const std::int64_t rhs = 2 * (r1 + s0) * (r1 + 2 * s0 + 2 * s1);
        ++part.checked;
        if (lhs < rhs) part.counterexamples.push_back({r1, s0, s1});
        if (lhs == rhs) part.equality_cases.push_back({r1, s0, s1});
      }
    }
  });
}

FeasibilityForm parse_feasibility_form(std::string_view name) {
  if (name == "twisted_cubic" || name == "a") return FeasibilityForm::TwistedCubic;
  if (name == "plane_pair" || name == "b") return FeasibilityForm::PlanePair;
  if (name == "section_bound" || name == "c") return FeasibilityForm::SectionBound;
  if (name == "self_intersection" || name == "d" || name == "4n2") return FeasibilityForm::SelfIntersection;
  throw InputError("unknown feasibility form '" + std::string(name) + "'");
}

std::string to_string(FeasibilityForm form) {
  switch (form) {
    case FeasibilityForm::TwistedCubic: return "twisted_cubic";
    case FeasibilityForm::PlanePair: return "plane_pair";
    case FeasibilityForm::SectionBound: return "section_bound";
    case FeasibilityForm::SelfIntersection: return "self_intersection";
  }
  return "unknown";
}

namespace {

using Row = std::vector<std::int64_t>;

struct Partial {
  std::vector<Row> feasible, violations;
  std::int64_t checked = 0;
};

void twisted_cubic_rows(std::int64_t n, Partial& part) {
  for (std::int64_t mu = n + 1; mu <= 4 * n; ++mu) {
    for (std::int64_t m = 0; m <= 4 * n; ++m) {
      ++part.checked;
      const std::int64_t value = 8 * n * n - 6 * n * mu - m * m - 4 * mu * mu - (mu - m) * (mu - m);
      if (value >= 0) {
        part.feasible.push_back({n, mu, m});
        part.violations.push_back({n, mu, m});
      }
    }
  }
}

void plane_pair_rows(std::int64_t n, Partial& part) {
  for (std::int64_t mu = n; mu <= 4 * n; ++mu) {
    for (std::int64_t m = 0; m <= 4 * n; ++m) {
      ++part.checked;
      const std::int64_t value = 4 * n * n - m * m - mu * mu - 2 * n * mu - (m - mu) * (m - mu);
      if (value >= 0) {
        part.feasible.push_back({n, mu, m});
        if (m > n) part.violations.push_back({n, mu, m});
      }
    }
  }
}

void section_bound_rows(std::int64_t n, Partial& part) {
  for (std::int64_t nu1 = 0; nu1 <= n; ++nu1) {
    for (std::int64_t nu2 = 0; nu2 <= 2 * nu1; ++nu2) {
      for (std::int64_t nub = 0; nub <= n; ++nub) {
        ++part.checked;
        const std::int64_t value =
            4 * n * n - nu1 * nu1 - (nu1 - nub) * (nu1 - nub) - (nu2 - nub) * (nu2 - nub) - 2 * n * nub;
        // some integer beta with 2n^2 < beta <= value
        if (value > 2 * n * n) {
          part.feasible.push_back({n, nu1, nu2, nub, value});
          const std::int64_t s = nu1 + nu2 + 3 * n;
          if (s * s >= 24 * n * n) part.violations.push_back({n, nu1, nu2, nub, value});
        }
      }
    }
  }
}

void self_intersection_rows(std::int64_t n, Partial& part) {
  const std::int64_t degree = 4 * n * n;
  for (std::int64_t m1 = 0; m1 <= 2 * degree; ++m1) {
    ++part.checked;
    // a point of multiplicity m1 on an effective cycle of degree 4n^2
    if (m1 > degree) continue;
    part.feasible.push_back({n, m1});
  }
}

}  // namespace

FeasibilityResult feasibility_scan(FeasibilityForm form, const FeasibilityBounds& bounds, bool parallel) {
  if (bounds.n_max < 1 || bounds.n_max > 10'000) throw InputError("n_max must lie in [1, 10000]");
  FeasibilityResult out;
  out.form = form;
  void (*rows)(std::int64_t, Partial&) = nullptr;
  switch (form) {
    case FeasibilityForm::TwistedCubic:
      out.columns = {"n", "mu", "m"};
      out.claim = "no feasible (m, mu) with mu > n";
      rows = twisted_cubic_rows;
      break;
    case FeasibilityForm::PlanePair:
      out.columns = {"n", "mu", "m"};
      out.claim = "mu >= n forces m <= n";
      rows = plane_pair_rows;
      break;
    case FeasibilityForm::SectionBound:
      out.columns = {"n", "nu1", "nu2", "nuB", "beta_max"};
      out.claim = "beta > 2n^2 forces (nu1 + nu2) / 3 < (2 sqrt 6 - 3) / 3 n";
      rows = section_bound_rows;
      break;
    case FeasibilityForm::SelfIntersection:
      out.columns = {"n", "m1"};
      out.claim = "no point of multiplicity above 4n^2 on a cycle of degree 4n^2";
      rows = self_intersection_rows;
      break;
  }
  std::vector<Partial> parts(static_cast<std::size_t>(bounds.n_max) + 1);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t n = 1; n <= bounds.n_max; ++n) rows(n, parts[n]);
  for (auto& part : parts) {
    out.checked += part.checked;
    out.feasible.insert(out.feasible.end(), part.feasible.begin(), part.feasible.end());
    out.claim_violations.insert(out.claim_violations.end(), part.violations.begin(), part.violations.end());
  }
  std::sort(out.feasible.begin(), out.feasible.end());
  std::sort(out.claim_violations.begin(), out.claim_violations.end());
  out.claim_holds = out.claim_violations.empty();
  return out;
}

Rational section_profile(const Rational& n, const Rational& nu_b, const Rational& t) {
  const Rational a = t - nu_b;
  const Rational b = 2 * t - nu_b;
  Rational out = 4 * n * n - 2 * n * nu_b - t * t - a * a - b * b;
  out.canonicalize();
  return out;
}

double section_profile(double n, double nu_b, double t) {
  return 4 * n * n - 2 * n * nu_b - t * t - (t - nu_b) * (t - nu_b) - (2 * t - nu_b) * (2 * t - nu_b);
}

Rational section_profile_slope(const Rational& nu_b, const Rational& t) {
  Rational out = 6 * (nu_b - 2 * t);
  out.canonicalize();
  return out;
}

Rational section_profile_peak(const Rational& n, const Rational& theta) {
  Rational out = Rational(9, 2) * n * n - 3 * n * theta - Rational(3, 2) * theta * theta;
  out.canonicalize();
  return out;
}

Rational section_profile_peak_argument(const Rational& n, const Rational& theta) {
  Rational out = (3 * theta - n) / 2;
  out.canonicalize();
  return out;
}

double theta_threshold_ratio() { return (2.0 * std::sqrt(6.0) - 3.0) / 3.0; }

bool theta_below_threshold(const Rational& n, const Rational& nu1, const Rational& nu2) {
  if (n <= 0) throw InputError("n must be positive");
  const Rational s = nu1 + nu2 + 3 * n;
  if (s < 0) return true;
  return s * s < 24 * n * n;
}

SectionAnalysis section_bound_analysis(const Rational& n, const Rational& nu_b, int grid) {
  SectionAnalysis out;
  if (n <= 0) throw InputError("n must be positive");
  if (grid < 2) throw InputError("grid needs at least two points");
  if (nu_b < 0 || nu_b > n) {
    out.refusal = "nu_B must lie in [0, n]";
    return out;
  }
  const double nd = n.get_d();
  const double bd = nu_b.get_d();
  const double h = 1e-4 * nd;
  bool decreasing = true;
  Rational previous;
  for (int k = 0; k <= grid; ++k) {
    // t runs over (n/2, 2n] on an exact grid
    const Rational t = n / 2 + Rational(3 * (k + 1), 2 * (grid + 1)) * n;
    const Rational value = section_profile(n, nu_b, t);
    if (k > 0 && !(value < previous)) decreasing = false;
    if (section_profile_slope(nu_b, t) >= 0) decreasing = false;
    previous = value;
    const double td = t.get_d();
    const double fd = (section_profile(nd, bd, td + h) - section_profile(nd, bd, td - h)) / (2 * h);
    const double scale = std::max(1.0, nd);
    out.max_slope_error = std::max(out.max_slope_error, std::abs(fd - section_profile_slope(nu_b, t).get_d()) / scale);
  }
  out.decreasing_beyond_half = decreasing;
  out.threshold_ratio = theta_threshold_ratio();
  const double theta = out.threshold_ratio * nd;
  const double peak = 4.5 * nd * nd - 3 * nd * theta - 1.5 * theta * theta;
  out.threshold_residual = std::abs(peak - 2 * nd * nd) / (nd * nd);
  const Rational theta_q = Rational(out.threshold_ratio) * n;
  out.peak_argument = section_profile_peak_argument(n, theta_q);
  out.peak_value = section_profile_peak(n, theta_q);
  return out;
}

Rational line_component_bound(const Rational& n, const Rational& deg_z, const Rational& m_sum_lower_bound) {
  if (n <= 0) throw InputError("n must be positive");
  if (deg_z != 4 * n * n) throw InputError("the cycle degree must be 4n^2");
  Rational out = m_sum_lower_bound - deg_z;
  out.canonicalize();
  return out;
}

}  // namespace qwb

#include "qwb/pipeline.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <random>

#include "qwb/errors.hpp"
#include "qwb/inequalities.hpp"

namespace qwb {

std::string to_string(StepStatus s) {
  switch (s) {
    case StepStatus::Passed: return "passed";
    case StepStatus::Contradiction: return "contradiction";
    case StepStatus::Inconsistent: return "inconsistent";
    case StepStatus::Refused: return "refused";
  }
  return "unknown";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Contradiction: return "contradiction";
    case Outcome::QuadricMaximal: return "quadric_maximal";
    case Outcome::Survived: return "survived";
    case Outcome::Inconsistent: return "inconsistent";
    case Outcome::Incomplete: return "incomplete";
  }
  return "unknown";
}

void validate(const PipelineInput& input) {
  std::vector<std::string> problems = input.graph.violations();
  if (input.graph.K() < 1) problems.push_back("the graph is empty");
  for (auto& v : input.mult.violations()) problems.push_back(v);
  if (input.mult.K() != input.graph.K()) problems.push_back("nu must have K entries");
  for (auto& v : input.cycle.violations()) problems.push_back(v);
  if (static_cast<int>(input.cycle.m_values.size()) != input.graph.L()) problems.push_back("m must have L entries");
  if (!problems.empty()) {
    std::string msg = "invalid pipeline input:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw InputError(msg);
  }
}

namespace {

class Run {
 public:
  explicit Run(PipelineVerdict& v) : v_(v) {}

  bool pass(const std::string& name, std::string detail) {
    v_.steps.push_back({name, StepStatus::Passed, std::move(detail)});
    return true;
  }

  bool stop(const std::string& name, StepStatus status, std::string detail) {
    v_.steps.push_back({name, status, std::move(detail)});
    v_.deciding_step = name;
    switch (status) {
      case StepStatus::Contradiction: v_.outcome = Outcome::Contradiction; break;
      case StepStatus::Inconsistent: v_.outcome = Outcome::Inconsistent; break;
      case StepStatus::Refused: v_.outcome = Outcome::Incomplete; break;
      case StepStatus::Passed: break;
    }
    return false;
  }

  // Constraint: failing means the data cannot come from a maximal singularity.
  bool require(const std::string& name, bool ok, std::string detail) {
    return ok ? pass(name, std::move(detail)) : stop(name, StepStatus::Contradiction, std::move(detail));
  }

  // Derived: failing means an implication of the argument broke.
  bool derive(const std::string& name, bool ok, std::string detail) {
    return ok ? pass(name, std::move(detail)) : stop(name, StepStatus::Inconsistent, std::move(detail));
  }

 private:
  PipelineVerdict& v_;
};

std::string q(const Rational& x) { return to_string(x); }

Rational rat(std::uint64_t v) { return Rational(static_cast<unsigned long>(v)); }

bool run_steps(const PipelineInput& input, PipelineVerdict& v) {
  Run run(v);
  const Rational& n = input.mult.n;
  const auto& nu = input.mult.nu;

  run.pass("input", "K=" + std::to_string(input.graph.K()) + " L=" + std::to_string(input.graph.L()) +
                        " n=" + q(n));

  if (nu[1] > n) {
    v.steps.push_back({"quadric_maximal", StepStatus::Passed, "nu_1 = " + q(nu[1]) + " > n = " + q(n)});
    v.deciding_step = "quadric_maximal";
    v.outcome = Outcome::QuadricMaximal;
    return false;
  }
  run.pass("quadric_maximal", "nu_1 = " + q(nu[1]) + " <= n, the quadric is not maximal");

  NoetherFano nf = noether_fano_check(input.graph, input.mult);
  if (!run.require("noether_fano", nf.holds, "lhs " + q(nf.lhs) + " vs rhs " + q(nf.rhs))) return false;

  Descent d = descend_to_strict(input.graph, input.mult);
  const int K = d.vertex;
  if (!run.derive("descend", nu[K] > n, "vertex " + std::to_string(K) + " with nu = " + q(nu[K]))) return false;
  v.maximal_vertex = K;
  const ResolutionGraph g = input.graph.truncated(K);
  const int L = g.L();
  MultiplicityVector mult;
  mult.nu.assign(nu.begin(), nu.begin() + K + 1);
  mult.n = n;
  std::vector<Rational> m(input.cycle.m_values.begin(), input.cycle.m_values.begin() + L);

  if (!run.require("centre_is_point", L >= 2, "lower part has " + std::to_string(L) + " vertices")) return false;

  ModifiedNoetherFano mnf = modified_nf_check(g, mult);
  if (!mnf.holds) return run.stop("modified_nf", StepStatus::Inconsistent, mnf.refusal);
  if (!run.derive("modified_nf", *mnf.holds, "lhs " + q(mnf.values.lhs) + " vs rhs " + q(mnf.values.rhs)))
    return false;

  v.r = r_values(g);
  const auto& r = v.r;
  std::vector<Rational> a(L);
  for (int i = 1; i <= L; ++i) a[i - 1] = rat(r[i]);
  bool ones = true;
  for (int i = L; i <= K; ++i) ones = ones && r[i] == 1;
  if (!run.derive("compatible", ones && compatible_check(g, a), "r on the lower part is compatible")) return false;

  Rational weighted_m = 0;
  for (int i = 1; i <= L; ++i) weighted_m += a[i - 1] * m[i - 1];
  const Rational counted = counting_bound(g, a, mult);
  if (!run.require("counting_bound", weighted_m >= counted,
                   "sum r_i m_i = " + q(weighted_m) + " vs " + q(counted)))
    return false;

  const Rational r1 = rat(r[1]);
  Rational s0 = 0;
  for (int i = 2; i <= L; ++i) s0 += rat(r[i]);
  const Rational s1 = K - L;
  const Rational minimum = weighted_multiplicity_bound(r1, s0, s1, n);
  if (!run.derive("quadratic_minimum", counted > minimum && weighted_m > minimum,
                  q(counted) + " > " + q(minimum)))
    return false;

  const std::int64_t r1i = static_cast<std::int64_t>(r[1]);
  const std::int64_t s0i = static_cast<std::int64_t>(s0.get_num().get_si());
  const std::int64_t s1i = K - L;
  RatioCheck pair = pair_sum_ratio_check(r1i, s0i, s1i);
  const Rational m12 = m[0] + m[1];
  const Rational deg_z = 4 * n * n;
  if (!pair.holds) return run.stop("pair_sum", StepStatus::Inconsistent, pair.refusal);
  if (!run.derive("pair_sum", *pair.holds && m12 > 6 * n * n,
                  "m_1 + m_2 = " + q(m12) + " > 6n^2 = " + q(6 * n * n) + ", ratio " + q(pair.ratio)))
    return false;

  const auto& cycle = input.cycle;
  if (!cycle.beta || sgn(*cycle.beta) == 0)
    return run.stop("line_component", StepStatus::Contradiction,
                    "the line is not in the cycle, so deg Z = " + q(deg_z) + " >= m_1 + m_2 = " + q(m12) + " fails");
  const Rational& beta = *cycle.beta;
  const Rational beta_floor = line_component_bound(n, deg_z, m12);
  if (!run.require("line_component", beta >= beta_floor && beta <= deg_z,
                   "beta = " + q(beta) + " against [" + q(beta_floor) + ", " + q(deg_z) + "]"))
    return false;
  if (!(beta > 2 * n * n))
    return run.stop("line_component", StepStatus::Inconsistent, "beta = " + q(beta) + " <= 2n^2");

  if (!cycle.nu_b || !cycle.d_b)
    return run.stop("line_multiplicity", StepStatus::Refused, "nu_B and d_B are required");
  const Rational& nu_b = *cycle.nu_b;
  const bool split = beta == nu_b * nu_b + *cycle.d_b;
  if (!run.require("line_multiplicity", split && nu_b <= n && nu_b <= mult.nu[2],
                   "nu_B = " + q(nu_b) + ", d_B = " + q(*cycle.d_b) + ", beta = nu_B^2 + d_B " +
                       (split ? "holds" : "fails")))
    return false;

  const Rational a1 = mult.nu[1] - nu_b, a2 = mult.nu[2] - nu_b;
  const Rational section = deg_z - mult.nu[1] * mult.nu[1] - a1 * a1 - a2 * a2 - 2 * n * nu_b;
  if (!run.require("section_inequality", section >= beta, q(section) + " >= beta = " + q(beta))) return false;

  const Rational theta = (mult.nu[1] + mult.nu[2]) / 3;
  if (!run.derive("theta_bound", theta_below_threshold(n, mult.nu[1], mult.nu[2]),
                  "theta = " + q(theta) + ", (nu_1 + nu_2 + 3n)^2 < 24 n^2"))
    return false;

  // r_1 nu_1 + (S0 + S1) nu_2 > n (r_1 + 2 S0 + S1), maximized on the ray.
  const bool ray = theta * (r1 + 2 * s0 + 2 * s1) > n * (r1 + 2 * s0 + s1);
  if (!run.derive("chain_length", ray && s1 > r1 + 2 * s0,
                  "S1 = " + q(s1) + " > r_1 + 2 S0 = " + q(r1 + 2 * s0)))
    return false;

  RatioCheck chain = long_chain_ratio_check(r1i, s0i, s1i);
  if (!chain.holds) return run.stop("long_chain_ratio", StepStatus::Inconsistent, chain.refusal);
  const Rational target = 4 * (r1 + s0) * n * n;
  const Rational lead = r1 * m[0] + s0 * m[1];
  if (!run.derive("long_chain_ratio", *chain.holds && minimum >= target && lead > target,
                  "r_1 m_1 + S0 m_2 = " + q(lead) + " > " + q(target) + ", ratio " + q(chain.ratio)))
    return false;

  // lead > 4 (r1 + S0) n^2 with m_1 >= m_2 gives m_1 > 4n^2.
  if (!(m[0] > deg_z))
    return run.stop("degree_bound", StepStatus::Inconsistent, "m_1 = " + q(m[0]) + " <= 4n^2");
  return run.stop("degree_bound", StepStatus::Contradiction,
                  "m_1 = " + q(m[0]) + " exceeds deg Z = " + q(deg_z));
}

}  // namespace

PipelineVerdict exclusion_pipeline(const PipelineInput& input) {
  validate(input);
  PipelineVerdict v;
  if (run_steps(input, v)) {
    v.outcome = Outcome::Survived;
    v.deciding_step.clear();
  }
  return v;
}

namespace {

const std::vector<ResolutionGraph>& graph_pool(int K) {
  static std::mutex mutex;
  static std::map<int, std::vector<ResolutionGraph>> pools;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = pools.find(K);
  if (it == pools.end()) it = pools.emplace(K, enumerate_graphs(K, false)).first;
  return it->second;
}

std::mt19937_64 candidate_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) return lo;
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational ceil_to(const Rational& x, std::int64_t den) {
  mpz_class num = x.get_num() * den;
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  Rational r(out, den);
  r.canonicalize();
  return r;
}

}  // namespace

PipelineInput random_candidate(std::uint64_t seed, std::uint64_t index, const CandidateOptions& options) {
  if (options.max_K < 1 || options.max_K > 8) throw InputError("max_K must lie in [1, 8]");
  if (options.max_n < 1) throw InputError("max_n must be positive");
  auto rng = candidate_rng(seed, index);
  bool adversarial = std::uniform_real_distribution<double>(0, 1)(rng) < options.adversarial_share;

  // Adversarial draws need an upper part (the inequality fails on lower
  // vertices alone when nu_1 <= n) and L >= 2.
  if (options.max_K < 3) adversarial = false;
  const int K = static_cast<int>(uniform(rng, adversarial ? 3 : 1, options.max_K));
  const auto& pool = graph_pool(K);
  // Pools are grouped by L; pick L first so short lower parts are not rare.
  const int want_L = static_cast<int>(adversarial ? uniform(rng, 2, K - 1) : uniform(rng, 1, K));
  auto by_l = [](const ResolutionGraph& a, int l) { return a.L() < l; };
  const auto first = std::lower_bound(pool.begin(), pool.end(), want_L, by_l);
  const auto last = std::lower_bound(first, pool.end(), want_L + 1, by_l);
  const ResolutionGraph& g = first[uniform(rng, 0, static_cast<std::int64_t>(last - first) - 1)];
  const int L = g.L();

  const std::int64_t n = uniform(rng, 1, options.max_n);
  const std::int64_t den = std::array<std::int64_t, 3>{1, 2, 4}[uniform(rng, 0, 2)];
  const std::int64_t N = n * den;

  // scaled nu: nu_1 <= n, nu_2 <= 2 nu_1, nonincreasing, <= 2n
  std::vector<std::int64_t> k(K + 1, 0);
  k[1] = adversarial ? uniform(rng, N - N / 4, N) : uniform(rng, 1, N);
  for (int i = 2; i <= K; ++i) {
    const std::int64_t hi = i == 2 ? std::min(2 * k[1], 2 * N) : k[i - 1];
    k[i] = adversarial ? uniform(rng, std::max<std::int64_t>(1, hi - hi / 16), hi) : uniform(rng, 1, hi);
  }
  std::vector<Rational> nu;
  for (int i = 1; i <= K; ++i) nu.emplace_back(k[i], den);
  for (auto& x : nu) x.canonicalize();
  PipelineInput in{g, MultiplicityVector::make(nu, Rational(n)), {}};

  const Rational deg_z = Rational(4 * n * n);
  std::vector<Rational> m(L);
  if (adversarial) {
    // Equal values just above what the counting bound needs on the full graph.
    std::vector<std::uint64_t> r = r_values(g);
    std::vector<Rational> a(L);
    Rational weight = 0;
    for (int i = 1; i <= L; ++i) {
      a[i - 1] = Rational(static_cast<unsigned long>(r[i]));
      weight += a[i - 1];
    }
    const Rational need = counting_bound(g, a, in.mult) / weight;
    const Rational level = ceil_to(need, den) + Rational(uniform(rng, 0, 2 * N), den);
    for (int i = 0; i < L; ++i) m[i] = level;
  } else {
    std::int64_t prev = uniform(rng, 0, 8 * n * n * den);
    for (int i = 0; i < L; ++i) {
      m[i] = Rational(prev, den);
      m[i].canonicalize();
      prev = uniform(rng, 0, prev);
    }
  }
  in.cycle.m_values = m;

  if (uniform(rng, 0, 9) == 0) return in;  // no line component recorded
  Rational beta;
  if (adversarial) {
    const Rational m12 = L >= 2 ? m[0] + m[1] : m[0];
    beta = std::max(Rational(0), ceil_to(m12 - deg_z, den)) + Rational(uniform(rng, 0, N), den);
  } else {
    beta = Rational(uniform(rng, 0, 4 * n * n * den), den);
  }
  beta.canonicalize();
  const std::int64_t nub_hi = K >= 2 ? std::min(N, k[2]) : N;
  std::int64_t nub = uniform(rng, 0, nub_hi);
  if (adversarial && K >= 2) {
    // near the maximizer (3 theta - n) / 2 of the section bound
    const std::int64_t peak = (k[1] + k[2] - N) / 2;
    nub = std::clamp<std::int64_t>(peak + uniform(rng, -1, 1), 0, nub_hi);
  }
  Rational nu_b(nub, den);
  nu_b.canonicalize();
  Rational d_b = beta - nu_b * nu_b;
  if (d_b < 0) d_b = 0;
  in.cycle.beta = nu_b * nu_b + d_b;
  in.cycle.nu_b = nu_b;
  in.cycle.d_b = d_b;
  return in;
}

PipelineBatch run_pipeline_batch(std::int64_t count, std::uint64_t seed, const CandidateOptions& options,
                                 bool parallel) {
  if (count < 0) throw InputError("count must be nonnegative");
  for (int K = 1; K <= options.max_K; ++K) graph_pool(K);
  std::vector<PipelineVerdict> verdicts(count);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::int64_t i = 0; i < count; ++i) verdicts[i] = exclusion_pipeline(random_candidate(seed, i, options));
  PipelineBatch batch;
  batch.instances = count;
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& v = verdicts[i];
    ++batch.outcomes[to_string(v.outcome)];
    ++batch.deciding_steps[v.deciding_step.empty() ? "none" : v.deciding_step];
    if (v.outcome != Outcome::Contradiction) batch.non_contradicted.push_back(static_cast<std::uint64_t>(i));
  }
  return batch;
}

}  // namespace qwb

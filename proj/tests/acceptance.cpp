// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "qwb/errors.hpp"
#include "qwb/graph.hpp"
#include "qwb/inequalities.hpp"
#include "qwb/involutions.hpp"
#include "qwb/oracles.hpp"
#include "qwb/picard.hpp"
#include "qwb/pipeline.hpp"
#include "qwb/quartic.hpp"
#include "qwb/untwisting.hpp"

using namespace qwb;

namespace {

struct Verdict {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (passed) detail << "first failure: " << why << "; ";
    passed = false;
  }
};

double max_abs(const ComplexPoint& a, const ComplexPoint& b) {
  double d = 0.0;
  for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

template <int N>
std::array<std::int64_t, N> product(const InvolutionMatrix<N>& m, const std::array<std::int64_t, N>& v) {
  std::array<std::int64_t, N> out{};
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) out[i] += m.entries[i][k] * v[k];
  return out;
}

template <int N>
bool squares_to_identity(const InvolutionMatrix<N>& m) {
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < N; ++k) s += m.entries[i][k] * m.entries[k][j];
      if (s != (i == j ? 1 : 0)) return false;
    }
  return true;
}

void involution_matrices(Verdict& v) {
  const auto& g = galois_pullback_matrix();
  const auto& l = line_pullback_matrix();
  if (!squares_to_identity(g)) v.fail("2x2 matrix squared is not I");
  if (!squares_to_identity(l)) v.fail("3x3 matrix squared is not I");
  if (product(g, {1, 0}) != std::array<std::int64_t, 2>{3, -4}) v.fail("H does not map to 3H - 4Q");
  if (product(l, {1, 0, 0}) != std::array<std::int64_t, 3>{11, -6, -12}) v.fail("H does not map to 11H - 6Q - 12D");
  std::int64_t checked = 0;
  for (std::int64_t n = 1; n <= 50; ++n)
    for (std::int64_t x = 0; x <= 75; ++x) {
      if (degree_after(0, n, x) != product(g, {n, -x})[0]) v.fail("3n - 2m at n=" + std::to_string(n));
      for (int a = 1; a <= 24; ++a)
        if (degree_after(a, n, x) != product(l, {n, 0, -x})[0]) v.fail("11n - 10mu at n=" + std::to_string(n));
      checked += 25;
    }
  v.detail << "M^2 = I for both matrices; " << checked << " degree values match the matrix products";
}

void lines(Verdict& v) {
  const QuarticData d = bundled_quartic();
  const GenericityReport r = find_lines(d);
  if (r.lines.size() != 24 || !r.distinct) v.fail("expected 24 distinct lines, got " + std::to_string(r.lines.size()));
  double worst_residual = 0.0, min_margin = 1e300;
  for (const auto& line : r.lines) {
    for (double x : line.residuals) worst_residual = std::max(worst_residual, x);
    min_margin = std::min(min_margin, line.margin);
  }
  if (!(worst_residual < 1e-10)) v.fail("residual too large");
  if (!(min_margin > 1e-6)) v.fail("simple-root margin too small");

  LineSearchOptions reseeded;
  reseeded.seed = 987654321;
  const double seed_shift = line_set_distance(r.lines, find_lines(d, reseeded).lines);
  if (!(seed_shift < 1e-7)) v.fail("unstable under a new root-finder seed");

  // z = A w with A rational and invertible, so o stays the origin. A is a
  // product of rational plane rotations and a diagonal scaling.
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  std::uniform_int_distribution<int> pick(0, 4);
  const Rational scales[] = {Rational(1, 2), Rational(2, 3), Rational(1), Rational(3, 2), Rational(2)};
  double coord_shift = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    ExactMatrix4 a = identity4();
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        Rational t(num(rng), den(rng));
        t.canonicalize();
        const Rational c = (1 - t * t) / (1 + t * t), s = 2 * t / (1 + t * t);
        ExactMatrix4 g = identity4();
        g[p * 4 + p] = c;
        g[q * 4 + q] = c;
        g[p * 4 + q] = Rational(-s);
        g[q * 4 + p] = s;
        a = multiply(g, a);
      }
    for (int r = 0; r < 4; ++r) {
      const Rational k = scales[pick(rng)];
      for (int c = 0; c < 4; ++c) a[r * 4 + c] = a[r * 4 + c] * GaussianRational(k);
    }
    if (exact_rank(a) != 4) v.fail("coordinate change is singular");
    const QuarticData moved = QuarticData::make(d.q2.substitute_linear(a), d.q3.substitute_linear(a),
                                                d.q4.substitute_linear(a));
    GenericityReport m = find_lines(moved, reseeded);
    if (m.lines.size() != 24) v.fail("coordinate change lost lines");
    for (auto& line : m.lines) {
      ComplexPoint back{};
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) back[i] += a[i * 4 + k].to_complex() * line.direction[k];
      line.direction = back;
    }
    coord_shift = std::max(coord_shift, line_set_distance(r.lines, m.lines));
  }
  if (!(coord_shift < 1e-7)) v.fail("unstable under a coordinate change");
  v.detail << r.lines.size() << " lines, max residual " << worst_residual << ", min margin " << min_margin
           << ", reseed shift " << seed_shift << ", coordinate-change shift " << coord_shift << " over 3 changes";
}

void galois_involution(Verdict& v) {
  const QuarticData d = bundled_quartic();
  auto points = rational_points_on_quartic(d, 6);
  if (points.size() < 100) v.fail("fewer than 100 rational points");
  points.resize(std::min<std::size_t>(points.size(), 100));
  int fixed = 0;
  for (const auto& x : points) {
    const ExactPoint y = apply_galois_involution(d, x);
    if (!(apply_galois_involution(d, y) == x)) v.fail("tau0 twice is not the identity");
    const bool at_one = second_vieta_root(d, x) == GaussianRational(1);
    if ((y == x) != at_one) v.fail("fixed point does not match t2 = 1");
    fixed += y == x;
  }
  // A quartic ramified at (1,0,0,0): q2 = q4 = 1 and q3 = -2 there.
  const QuarticData ramified = QuarticData::make(parse_polynomial("z1^2+z2^2+z3^2", 2),
                                                 parse_polynomial("z4^3-2z1^3", 3),
                                                 parse_polynomial("z1^4+z2^4+z3^4+z4^4", 4));
  const ExactPoint p{1, 0, 0, 0};
  const bool ramified_ok =
      second_vieta_root(ramified, p) == GaussianRational(1) && apply_galois_involution(ramified, p) == p;
  if (!ramified_ok) v.fail("ramification point is not fixed");
  v.detail << points.size() << " rational points, exact round trips, " << fixed
           << " fixed on the bundled quartic; ramified test point fixed";
}

void line_involutions(Verdict& v) {
  const QuarticData d = bundled_quartic();
  const GenericityReport r = find_lines(d);
  if (r.lines.size() != 24) {
    v.fail("line search failed");
    return;
  }
  const auto points = complex_points_on_quartic(d, 50, 31);
  double worst_back = 0.0, worst_f = 0.0, worst_plane = 0.0;
  int runs = 0;
  for (int li : {0, 9, 19}) {
    const ComplexPoint& dir = r.lines[li].direction;
    for (const auto& x : points) {
      try {
        const LineInvolutionResult once = apply_line_involution(d, dir, x);
        const LineInvolutionResult twice = apply_line_involution(d, dir, once.image);
        double scale = 1.0;
        for (const auto& c : x) scale = std::max(scale, std::abs(c));
        worst_back = std::max(worst_back, max_abs(twice.image, x) / scale);
        worst_f = std::max(worst_f, once.f_residual);
        worst_plane = std::max(worst_plane, plane_distance(dir, x, once.image));
        ++runs;
      } catch (const std::exception& e) {
        v.fail(std::string("line ") + std::to_string(li + 1) + ": " + e.what());
      }
    }
  }
  if (!(worst_back < 1e-8)) v.fail("round trip error too large");
  if (!(worst_f < 1e-8)) v.fail("image is off the quartic");
  if (!(worst_plane < 1e-8)) v.fail("image left the plane");
  v.detail << runs << " round trips over 3 lines, max error " << worst_back << ", max |f| " << worst_f
           << ", max plane distance " << worst_plane;
}

void untwisting_dichotomy(Verdict& v) {
  std::int64_t single = 0, rejected = 0, below = 0;
  for (std::int64_t n = 1; n <= 50; ++n) {
    for (int g = 0; g < kGeneratorCount; ++g) {
      for (std::int64_t rest : {std::int64_t{0}, n}) {
        for (std::int64_t x = n + 1; x <= 2 * n; ++x) {
          DegreeState s = DegreeState::uniform(n, rest, rest);
          s.entry(g) = x;
          if (!(degree_after(g, n, x) < n)) v.fail("degree did not drop at n=" + std::to_string(n));
          ++single;
          try {
            if (!(untwist_step(s).n < n)) v.fail("untwist_step did not decrease n");
          } catch (const DomainError&) {
            if (degree_after(g, n, x) >= 1) v.fail("untwist_step rejected a positive degree");
            ++rejected;
          }
        }
      }
      for (std::int64_t x = 0; x < n; ++x) {
        if (!(degree_after(g, n, x) > n)) v.fail("degree did not grow at n=" + std::to_string(n));
        ++below;
      }
    }
    if (n > 1 && classify(DegreeState::uniform(n, n - 1, n - 1)).kind != Classification::Kind::Canonical)
      v.fail("state below n is not canonical");
  }
  v.detail << single << " single-excess states decrease (" << rejected << " with a nonpositive image rejected), "
           << below << " sub-n entries raise the degree";
}

// Sequences 1, a_1, .., a_k, 1 with a_i in [2, 20], no two neighbours equal.
void local_maximum(Verdict& v) {
  constexpr int kMaxLength = 12, kTop = 20, kBrute = 8;
  std::int64_t brute = 0;
  std::vector<std::int64_t> seq;
  std::function<void(int)> fill = [&](int length) {
    if (static_cast<int>(seq.size()) == length - 1) {
      if (seq.back() == 1) return;
      seq.push_back(1);
      auto e = find_local_max(seq);
      if (!e || *e == 0 || *e + 1 >= seq.size() || !(seq[*e] > seq[*e - 1] && seq[*e] > seq[*e + 1]))
        v.fail("no interior local maximum");
      ++brute;
      seq.pop_back();
      return;
    }
    for (std::int64_t a = 2; a <= kTop; ++a) {
      if (a == seq.back()) continue;
      seq.push_back(a);
      fill(length);
      seq.pop_back();
    }
  };
  for (int length = 3; length <= kBrute; ++length) {
    seq = {1};
    fill(length);
  }

  // Longer sequences: the prefix up to the first descent is strictly
  // increasing, so it ends in a local maximum. Enumerate those prefixes, count
  // the completions, and run find_local_max on extreme completions.
  std::int64_t covered = 0, probes = 0, expected = 0;
  for (int length = kBrute + 1; length <= kMaxLength; ++length) {
    std::int64_t total = 19;
    for (int k = 0; k < length - 3; ++k) total *= 18;
    expected += total;
    std::function<void(std::vector<std::int64_t>&)> grow = [&](std::vector<std::int64_t>& prefix) {
      const int used = static_cast<int>(prefix.size());
      for (std::int64_t a = 1; a <= kTop; ++a) {
        if (a == prefix.back()) continue;
        const bool last = used == length - 1;
        if (last != (a == 1)) continue;
        prefix.push_back(a);
        if (a > prefix[used - 1]) {
          grow(prefix);
        } else {
          // descent at the new entry; the peak sits at used - 1
          const int free = length - 1 - used - 1;
          std::int64_t completions = 1;
          for (int k = 0; k < free; ++k) completions *= 18;
          covered += completions;
          for (int variant = 0; variant < 2; ++variant) {
            std::vector<std::int64_t> s = prefix;
            while (static_cast<int>(s.size()) < length - 1) {
              std::int64_t next = variant == 0 ? (s.back() == 2 ? 3 : 2) : (s.back() == kTop ? kTop - 1 : kTop);
              s.push_back(next);
            }
            if (static_cast<int>(s.size()) < length) s.push_back(1);
            auto e = find_local_max(s);
            if (!e || *e != static_cast<std::size_t>(used - 1)) v.fail("prefix peak not returned");
            ++probes;
          }
        }
        prefix.pop_back();
      }
    };
    std::vector<std::int64_t> start{1};
    grow(start);
  }
  if (covered != expected) v.fail("prefix tree does not cover every sequence");
  v.detail << brute << " sequences of length <= " << kBrute << " checked directly; lengths " << kBrute + 1 << ".."
           << kMaxLength << ": " << covered << " of " << expected << " covered by first-peak prefixes, " << probes
           << " probes";
}

void graph_calculus(Verdict& v) {
  std::int64_t graphs = 0, pairs = 0;
  for (int K = 1; K <= 8; ++K)
    for (const auto& g : enumerate_graphs(K)) {
      ++graphs;
      const PathCounts p = path_counts(g);
      for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= i; ++j, ++pairs)
          if (p(i, j) != oracle::brute_force_paths(g, i, j)) v.fail("path count mismatch");
      const PathCounts q = path_counts(modify_graph(g));
      for (int i = 1; i <= K; ++i) {
        if (i > g.L() && q(K, i) != p(K, i)) v.fail("modification changed an upper count");
        if (i <= g.L() && q(K, i) > p(K, i)) v.fail("modification raised a lower count");
      }
    }
  const LatticeScan scan = modified_nf_lattice_scan(6, 4, 2, true);
  if (!scan.counterexamples.empty()) v.fail("modified inequality counterexample: " + scan.counterexamples.front());
  if (scan.premise == 0) v.fail("lattice scan had no instance with the premise");
  v.detail << graphs << " graphs (K <= 8), " << pairs << " path counts match DFS, modification invariants hold; "
           << "lattice K <= 6, n = 4, step 1/2: " << scan.instances << " instances, " << scan.premise
           << " with the premise, 0 counterexamples";
}

void inequality_lab(Verdict& v) {
  const RatioScan pair = pair_sum_scan(40, 120);
  if (!pair.counterexamples.empty()) v.fail("pair-sum counterexample");
  std::vector<Triple> diagonal;
  for (std::int64_t c = 1; c <= 40; ++c) diagonal.push_back({c, c, 0});
  if (pair.equality_cases != diagonal) v.fail("equality set is not {(c, c, 0)}");
  const RatioScan chain = long_chain_scan(200);
  if (!chain.counterexamples.empty()) v.fail("long-chain counterexample");

  const FeasibilityResult a = feasibility_scan(FeasibilityForm::TwistedCubic, {30});
  if (!a.feasible.empty()) v.fail("twisted-cubic form has a feasible point");
  const FeasibilityResult b = feasibility_scan(FeasibilityForm::PlanePair, {30});
  for (const auto& row : b.feasible)
    if (row[2] > row[0]) v.fail("plane-pair form allows m > n");
  v.detail << pair.checked << " pair-sum triples, equality exactly at " << pair.equality_cases.size()
           << " diagonal points; " << chain.checked << " long-chain triples; form (a) " << a.checked
           << " points, none feasible; form (b) " << b.feasible.size() << " feasible, all with m <= n";
}

void section_analysis(Verdict& v) {
  double worst = 0.0;
  for (int n = 1; n <= 12; ++n)
    for (int b = 0; b <= n; ++b) {
      const SectionAnalysis s = section_bound_analysis(n, b, 200);
      worst = std::max(worst, s.max_slope_error);
      if (!s.decreasing_beyond_half || !*s.decreasing_beyond_half) v.fail("profile not decreasing past n/2");
      for (int k = 0; k <= 40; ++k) {
        const double t = n * k / 20.0, h = 1e-4;
        const double fd = (section_profile(double(n), double(b), t + h) - section_profile(double(n), double(b), t - h)) /
                          (2 * h);
        const double exact = 6 * (-2 * t + b);
        worst = std::max(worst, std::abs(fd - exact) / std::max(1.0, double(n)));
      }
    }
  if (!(worst <= 1e-9)) v.fail("slope formula disagrees with finite differences");

  const double ratio = theta_threshold_ratio();
  const double root = oracle::positive_quadratic_root(1.5, 3.0, -2.5);
  if (!(std::abs(ratio - root) < 1e-12)) v.fail("threshold differs from the quadratic root");
  double peak_residual = 0.0;
  for (int n = 1; n <= 10; ++n) {
    const double th = ratio * n;
    peak_residual = std::max(peak_residual, std::abs(4.5 * n * n - 3 * n * th - 1.5 * th * th - 2.0 * n * n) / (n * n));
  }
  if (!(peak_residual < 1e-12)) v.fail("threshold does not solve the peak equation");

  // m_1 + m_2 >= 2 bound / (r1 + S0) >= 6 n^2, then beta > m_1 + m_2 - 4 n^2 >= 2 n^2.
  std::int64_t chains = 0;
  for (int n = 1; n <= 5; ++n)
    for (std::int64_t s0 = 1; s0 <= 20; ++s0)
      for (std::int64_t r1 = 1; r1 <= s0; ++r1)
        for (std::int64_t s1 = 0; s1 <= 40; ++s1, ++chains) {
          const Rational pair_floor = 2 * weighted_multiplicity_bound(r1, s0, s1, n) / (r1 + s0);
          if (pair_floor < 6 * n * n) v.fail("pair sum floor below 6n^2");
          if (line_component_bound(n, 4 * n * n, pair_floor) < 2 * n * n) v.fail("beta floor below 2n^2");
        }
  v.detail << "max slope error " << worst << "; threshold " << ratio << " vs oracle " << root << ", peak residual "
           << peak_residual << "; " << chains << " exact chains give beta > 2n^2";
}

void pipeline(Verdict& v) {
  const PipelineBatch batch = run_pipeline_batch(10000, 1);
  if (!batch.non_contradicted.empty())
    v.fail(std::to_string(batch.non_contradicted.size()) + " candidates escaped, first index " +
           std::to_string(batch.non_contradicted.front()));
  v.detail << batch.instances << " candidates, all contradicted; deciding steps:";
  for (const auto& [step, count] : batch.deciding_steps) v.detail << " " << step << "=" << count;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    void (*run)(Verdict&);
  };
  const Criterion criteria[] = {
      {"AC1", "involution matrices", involution_matrices},
      {"AC2", "lines through the double point", lines},
      {"AC3", "Galois involution", galois_involution},
      {"AC4", "line involutions", line_involutions},
      {"AC5", "untwisting dichotomy", untwisting_dichotomy},
      {"AC6", "local maximum of degree sequences", local_maximum},
      {"AC7", "graph calculus", graph_calculus},
      {"AC8", "inequality lab", inequality_lab},
      {"AC9", "section analysis", section_analysis},
      {"AC10", "exclusion pipeline", pipeline},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%-4s %s  %s (%.2fs): %s\n", c.id, v.passed ? "PASS" : "FAIL", c.title, seconds, v.detail.str().c_str());
    std::fflush(stdout);
    failed += !v.passed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}

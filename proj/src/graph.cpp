#include "qwb/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qwb/errors.hpp"

namespace qwb {

namespace {

std::string arrow_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

bool add_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) { return __builtin_add_overflow(a, b, &out); }

}  // namespace

ResolutionGraph ResolutionGraph::raw(int K, int L, const std::vector<Arrow>& arrows) {
  if (K < 1) throw InputError("a resolution graph needs at least one vertex");
  if (K > kMaxVertices) throw InputError("at most 62 vertices are supported");
  if (L < 1 || L > K) throw InputError("the lower part size L must satisfy 1 <= L <= K");
  ResolutionGraph g;
  g.k_ = K;
  g.l_ = L;
  g.out_.assign(K + 1, 0);
  for (auto [i, j] : arrows) {
    if (i < 1 || i > K || j < 1 || j > K || i <= j)
      throw InputError("arrow " + arrow_name(i, j) + " must satisfy K >= i > j >= 1");
    g.out_[i] |= std::uint64_t{1} << j;
  }
  return g;
}

ResolutionGraph ResolutionGraph::make(int K, int L, const std::vector<Arrow>& arrows) {
  ResolutionGraph g = raw(K, L, arrows);
  auto problems = g.violations();
  if (!problems.empty()) {
    std::string msg = "invalid resolution graph:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw InputError(msg);
  }
  return g;
}

std::vector<Arrow> ResolutionGraph::arrows() const {
  std::vector<Arrow> out;
  for (int i = 1; i <= k_; ++i)
    for (int j = 1; j < i; ++j)
      if (has_arrow(i, j)) out.emplace_back(i, j);
  return out;
}

int ResolutionGraph::arrow_count() const {
  int c = 0;
  for (int i = 1; i <= k_; ++i) c += std::popcount(out_[i]);
  return c;
}

std::vector<std::string> ResolutionGraph::violations() const {
  std::vector<std::string> out;
  for (int i = 1; i < k_; ++i)
    if (!has_arrow(i + 1, i)) out.push_back("missing arrow " + arrow_name(i + 1, i));
  for (int i = 1; i <= k_; ++i)
    for (int j = 1; j + 2 <= i; ++j) {
      if (!has_arrow(i, j)) continue;
      if (j >= l_ + 1) out.push_back("upper part is not a chain: " + arrow_name(i, j));
      for (int a = j + 1; a < i - 1; ++a)
        if (!has_arrow(a, j)) out.push_back(arrow_name(i, j) + " requires " + arrow_name(a, j));
    }
  if (l_ + 2 <= k_ && has_arrow(l_ + 2, l_)) out.push_back("forbidden arrow " + arrow_name(l_ + 2, l_));
  return out;
}

ResolutionGraph ResolutionGraph::truncated(int a) const {
  if (a < 1 || a > k_) throw InputError("truncation index out of range");
  ResolutionGraph g;
  g.k_ = a;
  g.l_ = std::min(l_, a);
  g.out_.assign(out_.begin(), out_.begin() + a + 1);
  return g;
}

PathCounts path_counts(const ResolutionGraph& g) {
  const int K = g.K();
  PathCounts p(K);
  for (int i = 1; i <= K; ++i) {
    p.at(i, i) = 1;
    // p(i, j) = sum over i -> k with k >= j of p(k, j); all k < i are done.
    for (int j = i - 1; j >= 1; --j) {
      std::uint64_t sum = 0;
      std::uint64_t targets = g.targets(i);
      while (targets) {
        int k = std::countr_zero(targets);
        targets &= targets - 1;
        if (k < j) continue;
        if (add_overflows(sum, p(k, j), sum)) throw DomainError("path count exceeds 64 bits");
      }
      p.at(i, j) = sum;
    }
  }
  return p;
}

MultiplicityVector MultiplicityVector::make(std::vector<Rational> nu_1_to_K, Rational n) {
  MultiplicityVector m;
  m.nu.reserve(nu_1_to_K.size() + 1);
  m.nu.emplace_back(0);
  for (auto& v : nu_1_to_K) m.nu.push_back(std::move(v));
  m.n = std::move(n);
  return m;
}

std::vector<std::string> MultiplicityVector::violations() const {
  std::vector<std::string> out;
  if (sgn(n) <= 0) out.push_back("n must be positive");
  const int K = this->K();
  if (K < 1) {
    out.push_back("at least one multiplicity is required");
    return out;
  }
  for (int i = 1; i <= K; ++i)
    if (sgn(nu[i]) <= 0) out.push_back("nu_" + std::to_string(i) + " must be positive");
  if (K >= 2 && 2 * nu[1] < nu[2]) out.push_back("2 nu_1 >= nu_2 fails");
  for (int i = 2; i < K; ++i)
    if (nu[i] < nu[i + 1]) out.push_back("nu_" + std::to_string(i) + " >= nu_" + std::to_string(i + 1) + " fails");
  for (int i = 2; i <= K; ++i)
    if (nu[i] > 2 * n) out.push_back("nu_" + std::to_string(i) + " <= 2n fails");
  return out;
}

std::vector<std::string> CycleData::violations() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m_values.size(); ++i) {
    if (sgn(m_values[i]) < 0) out.push_back("m_" + std::to_string(i + 1) + " must be nonnegative");
    if (i + 1 < m_values.size() && m_values[i] < m_values[i + 1])
      out.push_back("m_" + std::to_string(i + 1) + " >= m_" + std::to_string(i + 2) + " fails");
  }
  if (beta && nu_b && d_b && *beta != *nu_b * *nu_b + *d_b) out.push_back("beta = nu_B^2 + d_B fails");
  if (nu_b && sgn(*nu_b) < 0) out.push_back("nu_B must be nonnegative");
  if (d_b && sgn(*d_b) < 0) out.push_back("d_B must be nonnegative");
  return out;
}

NoetherFano noether_fano_with_counts(const ResolutionGraph& g, const PathCounts& p, const MultiplicityVector& mult) {
  const int K = g.K();
  if (mult.K() != K) throw InputError("multiplicity vector and graph have different sizes");
  NoetherFano out;
  Rational weight = 0;
  for (int i = 1; i <= K; ++i) {
    Rational pk(static_cast<unsigned long>(p(K, i)));
    out.lhs += pk * mult.nu[i];
    weight += pk * g.delta(i);
  }
  out.rhs = mult.n * weight;
  out.holds = out.lhs > out.rhs;
  return out;
}

NoetherFano noether_fano_check(const ResolutionGraph& g, const MultiplicityVector& mult) {
  return noether_fano_with_counts(g, path_counts(g), mult);
}

namespace {

MultiplicityVector prefix(const MultiplicityVector& m, int a) {
  MultiplicityVector out;
  out.nu.assign(m.nu.begin(), m.nu.begin() + a + 1);
  out.n = m.n;
  return out;
}

}  // namespace

Descent descend_to_strict(const ResolutionGraph& g, const MultiplicityVector& mult) {
  if (!noether_fano_check(g, mult).holds) throw DomainError("the inequality does not hold at the last vertex");
  Descent d;
  ResolutionGraph current = g;
  int vertex = g.K();
  for (;;) {
    d.trail.push_back(vertex);
    if (mult.nu[vertex] > mult.n) break;
    // Every path from the vertex starts with an arrow vertex -> a; the
    // inequality survives on at least one truncated graph 1..a.
    int next = 0;
    for (int a = vertex - 1; a >= 1; --a) {
      if (!current.has_arrow(vertex, a)) continue;
      ResolutionGraph sub = current.truncated(a);
      if (noether_fano_check(sub, prefix(mult, a)).holds) {
        next = a;
        current = sub;
        break;
      }
    }
    if (next == 0) throw std::logic_error("descent found no vertex carrying the inequality");
    vertex = next;
  }
  d.vertex = vertex;
  return d;
}

ResolutionGraph modify_graph(const ResolutionGraph& g) {
  const int K = g.K(), L = g.L();
  std::vector<Arrow> kept;
  for (auto [i, j] : g.arrows()) {
    if (i > L && j <= L && !(i == L + 1 && j == L)) continue;
    kept.emplace_back(i, j);
  }
  return ResolutionGraph::raw(K, L, kept);
}

std::vector<std::uint64_t> r_values(const ResolutionGraph& g) {
  PathCounts p = path_counts(modify_graph(g));
  std::vector<std::uint64_t> r(g.K() + 1, 0);
  for (int i = 1; i <= g.K(); ++i) r[i] = p(g.K(), i);
  return r;
}

ModifiedNoetherFano modified_nf_check(const ResolutionGraph& g, const MultiplicityVector& mult) {
  ModifiedNoetherFano out;
  if (!noether_fano_check(g, mult).holds) {
    out.refusal = "the inequality does not hold on the original graph";
    return out;
  }
  for (int i = 1; i <= g.K(); ++i) {
    Rational bound = mult.n * g.delta(i);
    if (i <= g.L() && mult.nu[i] > bound) {
      out.refusal = "nu_" + std::to_string(i) + " > n delta_" + std::to_string(i) + " on the lower part";
      return out;
    }
    if (i > g.L() && mult.nu[i] <= bound) {
      out.refusal = "nu_" + std::to_string(i) + " <= n delta_" + std::to_string(i) + " on the upper part";
      return out;
    }
  }
  ResolutionGraph modified = modify_graph(g);
  out.values = noether_fano_with_counts(modified, path_counts(modified), mult);
  out.holds = out.values.holds;
  return out;
}

bool compatible_check(const ResolutionGraph& g, const std::vector<Rational>& a) {
  const int L = g.L();
  if (static_cast<int>(a.size()) != L) throw InputError("a must have one value per lower vertex");
  for (int i = 1; i <= L - 1; ++i) {
    Rational incoming = 0;
    for (int j = i + 1; j <= L; ++j)
      if (g.has_arrow(j, i)) incoming += a[j - 1];
    if (a[i - 1] < incoming) return false;
  }
  return true;
}

Rational counting_bound(const ResolutionGraph& g, const std::vector<Rational>& a, const MultiplicityVector& mult) {
  if (mult.K() != g.K()) throw InputError("multiplicity vector and graph have different sizes");
  if (!compatible_check(g, a)) throw DomainError("the weights are not compatible with the graph");
  const int K = g.K(), L = g.L();
  Rational bound = 2 * a[0] * mult.nu[1] * mult.nu[1];
  for (int i = 2; i <= L; ++i) bound += a[i - 1] * mult.nu[i] * mult.nu[i];
  Rational upper = 0;
  for (int i = L + 1; i <= K; ++i) upper += mult.nu[i] * mult.nu[i];
  bound += a[L - 1] * upper;
  return bound;
}

std::vector<ResolutionGraph> enumerate_graphs(int K, bool parallel) {
  if (K < 1 || K > 10) throw InputError("graph enumeration supports 1 <= K <= 10");
  std::vector<ResolutionGraph> out;
  for (int L = 1; L <= K; ++L) {
    // Optional arrows allowed by the chain rules: i >= j + 2, j <= L and
    // not (L + 2, L). The closure rule is checked per subset.
    std::vector<Arrow> optional;
    for (int i = 3; i <= K; ++i)
      for (int j = 1; j + 2 <= i; ++j)
        if (j <= L && !(i == L + 2 && j == L)) optional.emplace_back(i, j);
    const int bits = static_cast<int>(optional.size());
    const std::int64_t total = std::int64_t{1} << bits;
    std::vector<std::uint64_t> base(K + 1, 0);
    for (int i = 2; i <= K; ++i) base[i] |= std::uint64_t{1} << (i - 1);

    std::vector<std::vector<std::int64_t>> found;
#pragma omp parallel if (parallel)
    {
      std::vector<std::int64_t> local;
#pragma omp for schedule(static) nowait
      for (std::int64_t mask = 0; mask < total; ++mask) {
        std::uint64_t out_masks[12] = {};
        for (int i = 0; i <= K; ++i) out_masks[i] = base[i];
        for (int b = 0; b < bits; ++b)
          if ((mask >> b) & 1) out_masks[optional[b].first] |= std::uint64_t{1} << optional[b].second;
        bool ok = true;
        for (int b = 0; b < bits && ok; ++b) {
          if (!((mask >> b) & 1)) continue;
          auto [i, j] = optional[b];
          for (int a = j + 1; a < i - 1; ++a)
            if (!((out_masks[a] >> j) & 1)) {
              ok = false;
              break;
            }
        }
        if (ok) local.push_back(mask);
      }
#pragma omp critical
      found.push_back(std::move(local));
    }
    std::vector<std::int64_t> masks;
    for (auto& f : found) masks.insert(masks.end(), f.begin(), f.end());
    std::sort(masks.begin(), masks.end());
    for (auto mask : masks) {
      std::vector<Arrow> arrows;
      for (int i = 2; i <= K; ++i) arrows.emplace_back(i, i - 1);
      for (int b = 0; b < bits; ++b)
        if ((mask >> b) & 1) arrows.push_back(optional[b]);
      out.push_back(ResolutionGraph::raw(K, L, arrows));
    }
  }
  return out;
}

namespace {

struct LatticeWalker {
  const ResolutionGraph& g;
  std::vector<std::int64_t> p, p_mod;  // p(K, i) before and after the modification
  std::int64_t scale_n;                // n * denominator
  std::vector<std::int64_t> k;         // scaled nu, index 0 unused
  LatticeScan& result;

  std::int64_t excess(const std::vector<std::int64_t>& counts) const {
    std::int64_t s = 0;
    for (int i = 1; i <= g.K(); ++i) s += counts[i] * (k[i] - scale_n * g.delta(i));
    return s;
  }

  void visit(int i) {
    const int K = g.K(), L = g.L();
    if (i > K) {
      ++result.instances;
      if (excess(p) <= 0) return;
      ++result.premise;
      if (excess(p_mod) > 0) return;
      std::string row = "K=" + std::to_string(K) + " L=" + std::to_string(L) + " nu*" + std::to_string(scale_n) + "/n:";
      for (int a = 1; a <= K; ++a) row += " " + std::to_string(k[a]);
      result.counterexamples.push_back(row);
      return;
    }
    // nu_1 <= n; lower nu_i <= 2n; upper n < nu_i <= 2n; nonincreasing from
    // nu_2 on; 2 nu_1 >= nu_2.
    std::int64_t lo = 1, hi = i == 1 ? scale_n : 2 * scale_n;
    if (i > L) lo = scale_n + 1;
    if (i == 2) hi = std::min(hi, 2 * k[1]);
    if (i >= 3) hi = std::min(hi, k[i - 1]);
    for (std::int64_t v = lo; v <= hi; ++v) {
      k[i] = v;
      visit(i + 1);
    }
  }
};

}  // namespace

LatticeScan modified_nf_lattice_scan(int max_K, int n, int denominator, bool parallel) {
  if (max_K < 1 || max_K > 8) throw InputError("lattice scan supports 1 <= K <= 8");
  if (n < 1 || denominator < 1 || n * denominator > 64) throw InputError("lattice scan needs 1 <= n * denominator <= 64");
  std::vector<ResolutionGraph> graphs;
  for (int K = 1; K <= max_K; ++K) {
    auto gs = enumerate_graphs(K, parallel);
    graphs.insert(graphs.end(), gs.begin(), gs.end());
  }
  std::vector<LatticeScan> parts(graphs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t idx = 0; idx < graphs.size(); ++idx) {
    const ResolutionGraph& g = graphs[idx];
    const int K = g.K();
    PathCounts before = path_counts(g), after = path_counts(modify_graph(g));
    LatticeWalker w{g, std::vector<std::int64_t>(K + 1), std::vector<std::int64_t>(K + 1),
                    std::int64_t{n} * denominator, std::vector<std::int64_t>(K + 1), parts[idx]};
    for (int i = 1; i <= K; ++i) {
      w.p[i] = static_cast<std::int64_t>(before(K, i));
      w.p_mod[i] = static_cast<std::int64_t>(after(K, i));
    }
    w.visit(1);
  }
  LatticeScan out;
  out.graphs = static_cast<std::int64_t>(graphs.size());
  for (auto& part : parts) {
    out.instances += part.instances;
    out.premise += part.premise;
    out.counterexamples.insert(out.counterexamples.end(), part.counterexamples.begin(), part.counterexamples.end());
  }
  return out;
}

namespace oracle {

std::uint64_t brute_force_paths(const ResolutionGraph& g, int i, int j) {
  if (i == j) return 1;
  std::uint64_t count = 0;
  for (int k = i - 1; k >= j; --k)
    if (g.has_arrow(i, k)) count += brute_force_paths(g, k, j);
  return count;
}

}  // namespace oracle

}  // namespace qwb

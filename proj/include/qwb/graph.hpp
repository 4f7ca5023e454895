#ifndef QWB_GRAPH_HPP
#define QWB_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwb/rational.hpp"

namespace qwb {

using Arrow = std::pair<int, int>;  // (i, j) with i > j, vertices 1-based

/// Oriented graph of a resolution: vertices 1..K, lower part 1..L.
class ResolutionGraph {
 public:
  static constexpr int kMaxVertices = 62;

  ResolutionGraph() = default;

  /// Validated constructor; throws InputError listing every violated rule.
  static ResolutionGraph make(int K, int L, const std::vector<Arrow>& arrows);
  /// Only checks ranges and orientation. Meant for oracle tests.
  static ResolutionGraph raw(int K, int L, const std::vector<Arrow>& arrows);

  int K() const { return k_; }
  int L() const { return l_; }
  bool has_arrow(int i, int j) const { return (out_[i] >> j) & 1u; }
  /// Bit j set when i -> j.
  std::uint64_t targets(int i) const { return out_[i]; }
  std::vector<Arrow> arrows() const;  // sorted by (i, j)
  int arrow_count() const;

  /// delta_1 = 1, delta_2..delta_L = 2, upper vertices 1.
  int delta(int i) const { return i == 1 ? 1 : (i <= l_ ? 2 : 1); }

  /// Structural rules that fail, in words; empty for a valid graph.
  std::vector<std::string> violations() const;
  bool valid() const { return violations().empty(); }

  /// The subgraph on vertices 1..a with lower part 1..min(L, a).
  ResolutionGraph truncated(int a) const;

  friend bool operator==(const ResolutionGraph& a, const ResolutionGraph& b) {
    return a.k_ == b.k_ && a.l_ == b.l_ && a.out_ == b.out_;
  }

 private:
  int k_ = 0;
  int l_ = 0;
  std::vector<std::uint64_t> out_;  // index 0 unused
};

/// p(i, j) = number of paths from i to j; p(i, i) = 1.
class PathCounts {
 public:
  explicit PathCounts(int K) : k_(K), data_((K + 1) * (K + 1), 0) {}
  std::uint64_t operator()(int i, int j) const { return data_[i * (k_ + 1) + j]; }
  std::uint64_t& at(int i, int j) { return data_[i * (k_ + 1) + j]; }
  int K() const { return k_; }

 private:
  int k_;
  std::vector<std::uint64_t> data_;
};

/// Dynamic programming in topological order; throws DomainError on
/// 64-bit overflow.
PathCounts path_counts(const ResolutionGraph& g);

/// Multiplicities nu_1..nu_K (index 0 unused) and the degree n.
struct MultiplicityVector {
  std::vector<Rational> nu;  // nu[0] unused
  Rational n;

  static MultiplicityVector make(std::vector<Rational> nu_1_to_K, Rational n);
  int K() const { return static_cast<int>(nu.size()) - 1; }
  /// 2 nu_1 >= nu_2, nonincreasing from nu_2 on, nu_i <= 2n for i >= 2,
  /// positivity.
  std::vector<std::string> violations() const;
};

struct CycleData {
  std::vector<Rational> m_values;  // m_1..m_L, 0-based storage
  std::optional<Rational> beta, nu_b, d_b;

  std::vector<std::string> violations() const;
};

struct NoetherFano {
  Rational lhs, rhs;
  bool holds = false;
};

/// sum p_Ki nu_i against n sum p_Ki delta_i, exact.
NoetherFano noether_fano_check(const ResolutionGraph& g, const MultiplicityVector& mult);
NoetherFano noether_fano_with_counts(const ResolutionGraph& g, const PathCounts& p, const MultiplicityVector& mult);

struct Descent {
  int vertex = 0;          // nu_vertex > n and its inequality holds
  std::vector<int> trail;  // visited vertices, starting at K
};

/// Throws DomainError when the inequality fails at K.
Descent descend_to_strict(const ResolutionGraph& g, const MultiplicityVector& mult);

/// Removes every arrow from the upper part into the lower part except
/// (L+1, L).
ResolutionGraph modify_graph(const ResolutionGraph& g);

/// r_i = p+(K, i) on the modified graph, index 0 unused.
std::vector<std::uint64_t> r_values(const ResolutionGraph& g);

struct ModifiedNoetherFano {
  std::optional<bool> holds;  // nullopt: preconditions not met
  NoetherFano values;
  std::string refusal;
};

/// The inequality on the modified graph. Needs the original inequality to
/// hold, nu_i <= n delta_i on the lower part and nu_i > n delta_i above.
ModifiedNoetherFano modified_nf_check(const ResolutionGraph& g, const MultiplicityVector& mult);

/// a(i) >= sum over lower j -> i of a(j), for every lower i < L.
/// `a` holds a(1)..a(L) in 0-based storage.
bool compatible_check(const ResolutionGraph& g, const std::vector<Rational>& a);

/// 2 a(1) nu_1^2 + sum_{i=2..L} a(i) nu_i^2 + a(L) sum_{i>L} nu_i^2.
/// Throws DomainError for an incompatible a.
Rational counting_bound(const ResolutionGraph& g, const std::vector<Rational>& a, const MultiplicityVector& mult);

struct LatticeScan {
  std::int64_t graphs = 0;
  std::int64_t instances = 0;  // multiplicity vectors meeting the invariants and the sign pattern
  std::int64_t premise = 0;    // of those, the ones where the original inequality holds
  std::vector<std::string> counterexamples;
};

/// Exhaustive check of "original inequality => inequality on the modified
/// graph" over every valid graph with K <= max_K and every nu on the lattice
/// (1/denominator) Z meeting the multiplicity invariants and the sign pattern
/// of modified_nf_check. Integer arithmetic on scaled values.
LatticeScan modified_nf_lattice_scan(int max_K, int n, int denominator, bool parallel = true);

/// Every valid graph with exactly K vertices (all L), in a fixed order.
std::vector<ResolutionGraph> enumerate_graphs(int K, bool parallel = true);

namespace oracle {
/// Depth-first enumeration of all paths i -> j.
std::uint64_t brute_force_paths(const ResolutionGraph& g, int i, int j);
}  // namespace oracle

}  // namespace qwb

#endif

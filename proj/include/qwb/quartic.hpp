#ifndef QWB_QUARTIC_HPP
#define QWB_QUARTIC_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qwb/exact_linalg.hpp"
#include "qwb/form.hpp"

namespace qwb {

using ExactPoint = std::array<GaussianRational, 4>;
using ComplexPoint = std::array<Complex, 4>;

/// The affine quartic f = q2 + q3 + q4 in C^4 with its double point at the
/// origin o.
struct QuarticData {
  HomogeneousForm q2, q3, q4;

  /// Checks degrees and arity (4 variables each); does not check genericity.
  static QuarticData make(HomogeneousForm q2, HomogeneousForm q3, HomogeneousForm q4);

  /// F = x0^2 q2 + x0 q3 + q4 in the variables (x0, z1, .., z4).
  HomogeneousForm projective_quartic() const;

  GaussianRational f(const ExactPoint& z) const;
  Complex f(const ComplexPoint& z) const;
};

/// Rank of the symmetric matrix of q2, exact.
int rank_quadratic(const HomogeneousForm& q2);

/// Coordinates w with z = T w in which q2 becomes w1^2 + w2^2 + w3^2. The
/// last column of T spans the kernel of q2 (the cone vertex direction).
struct Q2Normalization {
  std::array<Complex, 16> transform{};  // row-major T
  ExactMatrix4 congruence{};            // exact P with P^T M P diagonal
  std::array<GaussianRational, 3> diagonal{};
  ExactPoint kernel{};
  double residual = 0.0;  // max |T^T M T - diag(1,1,1,0)|
};

Q2Normalization normalize_q2(const HomogeneousForm& q2);

/// q3 at the vertex of the cone {q2 = 0}, exact. Zero means the vertex
/// condition fails.
GaussianRational vertex_value(const QuarticData& data);

struct LineThroughO {
  ComplexPoint direction{};  // unit norm, largest entry real positive
  std::array<double, 3> residuals{};
  bool simple = false;
  double margin = 0.0;               // smallest nonzero singular value of the Jacobian
  double resultant_derivative = 0.0;  // |R'| / |R| at the root, diagnostic
  bool ambiguous_recovery = false;
};

struct LineSearchOptions {
  double tolerance = 1e-10;
  double separation = 1e-6;
  std::uint64_t seed = 0;
  bool parallel = true;
};

struct GenericityReport {
  int rank_q2 = 0;
  bool vertex_ok = false;
  int line_count = 0;  // number of clusters
  std::vector<LineThroughO> lines;
  bool distinct = false;
  std::vector<std::string> failures;
  int resultant_degree = 0;
  double min_separation = 0.0;
  std::vector<int> cluster_sizes;
};

/// Computes the lines through o. Throws DomainError when rank q2 != 3 or
/// the vertex condition fails; every other defect ends up in `failures`.
GenericityReport find_lines(const QuarticData& data, const LineSearchOptions& options = {});

/// Like find_lines but reports rank and vertex failures instead of throwing.
GenericityReport check_genericity(const QuarticData& data, const LineSearchOptions& options = {});

/// Largest distance from a line in `a` to its nearest line in `b`.
double line_set_distance(const std::vector<LineThroughO>& a, const std::vector<LineThroughO>& b);

/// The generic fixture shipped with the workbench.
QuarticData bundled_quartic();
/// q4 = z1^4+..+z4^4: only 20 distinct lines, two of them triple.
QuarticData degenerate_triple_quartic();

/// Parses a compact description such as "z1^2+z2^2+z3^2" (integer or p/q
/// coefficients, variables z1..z4).
HomogeneousForm parse_polynomial(const std::string& text, int degree);

}  // namespace qwb

#endif

#ifndef QWB_EXACT_LINALG_HPP
#define QWB_EXACT_LINALG_HPP

#include <array>

#include "qwb/rational.hpp"

namespace qwb {

/// Row-major 4x4 matrix over Q(i).
using ExactMatrix4 = std::array<GaussianRational, 16>;

ExactMatrix4 identity4();
ExactMatrix4 multiply(const ExactMatrix4& a, const ExactMatrix4& b);
ExactMatrix4 transpose(const ExactMatrix4& a);

/// Rank by exact Gaussian elimination.
int exact_rank(ExactMatrix4 m);

/// Symmetric congruence diagonalization: P^T M P = diag(d), P invertible.
/// Nonzero diagonal entries come first.
struct Congruence {
  ExactMatrix4 p;
  std::array<GaussianRational, 4> diagonal;
};

Congruence congruence_diagonalize(const ExactMatrix4& symmetric);

}  // namespace qwb

#endif

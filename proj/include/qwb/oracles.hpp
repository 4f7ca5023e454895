#ifndef QWB_ORACLES_HPP
#define QWB_ORACLES_HPP

#include <vector>

#include "qwb/poly_roots.hpp"

// Independent reference computations used to cross-check the main routines.
namespace qwb::oracle {

/// Roots as eigenvalues of the companion matrix (ascending coefficients).
std::vector<Complex> companion_roots(const numeric::Poly& c);

struct QuadraticMinimum {
  std::vector<double> x;
  double value = 0.0;
};

/// Minimizes sum w_i x_i^2 subject to sum c_i x_i = rhs by solving the KKT
/// system with a dense LU factorization.
QuadraticMinimum constrained_quadratic_minimum(const std::vector<double>& w, const std::vector<double>& c, double rhs);

/// Positive root of a t^2 + b t + c by the quadratic formula (a != 0).
double positive_quadratic_root(double a, double b, double c);

}  // namespace qwb::oracle

#endif

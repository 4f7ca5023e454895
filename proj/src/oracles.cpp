#include "qwb/oracles.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "qwb/errors.hpp"

namespace qwb::oracle {

std::vector<Complex> companion_roots(const numeric::Poly& c) {
  const int d = static_cast<int>(c.size()) - 1;
  if (d < 1 || c.back() == Complex(0)) throw InputError("need a nonconstant polynomial with nonzero leading term");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) m(i, d - 1) = -c[i] / c[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw DomainError("companion eigenvalues did not converge");
  std::vector<Complex> out(d);
  for (int i = 0; i < d; ++i) out[i] = solver.eigenvalues()[i];
  return out;
}

QuadraticMinimum constrained_quadratic_minimum(const std::vector<double>& w, const std::vector<double>& c, double rhs) {
  const int k = static_cast<int>(w.size());
  if (k == 0 || c.size() != w.size()) throw InputError("weights and constraint must have the same nonzero length");
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(k + 1);
  for (int i = 0; i < k; ++i) {
    kkt(i, i) = 2 * w[i];
    kkt(i, k) = c[i];
    kkt(k, i) = c[i];
  }
  b(k) = rhs;
  Eigen::VectorXd sol = kkt.fullPivLu().solve(b);
  QuadraticMinimum out;
  out.x.assign(sol.data(), sol.data() + k);
  for (int i = 0; i < k; ++i) out.value += w[i] * out.x[i] * out.x[i];
  return out;
}

double positive_quadratic_root(double a, double b, double c) {
  if (a == 0) throw InputError("leading coefficient is zero");
  const double disc = b * b - 4 * a * c;
  if (disc < 0) throw DomainError("no real root");
  const double s = std::sqrt(disc);
  const double r1 = (-b + s) / (2 * a), r2 = (-b - s) / (2 * a);
  const double best = std::max(r1, r2);
  if (best <= 0) throw DomainError("no positive root");
  return best;
}

}  // namespace qwb::oracle

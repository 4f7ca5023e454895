#include "qwb/poly_roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qwb/errors.hpp"

namespace qwb::numeric {

Complex horner(std::span<const Complex> c, Complex x) {
  Complex r = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) r = r * x + c[k];
  return r;
}

Poly derivative(std::span<const Complex> c) {
  Poly d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<double>(k));
  return d;
}

std::vector<Complex> aberth_roots(std::span<const Complex> c, std::uint64_t seed, int max_iterations) {
  std::size_t deg = c.size();
  while (deg > 0 && c[deg - 1] == Complex(0.0)) --deg;
  if (deg <= 1) return {};
  const int d = static_cast<int>(deg) - 1;
  std::span<const Complex> p = c.first(deg);
  if (d == 1) return {-p[0] / p[1]};

  Poly dp = derivative(p);

  // Start on a circle whose radius is the geometric mean of root moduli.
  double radius = std::pow(std::abs(p[0] / p[d]), 1.0 / d);
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double offset = 2.0 * std::numbers::pi * unit(rng);
  std::vector<Complex> z(d);
  for (int k = 0; k < d; ++k) {
    double r = radius * (0.9 + 0.2 * unit(rng));
    z[k] = std::polar(r, offset + 2.0 * std::numbers::pi * k / d);
  }

  for (int it = 0; it < max_iterations; ++it) {
    double largest_step = 0.0;
    for (int k = 0; k < d; ++k) {
      Complex pv = horner(p, z[k]);
      if (pv == Complex(0.0)) continue;
      Complex ratio = pv / horner(dp, z[k]);
      Complex repulsion = 0.0;
      for (int j = 0; j < d; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      largest_step = std::max(largest_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (largest_step < 1e-15) break;
  }
  for (auto& root : z) {
    for (int it = 0; it < 3; ++it) {
      Complex dv = horner(dp, root);
      if (std::abs(dv) == 0.0) break;
      Complex step = horner(p, root) / dv;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      root -= step;
    }
  }
  return z;
}

double projective_distance(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw InputError("projective_distance: size mismatch");
  Complex inner = 0.0;
  double nu = 0.0, nv = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    inner += std::conj(u[k]) * v[k];
    nu += std::norm(u[k]);
    nv += std::norm(v[k]);
  }
  if (nu == 0.0 || nv == 0.0) throw DomainError("projective_distance: zero vector");
  // sin of the angle from the part of u orthogonal to v; 1 - cos^2 cancels.
  const Complex c = std::conj(inner) / nv;
  double perp = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) perp += std::norm(u[k] - c * v[k]);
  return std::min(1.0, std::sqrt(perp / nu));
}

std::vector<ProjectiveRoot> binary_form_roots(std::span<const Complex> c) {
  const std::size_t d = c.size() - 1;
  auto normalize = [](Complex x, Complex y) {
    double n = std::hypot(std::abs(x), std::abs(y));
    return ProjectiveRoot{x / n, y / n};
  };
  std::vector<ProjectiveRoot> out;
  if (std::abs(c[d]) >= std::abs(c[0])) {
    // Chart y = 1: roots of sum c_j x^j; missing degree means roots at y = 0.
    std::size_t top = d;
    while (top > 0 && c[top] == Complex(0.0)) --top;
    for (Complex r : aberth_roots(c.first(top + 1))) out.push_back(normalize(r, 1.0));
    for (std::size_t k = top; k < d; ++k) out.push_back({1.0, 0.0});
  } else {
    // Chart x = 1: roots of sum c_j y^(d-j).
    Poly rev(c.rbegin(), c.rend());
    std::size_t top = d;
    while (top > 0 && rev[top] == Complex(0.0)) --top;
    for (Complex r : aberth_roots(std::span<const Complex>(rev).first(top + 1))) out.push_back(normalize(1.0, r));
    for (std::size_t k = top; k < d; ++k) out.push_back({0.0, 1.0});
  }
  return out;
}

Poly interpolate_on_circle(std::span<const Complex> values, double radius) {
  const std::size_t n = values.size();
  Poly c(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex sum = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      sum += values[k] * std::polar(1.0, -2.0 * std::numbers::pi * double(j * k % n) / double(n));
    c[j] = sum / (double(n) * std::pow(radius, double(j)));
  }
  return c;
}

Poly coefficients_from_samples(const std::function<Complex(Complex)>& f, int n, double radius) {
  std::vector<Complex> values(n);
  for (int k = 0; k < n; ++k) values[k] = f(std::polar(radius, 2.0 * std::numbers::pi * k / n));
  return interpolate_on_circle(values, radius);
}

}  // namespace qwb::numeric

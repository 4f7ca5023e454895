#ifndef QWB_POLY_ROOTS_HPP
#define QWB_POLY_ROOTS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qwb/rational.hpp"

namespace qwb::numeric {

/// Coefficients are ascending: c[0] + c[1] x + ... + c[d] x^d.
using Poly = std::vector<Complex>;

Complex horner(std::span<const Complex> c, Complex x);
Poly derivative(std::span<const Complex> c);

/// All d roots of a polynomial with nonzero leading coefficient, by
/// Aberth-Ehrlich iteration from a seeded circle of starting points,
/// followed by a few Newton polishing steps.
std::vector<Complex> aberth_roots(std::span<const Complex> c, std::uint64_t seed = 0,
                                  int max_iterations = 1000);

/// A point (x : y) of P^1, stored with unit norm.
using ProjectiveRoot = std::array<Complex, 2>;

double projective_distance(std::span<const Complex> u, std::span<const Complex> v);

/// Roots of the binary form sum c_j x^j y^(d-j). Roots at y = 0 are returned
/// as (1 : 0). The chart is chosen from the larger extreme coefficient.
std::vector<ProjectiveRoot> binary_form_roots(std::span<const Complex> c);

/// Coefficients of a polynomial of degree < n sampled on the n-th roots of
/// unity scaled by `radius`: values[k] = p(radius * exp(2 pi i k / n)).
Poly interpolate_on_circle(std::span<const Complex> values, double radius = 1.0);

/// Samples f on n scaled roots of unity and interpolates.
Poly coefficients_from_samples(const std::function<Complex(Complex)>& f, int n, double radius = 1.0);

}  // namespace qwb::numeric

#endif

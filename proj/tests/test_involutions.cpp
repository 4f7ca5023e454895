#include <doctest.h>

#include "qwb/errors.hpp"
#include "qwb/involutions.hpp"

using namespace qwb;

namespace {

PlaneCubic legendre_cubic() {
  // y^2 z = x^3 - x z^2 in coordinates (x, y, z)
  PlaneCubic g;
  g.coefficients[PlaneCubic::index(0, 2)] = 1;
  g.coefficients[PlaneCubic::index(3, 0)] = -1;
  g.coefficients[PlaneCubic::index(1, 0)] = 1;
  return g;
}

double distance(const ComplexPoint& a, const ComplexPoint& b) {
  double d = 0.0;
  for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

double point_size(const ComplexPoint& x) {
  double s = 0.0;
  for (const auto& c : x) s = std::max(s, std::abs(c));
  return s;
}

}  // namespace

TEST_SUITE("involutions") {
  TEST_CASE("galois involution on rational points") {
    QuarticData d = bundled_quartic();
    auto points = rational_points_on_quartic(d, 4);
    REQUIRE(points.size() >= 20);
    for (const auto& x : points) {
      CHECK(d.f(x).is_zero());
      ExactPoint y = apply_galois_involution(d, x);
      CHECK(d.f(y).is_zero());
      CHECK(apply_galois_involution(d, y) == x);
      GaussianRational t = second_vieta_root(d, x);
      CHECK(second_vieta_root(d, y) == t.inverse());
      CHECK((y == x) == (t == GaussianRational(1)));
    }
  }

  TEST_CASE("a ramification point is fixed") {
    QuarticData d = QuarticData::make(parse_polynomial("z1^2+z2^2+z3^2", 2), parse_polynomial("z4^3-2z1^3", 3),
                                      parse_polynomial("z1^4+z2^4+z3^4+z4^4", 4));
    ExactPoint x{1, 0, 0, 0};
    CHECK(second_vieta_root(d, x) == GaussianRational(1));
    CHECK(apply_galois_involution(d, x) == x);
  }

  TEST_CASE("galois involution rejects bad points") {
    QuarticData d = bundled_quartic();
    CHECK_THROWS_AS(apply_galois_involution(d, ExactPoint{}), DomainError);
    CHECK_THROWS_AS(apply_galois_involution(d, ExactPoint{1, 1, 1, 1}), DomainError);
  }

  TEST_CASE("galois involution on complex points") {
    QuarticData d = bundled_quartic();
    for (const auto& x : complex_points_on_quartic(d, 30, 5)) {
      ComplexPoint y = apply_galois_involution(d, x);
      CHECK(distance(apply_galois_involution(d, y), x) < 1e-9 * std::max(1.0, point_size(x)));
    }
  }

  TEST_CASE("chord and tangent on a plane cubic") {
    PlaneCubic g = legendre_cubic();
    PlanePoint t = cubic_third_point(g, {0, 0, 1}, {1, 0, 1});
    CHECK(std::abs(t[0] / t[2] + 1.0) < 1e-12);
    CHECK(std::abs(t[1] / t[2]) < 1e-12);
    // the point at infinity is a flex
    PlanePoint flex = cubic_third_point(g, {0, 1, 0}, {0, 1, 0});
    CHECK(std::abs(flex[0] / flex[1]) < 1e-12);
    CHECK(std::abs(flex[2] / flex[1]) < 1e-12);
    // a random chord lands on the cubic
    PlanePoint p{2.0, std::sqrt(Complex(6.0)), 1.0}, q{Complex(0.5, 1), 0, 0};
    q[1] = std::sqrt(q[0] * q[0] * q[0] - q[0]);
    q[2] = 1.0;
    PlanePoint r = cubic_third_point(g, p, q);
    CHECK(std::abs(g(r)) < 1e-9 * std::pow(std::abs(r[0]) + std::abs(r[1]) + std::abs(r[2]), 3));
  }

  TEST_CASE("line involutions") {
    QuarticData d = bundled_quartic();
    GenericityReport lines = find_lines(d);
    REQUIRE(lines.lines.size() == 24);
    int checked = 0;
    for (int li : {0, 11}) {
      const ComplexPoint& dir = lines.lines[li].direction;
      for (const auto& x : complex_points_on_quartic(d, 15, 9)) {
        LineInvolutionResult r;
        try {
          r = apply_line_involution(d, dir, x);
        } catch (const DegenerateFibre&) {
          continue;
        }
        LineInvolutionResult back = apply_line_involution(d, dir, r.image);
        CHECK(distance(back.image, x) < 1e-8 * std::max(1.0, point_size(x)));
        CHECK(r.f_residual < 1e-8);
        CHECK(plane_distance(dir, x, r.image) < 1e-8);
        CHECK(r.fibre.division_residue < 1e-9);
        ++checked;
      }
    }
    CHECK(checked >= 25);
  }

  TEST_CASE("fibre preconditions") {
    QuarticData d = bundled_quartic();
    GenericityReport lines = find_lines(d);
    const ComplexPoint& dir = lines.lines[0].direction;
    ComplexPoint on_line;
    for (int k = 0; k < 4; ++k) on_line[k] = 0.5 * dir[k];
    CHECK_THROWS_AS(residual_cubic(d, dir, on_line), DomainError);
    // The plane spanned by two lines: the cubic contains the second line.
    ComplexPoint other;
    for (int k = 0; k < 4; ++k) other[k] = 0.7 * lines.lines[1].direction[k];
    PlaneCubicContext ctx = residual_cubic(d, dir, other);
    CHECK(ctx.degenerate);
    CHECK_THROWS_AS(apply_line_involution(d, dir, other), DegenerateFibre);
  }
}

#ifndef QWB_INVOLUTIONS_HPP
#define QWB_INVOLUTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwb/quartic.hpp"

namespace qwb {

/// The image left the affine chart x0 = 1; `projective` is (0 : x) in P^4.
struct ChartEscape : DomainError {
  ChartEscape(const std::string& what, std::array<Complex, 5> image) : DomainError(what), projective(image) {}
  std::array<Complex, 5> projective;
};

/// The plane through the line and the point meets V in a fibre where the
/// reflection is undefined.
struct DegenerateFibre : DomainError {
  using DomainError::DomainError;
};

/// Second root of t -> f(t x) / t^2 besides t = 1, i.e. q2(x) / q4(x).
GaussianRational second_vieta_root(const QuarticData& data, const ExactPoint& x);

/// Galois involution x -> (q2(x)/q4(x)) x, exact. Requires f(x) = 0 exactly.
ExactPoint apply_galois_involution(const QuarticData& data, const ExactPoint& x);
/// Same on the complex track; `tolerance` bounds |f(x)| relative to |x|.
ComplexPoint apply_galois_involution(const QuarticData& data, const ComplexPoint& x, double tolerance = 1e-9);

/// Points t v on V with v a primitive integer vector in [-box, box]^4 (one
/// of each pair +-v) whose Vieta discriminant is a rational square. Both
/// roots are returned; a double root gives a fixed point of the Galois
/// involution. Order follows the enumeration and is deterministic.
std::vector<ExactPoint> rational_points_on_quartic(const QuarticData& data, int box);

/// Seeded random points of V with moderate norm.
std::vector<ComplexPoint> complex_points_on_quartic(const QuarticData& data, int count, std::uint64_t seed);

using PlanePoint = std::array<Complex, 3>;

/// Plane cubic G(a, b, c) with coefficient of a^i b^j c^(3-i-j) at
/// index(i, j).
struct PlaneCubic {
  std::array<Complex, 10> coefficients{};

  static int index(int i, int j);
  Complex operator()(const PlanePoint& p) const;
  PlanePoint gradient(const PlanePoint& p) const;
  double norm() const;
};

/// Third intersection of the line through p1, p2 with the cubic; the
/// tangent line is used when p1 and p2 coincide projectively. Throws
/// DegenerateFibre when the line lies in the cubic or the tangent is
/// undefined.
PlanePoint cubic_third_point(const PlaneCubic& cubic, const PlanePoint& p1, const PlanePoint& p2);

struct FibreOptions {
  double degeneracy_threshold = 1e-9;
};

/// The residual cubic of V in the plane through o spanned by a line and x:
/// plane coordinates (a, b) -> a e1 + b e2 with e1 along the line, and the
/// cubic is f / b homogenized by c, so o = (0 : 0 : 1).
struct PlaneCubicContext {
  ComplexPoint e1{}, e2{};
  PlaneCubic cubic;
  double division_residue = 0.0;     // |f on the line| relative to the coefficients
  double line_multiplicity = 0.0;    // size of the cubic restricted to the line
  double origin_gradient = 0.0;      // size of the linear part at o
  double relative_discriminant = 0.0;
  bool degenerate = false;
  std::string reason;

  PlanePoint to_plane(const ComplexPoint& x) const;
  ComplexPoint to_ambient(const PlanePoint& p) const;
};

PlaneCubicContext residual_cubic(const QuarticData& data, const ComplexPoint& line_direction, const ComplexPoint& x,
                                 const FibreOptions& options = {});

struct LineInvolutionResult {
  ComplexPoint image{};
  bool origin_tangential = false;  // x or its image sits over the marked point
  double f_residual = 0.0;
  PlaneCubicContext fibre;
};

/// Reflection of x in its plane fibre with the group-law origin at o.
LineInvolutionResult apply_line_involution(const QuarticData& data, const ComplexPoint& line_direction,
                                           const ComplexPoint& x, const FibreOptions& options = {});

/// Distance from y to the complex plane spanned by u and v, relative to |y|.
double plane_distance(const ComplexPoint& u, const ComplexPoint& v, const ComplexPoint& y);

}  // namespace qwb

#endif

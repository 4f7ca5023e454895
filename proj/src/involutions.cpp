#include "qwb/involutions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qwb/poly_roots.hpp"

namespace qwb {

namespace {

Complex dot(const ComplexPoint& u, const ComplexPoint& v) {
  Complex s = 0.0;
  for (int k = 0; k < 4; ++k) s += std::conj(u[k]) * v[k];
  return s;
}

double norm(const ComplexPoint& u) { return std::sqrt(std::real(dot(u, u))); }

double norm3(const PlanePoint& p) { return std::sqrt(std::norm(p[0]) + std::norm(p[1]) + std::norm(p[2])); }

PlanePoint unit3(PlanePoint p) {
  double n = norm3(p);
  for (auto& c : p) c /= n;
  return p;
}

double projective_distance3(const PlanePoint& p, const PlanePoint& q) { return numeric::projective_distance(p, q); }

bool is_zero_point(const ExactPoint& x) {
  return std::all_of(x.begin(), x.end(), [](const GaussianRational& c) { return c.is_zero(); });
}

bool is_square(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

// Binary cubic h(u, v) = G(u p1 + v p2) from four evaluations.
struct BinaryCubic {
  Complex c30, c21, c12, c03;
};

BinaryCubic restrict_to_line(const PlaneCubic& g, const PlanePoint& p1, const PlanePoint& p2) {
  auto at = [&](Complex u, Complex v) {
    PlanePoint q{u * p1[0] + v * p2[0], u * p1[1] + v * p2[1], u * p1[2] + v * p2[2]};
    return g(q);
  };
  BinaryCubic h;
  h.c30 = at(1.0, 0.0);
  h.c03 = at(0.0, 1.0);
  Complex s = at(1.0, 1.0) - h.c30 - h.c03;
  Complex d = at(1.0, -1.0) - h.c30 + h.c03;
  h.c12 = (s + d) / 2.0;
  h.c21 = (s - d) / 2.0;
  return h;
}

// Newton polish of the root (u0 : v0) of h, in the chart of the larger entry.
PlanePoint polish(const BinaryCubic& h, Complex u0, Complex v0, const PlanePoint& p1, const PlanePoint& p2) {
  const bool u_chart = std::abs(u0) >= std::abs(v0);
  std::array<Complex, 4> c = u_chart ? std::array<Complex, 4>{h.c30, h.c21, h.c12, h.c03}
                                     : std::array<Complex, 4>{h.c03, h.c12, h.c21, h.c30};
  Complex tau = u_chart ? v0 / u0 : u0 / v0;
  auto value = [&](Complex x) { return c[0] + x * (c[1] + x * (c[2] + x * c[3])); };
  auto slope = [&](Complex x) { return c[1] + x * (2.0 * c[2] + 3.0 * x * c[3]); };
  for (int it = 0; it < 4; ++it) {
    Complex d = slope(tau);
    if (std::abs(d) == 0.0) break;
    Complex candidate = tau - value(tau) / d;
    if (!(std::abs(value(candidate)) < std::abs(value(tau)))) break;
    tau = candidate;
  }
  Complex u = u_chart ? 1.0 : tau, v = u_chart ? tau : 1.0;
  return {u * p1[0] + v * p2[0], u * p1[1] + v * p2[1], u * p1[2] + v * p2[2]};
}

void require_on_quartic(const QuarticData& data, const ComplexPoint& x, double tolerance) {
  double size = norm(x);
  if (size == 0.0) throw DomainError("the point is o");
  if (std::abs(data.f(x)) > tolerance * std::max(1.0, std::pow(size, 4)))
    throw DomainError("the point does not lie on the quartic");
}

}  // namespace

GaussianRational second_vieta_root(const QuarticData& data, const ExactPoint& x) {
  GaussianRational a = data.q4.evaluate(x);
  if (a.is_zero()) throw DomainError("q4 vanishes at the point");
  return data.q2.evaluate(x) / a;
}

ExactPoint apply_galois_involution(const QuarticData& data, const ExactPoint& x) {
  if (is_zero_point(x)) throw DomainError("the Galois involution is undefined at o");
  GaussianRational v2 = data.q2.evaluate(x), v3 = data.q3.evaluate(x), v4 = data.q4.evaluate(x);
  if (!(v2 + v3 + v4).is_zero()) throw DomainError("the point does not lie on the quartic");
  if (v2.is_zero() && v3.is_zero() && v4.is_zero())
    throw DomainError("the point lies on a line through o, where the Galois involution is undefined");
  if (v4.is_zero()) {
    std::array<Complex, 5> image{0.0, x[0].to_complex(), x[1].to_complex(), x[2].to_complex(), x[3].to_complex()};
    throw ChartEscape("the image lies on the hyperplane at infinity", image);
  }
  if (v2.is_zero()) throw DomainError("the image is o");
  GaussianRational t = v2 / v4;
  ExactPoint out;
  for (int k = 0; k < 4; ++k) out[k] = t * x[k];
  return out;
}

ComplexPoint apply_galois_involution(const QuarticData& data, const ComplexPoint& x, double tolerance) {
  require_on_quartic(data, x, tolerance);
  Complex v2 = data.q2.evaluate(std::span<const Complex>(x));
  Complex v4 = data.q4.evaluate(std::span<const Complex>(x));
  Complex v3 = data.q3.evaluate(std::span<const Complex>(x));
  double size = norm(x);
  if (std::abs(v2) + std::abs(v3) + std::abs(v4) < tolerance * std::max(1.0, std::pow(size, 4)))
    throw DomainError("the point lies on a line through o, where the Galois involution is undefined");
  if (std::abs(v4) < tolerance * std::pow(size, 4)) {
    std::array<Complex, 5> image{0.0, x[0], x[1], x[2], x[3]};
    throw ChartEscape("the image lies on the hyperplane at infinity", image);
  }
  Complex t = v2 / v4;
  ComplexPoint out;
  for (int k = 0; k < 4; ++k) out[k] = t * x[k];
  return out;
}

std::vector<ExactPoint> rational_points_on_quartic(const QuarticData& data, int box) {
  if (box < 1) throw InputError("sample box must be positive");
  std::vector<ExactPoint> out;
  std::array<int, 4> v{};
  for (v[0] = -box; v[0] <= box; ++v[0])
    for (v[1] = -box; v[1] <= box; ++v[1])
      for (v[2] = -box; v[2] <= box; ++v[2])
        for (v[3] = -box; v[3] <= box; ++v[3]) {
          // One representative of +-v: first nonzero entry positive.
          int lead = 0;
          for (int k = 0; k < 4 && lead == 0; ++k) lead = v[k];
          if (lead <= 0) continue;
          if (std::gcd(std::gcd(v[0], v[1]), std::gcd(v[2], v[3])) != 1) continue;
          ExactPoint p;
          for (int k = 0; k < 4; ++k) p[k] = GaussianRational(v[k]);
          GaussianRational a = data.q4.evaluate(p), c = data.q2.evaluate(p);
          if (a.is_zero() || c.is_zero()) continue;
          GaussianRational b = data.q3.evaluate(p);
          GaussianRational disc = b * b - GaussianRational(4) * a * c;
          if (!disc.is_real()) continue;
          Rational root;
          if (!is_square(disc.re, root)) continue;
          GaussianRational two_a = GaussianRational(2) * a;
          for (int sign : {1, -1}) {
            GaussianRational t = (-b + GaussianRational(Rational(sign) * root)) / two_a;
            ExactPoint x;
            for (int k = 0; k < 4; ++k) x[k] = t * p[k];
            out.push_back(x);
            if (sgn(root) == 0) break;
          }
        }
  return out;
}

std::vector<ComplexPoint> complex_points_on_quartic(const QuarticData& data, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<int> coin(0, 1);
  const NumericForm n2(data.q2), n3(data.q3), n4(data.q4);
  std::vector<ComplexPoint> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 100 * count + 1000) throw DomainError("could not sample points on the quartic");
    ComplexPoint v;
    for (auto& c : v) c = Complex(gauss(rng), gauss(rng));
    double size = norm(v);
    for (auto& c : v) c /= size;
    Complex a = n4(v), b = n3(v), c = n2(v);
    if (std::abs(a) < 1e-6) continue;
    Complex root = std::sqrt(b * b - 4.0 * a * c);
    // Cancellation-free pair of roots.
    Complex q = -0.5 * (b + (std::real(std::conj(b) * root) >= 0.0 ? root : -root));
    if (std::abs(q) == 0.0) continue;
    Complex t = coin(rng) ? q / a : c / q;
    for (int it = 0; it < 2; ++it) {
      Complex d = b + 2.0 * a * t;
      if (std::abs(d) > 0.0) t -= (c + t * (b + t * a)) / d;
    }
    ComplexPoint x;
    for (int k = 0; k < 4; ++k) x[k] = t * v[k];
    double r = norm(x);
    if (r < 1e-2 || r > 1e2) continue;
    out.push_back(x);
  }
  return out;
}

int PlaneCubic::index(int i, int j) { return 4 * i - i * (i - 1) / 2 + j; }

Complex PlaneCubic::operator()(const PlanePoint& p) const {
  Complex sum = 0.0;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j)
      sum += coefficients[index(i, j)] * std::pow(p[0], i) * std::pow(p[1], j) * std::pow(p[2], 3 - i - j);
  return sum;
}

PlanePoint PlaneCubic::gradient(const PlanePoint& p) const {
  PlanePoint g{};
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) {
      const int k = 3 - i - j;
      const Complex c = coefficients[index(i, j)];
      if (i) g[0] += c * double(i) * std::pow(p[0], i - 1) * std::pow(p[1], j) * std::pow(p[2], k);
      if (j) g[1] += c * double(j) * std::pow(p[0], i) * std::pow(p[1], j - 1) * std::pow(p[2], k);
      if (k) g[2] += c * double(k) * std::pow(p[0], i) * std::pow(p[1], j) * std::pow(p[2], k - 1);
    }
  return g;
}

double PlaneCubic::norm() const {
  double n = 0.0;
  for (auto c : coefficients) n = std::max(n, std::abs(c));
  return n;
}

PlanePoint cubic_third_point(const PlaneCubic& cubic, const PlanePoint& p1_in, const PlanePoint& p2_in) {
  const PlanePoint p1 = unit3(p1_in), p2 = unit3(p2_in);
  const double scale = cubic.norm();
  if (projective_distance3(p1, p2) < 1e-12) {
    PlanePoint g = cubic.gradient(p1);
    if (norm3(g) < 1e-12 * scale) throw DegenerateFibre("tangent undefined at a singular point of the cubic");
    PlanePoint d{g[1] * p1[2] - g[2] * p1[1], g[2] * p1[0] - g[0] * p1[2], g[0] * p1[1] - g[1] * p1[0]};
    // The tangent line {y : g . y = 0} contains p1 (Euler) and d; removing
    // the p1 component keeps d on it.
    Complex along = std::conj(p1[0]) * d[0] + std::conj(p1[1]) * d[1] + std::conj(p1[2]) * d[2];
    for (int k = 0; k < 3; ++k) d[k] -= along * p1[k];
    if (norm3(d) < 1e-14) throw DegenerateFibre("tangent direction vanishes");
    d = unit3(d);
    BinaryCubic h = restrict_to_line(cubic, p1, d);
    if (std::abs(h.c12) + std::abs(h.c03) < 1e-12 * scale) throw DegenerateFibre("the tangent line lies in the cubic");
    return polish(h, h.c03, -h.c12, p1, d);
  }
  BinaryCubic h = restrict_to_line(cubic, p1, p2);
  if (std::abs(h.c12) + std::abs(h.c21) < 1e-12 * scale) throw DegenerateFibre("the chord lies in the cubic");
  return polish(h, h.c12, -h.c21, p1, p2);
}

PlanePoint PlaneCubicContext::to_plane(const ComplexPoint& x) const { return {dot(e1, x), dot(e2, x), 1.0}; }

ComplexPoint PlaneCubicContext::to_ambient(const PlanePoint& p) const {
  ComplexPoint finite{};
  for (int k = 0; k < 4; ++k) finite[k] = p[0] * e1[k] + p[1] * e2[k];
  if (std::abs(p[2]) < 1e-12 * norm3(p)) {
    std::array<Complex, 5> image{0.0, finite[0], finite[1], finite[2], finite[3]};
    throw ChartEscape("the image lies on the hyperplane at infinity", image);
  }
  for (auto& c : finite) c /= p[2];
  return finite;
}

PlaneCubicContext residual_cubic(const QuarticData& data, const ComplexPoint& line_direction, const ComplexPoint& x,
                                 const FibreOptions& options) {
  PlaneCubicContext ctx;
  double ln = norm(line_direction);
  if (ln == 0.0) throw InputError("line direction is zero");
  for (int k = 0; k < 4; ++k) ctx.e1[k] = line_direction[k] / ln;
  Complex along = dot(ctx.e1, x);
  ComplexPoint rest;
  for (int k = 0; k < 4; ++k) rest[k] = x[k] - along * ctx.e1[k];
  double rn = norm(rest);
  if (rn <= 1e-12 * std::max(1.0, norm(x))) throw DomainError("the point lies on the line");
  for (int k = 0; k < 4; ++k) ctx.e2[k] = rest[k] / rn;

  // Q_k(a, b) = q_k(a e1 + b e2) = sum_j c[k][j] a^j b^(k-j).
  const HomogeneousForm* forms[3] = {&data.q2, &data.q3, &data.q4};
  std::array<numeric::Poly, 3> c;
  double scale = 0.0, residue = 0.0;
  for (int d = 0; d < 3; ++d) {
    const NumericForm q(*forms[d]);
    const int k = d + 2;
    c[d] = numeric::coefficients_from_samples(
        [&](Complex a) {
          ComplexPoint z;
          for (int j = 0; j < 4; ++j) z[j] = a * ctx.e1[j] + ctx.e2[j];
          return q(z);
        },
        k + 1);
    for (auto v : c[d]) scale = std::max(scale, std::abs(v));
    residue = std::max(residue, std::abs(c[d][k]));
  }
  if (scale == 0.0) throw DegenerateFibre("the quartic vanishes on the plane");
  ctx.division_residue = residue / scale;
  // Divide by b: a^i b^(k-i) -> a^i b^(k-1-i), weighted by c^(4-k).
  for (int d = 0; d < 3; ++d) {
    const int k = d + 2;
    for (int i = 0; i < k; ++i) ctx.cubic.coefficients[PlaneCubic::index(i, k - 1 - i)] = c[d][i];
  }
  const double cn = ctx.cubic.norm();
  auto coef = [&](int i, int j) { return ctx.cubic.coefficients[PlaneCubic::index(i, j)]; };
  ctx.line_multiplicity = 0.0;
  for (int i = 0; i <= 3; ++i) ctx.line_multiplicity = std::max(ctx.line_multiplicity, std::abs(coef(i, 0)) / cn);
  ctx.origin_gradient = std::max(std::abs(coef(1, 0)), std::abs(coef(0, 1))) / cn;

  // Branch quartic of the projection from o: D = g2^2 - 4 g1 g3, indexed by
  // the power of a.
  std::array<Complex, 2> g1{coef(0, 1), coef(1, 0)};
  std::array<Complex, 3> g2{coef(0, 2), coef(1, 1), coef(2, 0)};
  std::array<Complex, 4> g3{coef(0, 3), coef(1, 2), coef(2, 1), coef(3, 0)};
  std::array<Complex, 5> branch{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) branch[i + j] += g2[i] * g2[j];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) branch[i + j] -= 4.0 * g1[i] * g3[j];
  double bn = 0.0;
  for (auto v : branch) bn = std::max(bn, std::abs(v));
  if (bn == 0.0) {
    ctx.relative_discriminant = 0.0;
  } else {
    Complex qa = branch[4] / bn, qb = branch[3] / bn, qc = branch[2] / bn, qd = branch[1] / bn, qe = branch[0] / bn;
    Complex inv_i = 12.0 * qa * qe - 3.0 * qb * qd + qc * qc;
    Complex inv_j = 72.0 * qa * qc * qe + 9.0 * qb * qc * qd - 27.0 * qa * qd * qd - 27.0 * qe * qb * qb -
                    2.0 * qc * qc * qc;
    ctx.relative_discriminant = std::abs((4.0 * inv_i * inv_i * inv_i - inv_j * inv_j) / 27.0);
  }

  const double thr = options.degeneracy_threshold;
  if (ctx.division_residue > thr) {
    ctx.degenerate = true;
    ctx.reason = "the line does not lie on the quartic";
  } else if (ctx.line_multiplicity < thr) {
    ctx.degenerate = true;
    ctx.reason = "the fibre contains the line with multiplicity";
  } else if (ctx.origin_gradient < thr) {
    ctx.degenerate = true;
    ctx.reason = "o is a singular point of the residual cubic";
  } else if (ctx.relative_discriminant < thr) {
    ctx.degenerate = true;
    ctx.reason = "the residual cubic is singular";
  }
  return ctx;
}

LineInvolutionResult apply_line_involution(const QuarticData& data, const ComplexPoint& line_direction,
                                           const ComplexPoint& x, const FibreOptions& options) {
  require_on_quartic(data, x, 1e-8);
  LineInvolutionResult out;
  out.fibre = residual_cubic(data, line_direction, x, options);
  if (out.fibre.degenerate) throw DegenerateFibre(out.fibre.reason);
  const PlanePoint origin{0.0, 0.0, 1.0};
  const PlanePoint tangential = cubic_third_point(out.fibre.cubic, origin, origin);
  const PlanePoint start = out.fibre.to_plane(x);
  const PlanePoint image = cubic_third_point(out.fibre.cubic, tangential, start);
  out.origin_tangential =
      projective_distance3(start, tangential) < 1e-8 || projective_distance3(image, origin) < 1e-8;
  out.image = out.fibre.to_ambient(image);
  out.f_residual = std::abs(data.f(out.image));
  return out;
}

double plane_distance(const ComplexPoint& u, const ComplexPoint& v, const ComplexPoint& y) {
  ComplexPoint a = u, b = v;
  double na = norm(a);
  for (auto& c : a) c /= na;
  Complex proj = dot(a, b);
  for (int k = 0; k < 4; ++k) b[k] -= proj * a[k];
  double nb = norm(b);
  ComplexPoint r = y;
  Complex pa = dot(a, r);
  for (int k = 0; k < 4; ++k) r[k] -= pa * a[k];
  if (nb > 1e-14 * na) {
    for (auto& c : b) c /= nb;
    Complex pb = dot(b, r);
    for (int k = 0; k < 4; ++k) r[k] -= pb * b[k];
  }
  double ny = norm(y);
  return ny == 0.0 ? 0.0 : norm(r) / ny;
}

}  // namespace qwb

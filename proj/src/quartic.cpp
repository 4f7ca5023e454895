#include "qwb/quartic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "qwb/poly_roots.hpp"

namespace qwb {

namespace {

void require_shape(const HomogeneousForm& q, int degree, const char* name) {
  if (q.variables() != 4 || q.degree() != degree)
    throw InputError(std::string(name) + " must be a form of degree " + std::to_string(degree) +
                     " in 4 variables");
}

ComplexPoint unit(ComplexPoint z) {
  double n = 0.0;
  for (auto c : z) n += std::norm(c);
  n = std::sqrt(n);
  for (auto& c : z) c /= n;
  return z;
}

// Rotates the phase so the entry of largest modulus is real and positive.
ComplexPoint canonical_phase(ComplexPoint z) {
  int best = 0;
  for (int k = 1; k < 4; ++k)
    if (std::abs(z[k]) > std::abs(z[best]) * (1.0 + 1e-9)) best = k;
  Complex phase = std::conj(z[best]) / std::abs(z[best]);
  for (auto& c : z) c *= phase;
  return z;
}

Complex sylvester_resultant(const numeric::Poly& p, const numeric::Poly& q) {
  // p has formal degree 3, q formal degree 4; coefficients are ascending in
  // lambda for the binary forms sum c_j lambda^j mu^(d-j).
  Eigen::Matrix<Complex, 7, 7> s = Eigen::Matrix<Complex, 7, 7>::Zero();
  for (int row = 0; row < 4; ++row)
    for (int j = 0; j <= 3; ++j) s(row, row + j) = p[3 - j];
  for (int row = 0; row < 3; ++row)
    for (int j = 0; j <= 4; ++j) s(4 + row, row + j) = q[4 - j];
  return s.partialPivLu().determinant();
}

struct Chart {
  std::array<ComplexPoint, 3> a;  // images of the cone parametrization basis
  ComplexPoint vertex;
  Complex alpha, beta;  // unitary change (s, t) = U (s', 1)
};

ComplexPoint cone_point(const Chart& chart, Complex sp) {
  Complex s = chart.alpha * sp - std::conj(chart.beta);
  Complex t = chart.beta * sp + std::conj(chart.alpha);
  const Complex i(0.0, 1.0);
  Complex w1 = s * s - t * t, w2 = i * (s * s + t * t), w3 = 2.0 * s * t;
  ComplexPoint out{};
  for (int k = 0; k < 4; ++k) out[k] = w1 * chart.a[0][k] + w2 * chart.a[1][k] + w3 * chart.a[2][k];
  return out;
}

numeric::Poly restricted_coefficients(const NumericForm& q, const ComplexPoint& a, const ComplexPoint& k) {
  const int d = q.degree();
  return numeric::coefficients_from_samples(
      [&](Complex lambda) {
        ComplexPoint z;
        for (int j = 0; j < 4; ++j) z[j] = lambda * a[j] + k[j];
        return q(z);
      },
      d + 1);
}

struct Candidate {
  LineThroughO line;
};

Candidate refine_candidate(const NumericForm& n2, const NumericForm& n3, const NumericForm& n4,
                           const Chart& chart, Complex sp, double resultant_derivative) {
  Candidate out;
  out.line.resultant_derivative = resultant_derivative;
  ComplexPoint a = cone_point(chart, sp);
  numeric::Poly g3 = restricted_coefficients(n3, a, chart.vertex);
  numeric::Poly g4 = restricted_coefficients(n4, a, chart.vertex);
  auto r3 = numeric::binary_form_roots(g3);
  auto r4 = numeric::binary_form_roots(g4);

  double best = std::numeric_limits<double>::infinity();
  std::size_t bi = 0;
  for (std::size_t i = 0; i < r3.size(); ++i)
    for (std::size_t j = 0; j < r4.size(); ++j) {
      double d = numeric::projective_distance(r3[i], r4[j]);
      if (d < best) {
        best = d;
        bi = i;
      }
    }
  // A second, geometrically different common root makes recovery ambiguous.
  const double ambiguity = 1e-4;
  for (std::size_t i = 0; i < r3.size(); ++i) {
    if (numeric::projective_distance(r3[i], r3[bi]) < ambiguity) continue;
    for (std::size_t j = 0; j < r4.size(); ++j)
      if (numeric::projective_distance(r3[i], r4[j]) < ambiguity) out.line.ambiguous_recovery = true;
  }
  // Newton below sharpens the g3 root; the g4 partner only certifies it.
  const Complex lambda = r3[bi][0], mu = r3[bi][1];

  ComplexPoint z{};
  for (int k = 0; k < 4; ++k) z[k] = lambda * a[k] + mu * chart.vertex[k];
  z = unit(z);

  // Newton on (q2, q3, q4, <z0, z> - 1) with the start point z0 as anchor.
  const ComplexPoint anchor = z;
  std::array<Complex, 4> g2, g3v, g4v;
  for (int it = 0; it < 60; ++it) {
    Eigen::Matrix<Complex, 4, 4> jac;
    Eigen::Matrix<Complex, 4, 1> rhs;
    rhs(0) = n2.gradient(z, g2) / n2.coefficient_norm();
    rhs(1) = n3.gradient(z, g3v) / n3.coefficient_norm();
    rhs(2) = n4.gradient(z, g4v) / n4.coefficient_norm();
    Complex inner = 0.0;
    for (int k = 0; k < 4; ++k) {
      jac(0, k) = g2[k] / n2.coefficient_norm();
      jac(1, k) = g3v[k] / n3.coefficient_norm();
      jac(2, k) = g4v[k] / n4.coefficient_norm();
      jac(3, k) = std::conj(anchor[k]);
      inner += std::conj(anchor[k]) * z[k];
    }
    rhs(3) = inner - 1.0;
    Eigen::Matrix<Complex, 4, 1> step = jac.fullPivLu().solve(rhs);
    if (!step.allFinite()) break;
    double size = step.norm();
    for (int k = 0; k < 4; ++k) z[k] -= step(k);
    if (size < 1e-17) break;
  }
  ComplexPoint v = canonical_phase(unit(z));
  out.line.direction = v;

  Eigen::Matrix<Complex, 3, 4> jac;
  out.line.residuals[0] = std::abs(n2.gradient(v, g2));
  out.line.residuals[1] = std::abs(n3.gradient(v, g3v));
  out.line.residuals[2] = std::abs(n4.gradient(v, g4v));
  for (int k = 0; k < 4; ++k) {
    jac(0, k) = g2[k] / n2.coefficient_norm();
    jac(1, k) = g3v[k] / n3.coefficient_norm();
    jac(2, k) = g4v[k] / n4.coefficient_norm();
  }
  const Eigen::MatrixXcd dynamic = jac;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dynamic);
  out.line.margin = svd.singularValues()(2);
  return out;
}

bool lexicographic_less(const LineThroughO& x, const LineThroughO& y) {
  for (int k = 0; k < 4; ++k) {
    if (x.direction[k].real() != y.direction[k].real()) return x.direction[k].real() < y.direction[k].real();
    if (x.direction[k].imag() != y.direction[k].imag()) return x.direction[k].imag() < y.direction[k].imag();
  }
  return false;
}

GenericityReport analyze(const QuarticData& data, const LineSearchOptions& options, bool throw_on_precondition) {
  GenericityReport report;
  report.rank_q2 = rank_quadratic(data.q2);
  if (report.rank_q2 != 3) {
    if (throw_on_precondition)
      throw DomainError("q2 has rank " + std::to_string(report.rank_q2) + ", expected 3");
    report.failures.push_back("rank");
    return report;
  }
  Q2Normalization norm = normalize_q2(data.q2);
  report.vertex_ok = !data.q3.evaluate(norm.kernel).is_zero();
  if (!report.vertex_ok) {
    if (throw_on_precondition) throw DomainError("q3 vanishes at the vertex of the cone q2 = 0");
    report.failures.push_back("vertex");
    return report;
  }

  const NumericForm n2(data.q2), n3(data.q3), n4(data.q4);
  if (n4.coefficient_norm() == 0.0) {
    report.failures.push_back("q4_zero");
    return report;
  }
  Chart chart;
  for (int c = 0; c < 4; ++c) {
    ComplexPoint column;
    for (int r = 0; r < 4; ++r) column[r] = norm.transform[r * 4 + c];
    if (c < 3)
      chart.a[c] = column;
    else
      chart.vertex = unit(column);
  }
  // Adding multiples of the vertex keeps the cone parametrization; removing
  // the vertex component and matching scales conditions the resultant.
  double cone_scale = 0.0;
  for (auto& col : chart.a) {
    Complex inner = 0.0;
    for (int k = 0; k < 4; ++k) inner += std::conj(chart.vertex[k]) * col[k];
    for (int k = 0; k < 4; ++k) col[k] -= inner * chart.vertex[k];
    for (auto c : col) cone_scale += std::norm(c);
  }
  cone_scale = std::sqrt(cone_scale / 3.0);
  for (auto& col : chart.a)
    for (auto& c : col) c /= cone_scale;
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss;
  Complex alpha(gauss(rng), gauss(rng)), beta(gauss(rng), gauss(rng));
  double scale = std::hypot(std::abs(alpha), std::abs(beta));
  chart.alpha = alpha / scale;
  chart.beta = beta / scale;

  constexpr int kSamples = 32;
  numeric::Poly resultant = numeric::coefficients_from_samples(
      [&](Complex sp) {
        ComplexPoint a = cone_point(chart, sp);
        return sylvester_resultant(restricted_coefficients(n3, a, chart.vertex),
                                   restricted_coefficients(n4, a, chart.vertex));
      },
      kSamples);
  // The resultant has degree at most 24 in the cone parameter; the higher
  // interpolated coefficients measure the sampling noise.
  double largest = 0.0, noise = 0.0;
  for (int j = 0; j < kSamples; ++j)
    (j <= 24 ? largest : noise) = std::max(j <= 24 ? largest : noise, std::abs(resultant[j]));
  report.resultant_degree = -1;
  if (largest > 0.0)
    for (int j = 24; j >= 0; --j)
      if (std::abs(resultant[j]) > std::max(10.0 * noise, 1e-12 * largest)) {
        report.resultant_degree = j;
        break;
      }
  if (report.resultant_degree != 24) {
    report.failures.push_back("resultant_degree");
    if (report.resultant_degree <= 0) return report;
  }
  resultant.resize(report.resultant_degree + 1);
  for (auto& c : resultant) c /= largest;
  std::vector<Complex> roots = numeric::aberth_roots(resultant, options.seed);
  numeric::Poly dr = numeric::derivative(resultant);

  std::vector<Candidate> candidates(roots.size());
  const int count = static_cast<int>(roots.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (int r = 0; r < count; ++r) {
    double derivative = std::abs(numeric::horner(dr, roots[r]));
    candidates[r] = refine_candidate(n2, n3, n4, chart, roots[r], derivative);
  }

  // Cluster by projective distance. Roots of higher multiplicity are only
  // located to about the cube root of machine precision, so two candidates
  // that both fail the margin test merge within sqrt(separation).
  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
    {
      const LineThroughO& x = candidates[a].line;
      const LineThroughO& y = candidates[b].line;
      double radius = options.separation;
      if (x.margin <= options.separation && y.margin <= options.separation) radius = std::sqrt(options.separation);
      if (numeric::projective_distance(x.direction, y.direction) < radius) parent[find(a)] = find(b);
    }
  std::vector<int> size(count, 0);
  for (int a = 0; a < count; ++a) ++size[find(a)];

  bool residual_ok = true, margin_ok = true, recovery_ok = true;
  for (int a = 0; a < count; ++a) {
    LineThroughO& line = candidates[a].line;
    line.simple = line.margin > options.separation && size[find(a)] == 1;
    residual_ok &= *std::max_element(line.residuals.begin(), line.residuals.end()) < options.tolerance;
    margin_ok &= line.simple;
    recovery_ok &= !line.ambiguous_recovery;
    if (find(a) == a) {
      report.lines.push_back(line);
      report.cluster_sizes.push_back(size[a]);
    }
  }
  // Sort representatives together with their cluster sizes.
  std::vector<std::size_t> order(report.lines.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return lexicographic_less(report.lines[x], report.lines[y]); });
  std::vector<LineThroughO> lines;
  std::vector<int> sizes;
  for (auto idx : order) {
    lines.push_back(report.lines[idx]);
    sizes.push_back(report.cluster_sizes[idx]);
  }
  report.lines = std::move(lines);
  report.cluster_sizes = std::move(sizes);
  report.line_count = static_cast<int>(report.lines.size());

  report.min_separation = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < report.lines.size(); ++a)
    for (std::size_t b = a + 1; b < report.lines.size(); ++b)
      report.min_separation = std::min(
          report.min_separation, numeric::projective_distance(report.lines[a].direction, report.lines[b].direction));
  if (report.lines.size() < 2) report.min_separation = 0.0;

  if (report.line_count != 24) report.failures.push_back("line_count");
  if (!residual_ok) report.failures.push_back("residual");
  if (!margin_ok) report.failures.push_back("margin");
  if (!recovery_ok) report.failures.push_back("ambiguous_recovery");
  report.distinct = report.failures.empty();
  return report;
}

}  // namespace

QuarticData QuarticData::make(HomogeneousForm q2, HomogeneousForm q3, HomogeneousForm q4) {
  require_shape(q2, 2, "q2");
  require_shape(q3, 3, "q3");
  require_shape(q4, 4, "q4");
  return QuarticData{std::move(q2), std::move(q3), std::move(q4)};
}

HomogeneousForm QuarticData::projective_quartic() const {
  HomogeneousForm out(5, 4);
  const HomogeneousForm* parts[3] = {&q2, &q3, &q4};
  for (int d = 0; d < 3; ++d)
    for (const auto& [e, c] : parts[d]->terms()) {
      std::vector<int> exponent{2 - d, e[0], e[1], e[2], e[3]};
      out.add_term(exponent, c);
    }
  return out;
}

GaussianRational QuarticData::f(const ExactPoint& z) const {
  return q2.evaluate(z) + q3.evaluate(z) + q4.evaluate(z);
}

Complex QuarticData::f(const ComplexPoint& z) const {
  return q2.evaluate(std::span<const Complex>(z)) + q3.evaluate(std::span<const Complex>(z)) +
         q4.evaluate(std::span<const Complex>(z));
}

int rank_quadratic(const HomogeneousForm& q2) {
  if (q2.degree() != 2) throw InputError("rank_quadratic expects a form of degree 2");
  return exact_rank(symmetric_matrix(q2));
}

Q2Normalization normalize_q2(const HomogeneousForm& q2) {
  int rank = rank_quadratic(q2);
  if (rank != 3) throw DomainError("q2 has rank " + std::to_string(rank) + ", expected 3");
  const ExactMatrix4 m = symmetric_matrix(q2);
  Congruence c = congruence_diagonalize(m);
  Q2Normalization out;
  out.congruence = c.p;
  std::array<Complex, 4> scale{};
  for (int k = 0; k < 3; ++k) {
    out.diagonal[k] = c.diagonal[k];
    scale[k] = 1.0 / std::sqrt(c.diagonal[k].to_complex());
  }
  scale[3] = 1.0;
  for (int r = 0; r < 4; ++r) {
    out.kernel[r] = c.p[r * 4 + 3];
    for (int col = 0; col < 4; ++col) out.transform[r * 4 + col] = c.p[r * 4 + col].to_complex() * scale[col];
  }
  // Congruence residual T^T M T - diag(1, 1, 1, 0).
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex sum = 0.0;
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
          sum += out.transform[r * 4 + i] * m[r * 4 + s].to_complex() * out.transform[s * 4 + j];
      double target = (i == j && i < 3) ? 1.0 : 0.0;
      out.residual = std::max(out.residual, std::abs(sum - target));
    }
  return out;
}

GaussianRational vertex_value(const QuarticData& data) {
  return data.q3.evaluate(normalize_q2(data.q2).kernel);
}

GenericityReport find_lines(const QuarticData& data, const LineSearchOptions& options) {
  return analyze(data, options, true);
}

GenericityReport check_genericity(const QuarticData& data, const LineSearchOptions& options) {
  return analyze(data, options, false);
}

double line_set_distance(const std::vector<LineThroughO>& a, const std::vector<LineThroughO>& b) {
  auto one_way = [](const std::vector<LineThroughO>& x, const std::vector<LineThroughO>& y) {
    double worst = 0.0;
    for (const auto& u : x) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& v : y) nearest = std::min(nearest, numeric::projective_distance(u.direction, v.direction));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

HomogeneousForm parse_polynomial(const std::string& text, int degree) {
  HomogeneousForm out(4, degree);
  std::size_t pos = 0;
  auto peek = [&]() -> char {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos < text.size() ? text[pos] : '\0';
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw InputError("expected a number in '" + text + "'");
    return text.substr(start, pos - start);
  };
  bool first = true;
  while (peek() != '\0') {
    bool negative = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negative = c == '-';
      ++pos;
    } else if (!first) {
      throw InputError("expected '+' or '-' in '" + text + "'");
    }
    first = false;
    Rational coef(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = read_int();
      if (peek() == '/') {
        ++pos;
        num += "/" + read_int();
      }
      coef = parse_rational(num);
      if (peek() == '*') ++pos;
    }
    std::vector<int> exponent(4, 0);
    while (peek() == 'z') {
      ++pos;
      std::string var = read_int();
      int v = std::stoi(var);
      if (v < 1 || v > 4) throw InputError("variable index out of range in '" + text + "'");
      int e = 1;
      if (peek() == '^') {
        ++pos;
        e = std::stoi(read_int());
      }
      exponent[v - 1] += e;
      if (peek() == '*') ++pos;
    }
    out.add_term(exponent, GaussianRational(negative ? Rational(-coef) : coef));
  }
  return out;
}

QuarticData bundled_quartic() {
  return QuarticData::make(parse_polynomial("z1^2+z2^2+z3^2", 2),
                           parse_polynomial("z4^3+z1^3+2z2^3+3z3^3", 3),
                           parse_polynomial("z1^4+z2^4+z3^4+z4^4+z1z2z3z4", 4));
}

QuarticData degenerate_triple_quartic() {
  return QuarticData::make(parse_polynomial("z1^2+z2^2+z3^2", 2),
                           parse_polynomial("z4^3+z1^3+2z2^3+3z3^3", 3),
                           parse_polynomial("z1^4+z2^4+z3^4+z4^4", 4));
}

}  // namespace qwb

#include "qwb/form.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace qwb {

namespace {

Exponent to_exponent(std::span<const int> e, int variables, int degree) {
  if (static_cast<int>(e.size()) != variables)
    throw InputError("exponent has " + std::to_string(e.size()) + " entries, expected " +
                     std::to_string(variables));
  Exponent out{};
  int total = 0;
  for (int k = 0; k < variables; ++k) {
    if (e[k] < 0 || e[k] > 255) throw InputError("exponent entry out of range");
    out[k] = static_cast<std::uint8_t>(e[k]);
    total += e[k];
  }
  if (total != degree)
    throw InputError("monomial of degree " + std::to_string(total) + " in a form of degree " +
                     std::to_string(degree));
  return out;
}

template <class Scalar>
Scalar ipow(const Scalar& x, int e) {
  Scalar r(1);
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

}  // namespace

HomogeneousForm::HomogeneousForm(int variables, int degree) : variables_(variables), degree_(degree) {
  if (variables < 1 || variables > kMaxVars) throw InputError("unsupported number of variables");
  if (degree < 0) throw InputError("negative degree");
}

void HomogeneousForm::accumulate(const Exponent& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HomogeneousForm::add_term(std::span<const int> exponent, const GaussianRational& c) {
  accumulate(to_exponent(exponent, variables_, degree_), c);
}

GaussianRational HomogeneousForm::coefficient(std::span<const int> exponent) const {
  auto it = terms_.find(to_exponent(exponent, variables_, degree_));
  return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational HomogeneousForm::evaluate(std::span<const GaussianRational> point) const {
  if (static_cast<int>(point.size()) != variables_) throw InputError("point arity mismatch");
  GaussianRational sum;
  for (const auto& [e, c] : terms_) {
    GaussianRational term = c;
    for (int k = 0; k < variables_; ++k)
      if (e[k]) term *= pow(point[k], e[k]);
    sum += term;
  }
  return sum;
}

Complex HomogeneousForm::evaluate(std::span<const Complex> point) const {
  return NumericForm(*this)(point);
}

HomogeneousForm HomogeneousForm::scaled(const GaussianRational& c) const {
  HomogeneousForm out(variables_, degree_);
  for (const auto& [e, coef] : terms_) out.accumulate(e, coef * c);
  return out;
}

HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.variables_ != b.variables_ || a.degree_ != b.degree_)
    throw InputError("adding forms of different shape");
  HomogeneousForm out = a;
  for (const auto& [e, c] : b.terms_) out.accumulate(e, c);
  return out;
}

HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.variables_ != b.variables_) throw InputError("multiplying forms of different arity");
  HomogeneousForm out(a.variables_, a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{};
      for (int k = 0; k < a.variables_; ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      out.accumulate(e, ca * cb);
    }
  return out;
}

HomogeneousForm linear_form(std::span<const GaussianRational> coefficients) {
  int n = static_cast<int>(coefficients.size());
  HomogeneousForm out(n, 1);
  for (int k = 0; k < n; ++k) {
    std::vector<int> e(n, 0);
    e[k] = 1;
    out.add_term(e, coefficients[k]);
  }
  return out;
}

HomogeneousForm HomogeneousForm::substitute_linear(std::span<const GaussianRational> matrix) const {
  const int n = variables_;
  if (static_cast<int>(matrix.size()) != n * n) throw InputError("substitution matrix has wrong size");
  // x_k = sum_j A[k][j] w_j
  std::vector<HomogeneousForm> rows;
  for (int k = 0; k < n; ++k) rows.push_back(linear_form(matrix.subspan(k * n, n)));

  HomogeneousForm out(n, degree_);
  HomogeneousForm one(n, 0);
  one.add_term(std::vector<int>(n, 0), GaussianRational(1));
  for (const auto& [e, c] : terms_) {
    HomogeneousForm product = one;
    for (int k = 0; k < n; ++k)
      for (int p = 0; p < e[k]; ++p) product = product * rows[k];
    out = out + product.scaled(c);
  }
  return out;
}

std::array<GaussianRational, 16> symmetric_matrix(const HomogeneousForm& q2) {
  if (q2.degree() != 2 || q2.variables() != 4) throw InputError("expected a quadratic form in 4 variables");
  std::array<GaussianRational, 16> m{};
  const Rational half(1, 2);
  for (const auto& [e, c] : q2.terms()) {
    int first = -1, second = -1;
    for (int k = 0; k < 4; ++k) {
      if (e[k] == 2) first = second = k;
      if (e[k] == 1) (first < 0 ? first : second) = k;
    }
    if (first == second) {
      m[first * 4 + first] += c;
    } else {
      GaussianRational h = c * GaussianRational(half);
      m[first * 4 + second] += h;
      m[second * 4 + first] += h;
    }
  }
  return m;
}

NumericForm::NumericForm(const HomogeneousForm& form) : variables_(form.variables()), degree_(form.degree()) {
  for (const auto& [e, c] : form.terms()) {
    Complex v = c.to_complex();
    terms_.push_back({e, v});
    coefficient_norm_ += std::abs(v);
  }
}

Complex NumericForm::operator()(std::span<const Complex> z) const {
  Complex sum = 0.0;
  for (const auto& t : terms_) {
    Complex term = t.coefficient;
    for (int k = 0; k < variables_; ++k) term *= ipow(z[k], t.exponent[k]);
    sum += term;
  }
  return sum;
}

Complex NumericForm::gradient(std::span<const Complex> z, std::span<Complex> grad) const {
  std::fill(grad.begin(), grad.end(), Complex(0.0));
  Complex sum = 0.0;
  std::array<Complex, kMaxVars> powers{};
  for (const auto& t : terms_) {
    Complex term = t.coefficient;
    for (int k = 0; k < variables_; ++k) {
      powers[k] = ipow(z[k], t.exponent[k]);
      term *= powers[k];
    }
    sum += term;
    for (int k = 0; k < variables_; ++k) {
      if (t.exponent[k] == 0) continue;
      Complex d = t.coefficient * static_cast<double>(t.exponent[k]) * ipow(z[k], t.exponent[k] - 1);
      for (int j = 0; j < variables_; ++j)
        if (j != k) d *= powers[j];
      grad[k] += d;
    }
  }
  return sum;
}

}  // namespace qwb

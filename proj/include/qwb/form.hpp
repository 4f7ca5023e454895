#ifndef QWB_FORM_HPP
#define QWB_FORM_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qwb/rational.hpp"

namespace qwb {

inline constexpr int kMaxVars = 5;

using Exponent = std::array<std::uint8_t, kMaxVars>;

/// Exact homogeneous polynomial with coefficients in Q(i), stored sparsely
/// (zero coefficients are never kept).
class HomogeneousForm {
 public:
  HomogeneousForm() = default;
  HomogeneousForm(int variables, int degree);

  int variables() const { return variables_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, GaussianRational>& terms() const { return terms_; }

  /// Adds `c` to the coefficient of the monomial. Throws InputError when the
  /// exponent does not have the form's degree or arity.
  void add_term(std::span<const int> exponent, const GaussianRational& c);
  GaussianRational coefficient(std::span<const int> exponent) const;

  GaussianRational evaluate(std::span<const GaussianRational> point) const;
  Complex evaluate(std::span<const Complex> point) const;

  HomogeneousForm scaled(const GaussianRational& c) const;

  /// The form q(A·w) in the new variables w, A given row-major
  /// (variables() × variables()).
  HomogeneousForm substitute_linear(std::span<const GaussianRational> matrix) const;

  friend HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b);
  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b);
  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.variables_ == b.variables_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void accumulate(const Exponent& e, const GaussianRational& c);

  int variables_ = 0;
  int degree_ = 0;
  std::map<Exponent, GaussianRational> terms_;
};

/// A linear form sum c_k x_k as a degree-1 HomogeneousForm.
HomogeneousForm linear_form(std::span<const GaussianRational> coefficients);

/// Double-precision snapshot of a form for fast evaluation and gradients.
class NumericForm {
 public:
  NumericForm() = default;
  explicit NumericForm(const HomogeneousForm& form);

  int variables() const { return variables_; }
  int degree() const { return degree_; }
  /// Sum of coefficient moduli; a natural scale for residuals.
  double coefficient_norm() const { return coefficient_norm_; }

  Complex operator()(std::span<const Complex> z) const;
  /// Value and holomorphic gradient at z.
  Complex gradient(std::span<const Complex> z, std::span<Complex> grad) const;

 private:
  struct Term {
    Exponent exponent;
    Complex coefficient;
  };
  int variables_ = 0;
  int degree_ = 0;
  double coefficient_norm_ = 0.0;
  std::vector<Term> terms_;
};

/// 4x4 symmetric matrix of a quadratic form over Q(i), row-major.
std::array<GaussianRational, 16> symmetric_matrix(const HomogeneousForm& q2);

}  // namespace qwb

#endif

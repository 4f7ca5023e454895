#ifndef QWB_RATIONAL_HPP
#define QWB_RATIONAL_HPP

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "qwb/errors.hpp"

namespace qwb {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Parses "p/q", an integer, or a finite decimal ("-1.25", "3e-2") into an
/// exact rational. Throws InputError on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Element of Q(i). Every coefficient of a form lives here; purely rational
/// data simply has im == 0.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long v) : re(v) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  GaussianRational inverse() const;

  Complex to_complex() const { return {re.get_d(), im.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

GaussianRational pow(const GaussianRational& base, unsigned exponent);

/// Accepts a rational literal, or "a+bi" / "a-bi" / "bi" with rational parts.
GaussianRational parse_gaussian(std::string_view text);

std::string to_string(const GaussianRational& z);

/// Parses "1.5", "-2e-3", "0.5+1.25i", "3i", "-i" into a complex double.
Complex parse_complex(std::string_view text);

}  // namespace qwb

#endif

#include "qwb/rational.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

namespace qwb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view s, std::string_view original) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6)
      throw InputError("bad exponent in number '" + std::string(original) + "'");
    std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw InputError("bad number '" + std::string(original) + "'");
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw InputError("bad number '" + std::string(original) + "'");
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational value = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw InputError("empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = trim(s.substr(slash + 1));
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+'))
      num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den))
      throw InputError("bad rational '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    mpz_class n(std::string(num_digits), 10);
    if (num.front() == '-') n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  return parse_decimal(s, text);
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw DomainError("division by zero in Q(i)");
  return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational pow(const GaussianRational& base, unsigned exponent) {
  GaussianRational result(1);
  GaussianRational b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

namespace {

// Splits "a+bi" into real and imaginary literal parts. The split point is the
// last sign that is not the leading sign and not part of an exponent.
std::pair<std::string_view, std::string_view> split_complex(std::string_view s) {
  if (s.empty() || (s.back() != 'i' && s.back() != 'I')) return {s, {}};
  std::string_view body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {{}, body};
  return {body.substr(0, split), body.substr(split)};
}

std::string imaginary_literal(std::string_view im) {
  if (im.empty() || im == "+") return "1";
  if (im == "-") return "-1";
  return std::string(im);
}

}  // namespace

GaussianRational parse_gaussian(std::string_view text) {
  std::string_view s = trim(text);
  auto [re, im] = split_complex(s);
  if (im.data() == nullptr && re == s) return GaussianRational(parse_rational(s));
  Rational real = re.empty() ? Rational(0) : parse_rational(re);
  return {real, parse_rational(imaginary_literal(im))};
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return z.re.get_str();
  std::string out = sgn(z.re) != 0 ? z.re.get_str() : std::string();
  std::string im = z.im.get_str();
  if (!out.empty() && sgn(z.im) > 0) out += "+";
  return out + im + "i";
}

Complex parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  auto [re, im] = split_complex(s);
  auto to_double = [&](std::string_view part) {
    std::string buf(part);
    if (buf.find('/') != std::string::npos) return parse_rational(buf).get_d();
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size())
      throw InputError("bad complex number '" + std::string(text) + "'");
    return v;
  };
  if (im.data() == nullptr && re == s) return {to_double(s), 0.0};
  double real = re.empty() ? 0.0 : to_double(re);
  return {real, to_double(imaginary_literal(im))};
}

}  // namespace qwb

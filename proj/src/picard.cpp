#include "qwb/picard.hpp"

#include <cstdlib>
#include <stdexcept>

#include "qwb/errors.hpp"

namespace qwb {

namespace {

InvolutionMatrix<2> make_galois() {
  InvolutionMatrix<2> m;
  m.entries = {{{3, 2}, {-4, -3}}};
  if (!m.is_involution()) throw std::logic_error("Galois pullback matrix is not an involution");
  return m;
}

InvolutionMatrix<3> make_line() {
  InvolutionMatrix<3> m;
  m.entries = {{{11, 0, 10}, {-6, 1, -6}, {-12, 0, -11}}};
  if (!m.is_involution()) throw std::logic_error("line pullback matrix is not an involution");
  return m;
}

std::string term(std::int64_t coef, const std::string& symbol, bool leading) {
  if (coef == 0) return "";
  std::string out;
  if (coef < 0)
    out = leading ? "-" : " - ";
  else if (!leading)
    out = " + ";
  std::int64_t a = std::llabs(coef);
  if (a != 1) out += std::to_string(a);
  return out + symbol;
}

}  // namespace

const InvolutionMatrix<2>& galois_pullback_matrix() {
  static const InvolutionMatrix<2> m = make_galois();
  return m;
}

const InvolutionMatrix<3>& line_pullback_matrix() {
  static const InvolutionMatrix<3> m = make_line();
  return m;
}

PicClass galois_involution_pullback(const PicClass& c) {
  auto v = galois_pullback_matrix().apply({c.coef_h, c.coef_q});
  return {v[0], v[1]};
}

PicClassLine line_involution_pullback(const PicClassLine& c) {
  auto v = line_pullback_matrix().apply({c.coef_h, c.coef_q, c.coef_delta});
  return {v[0], v[1], v[2]};
}

std::int64_t degree_after(int generator, std::int64_t n, std::int64_t m_or_mu) {
  if (generator < 0 || generator > 24) throw InputError("generator index must lie in 0..24");
  return generator == 0 ? 3 * n - 2 * m_or_mu : 11 * n - 10 * m_or_mu;
}

std::string render(const PicClass& c) {
  std::string out = term(c.coef_h, "H", true);
  out += term(c.coef_q, "Q", out.empty());
  return out.empty() ? "0" : out;
}

std::string render(const PicClassLine& c, int line_index) {
  std::string out = term(c.coef_h, "H", true);
  out += term(c.coef_q, "Q", out.empty());
  out += term(c.coef_delta, "D" + std::to_string(line_index), out.empty());
  return out.empty() ? "0" : out;
}

}  // namespace qwb

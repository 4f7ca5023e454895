#ifndef QWB_PICARD_HPP
#define QWB_PICARD_HPP

#include <array>
#include <cstdint>
#include <string>

namespace qwb {

/// coef_h H + coef_q Q on the blow-up of o. A mobile system in |nH - mQ| is
/// stored as (n, -m).
struct PicClass {
  std::int64_t coef_h = 0;
  std::int64_t coef_q = 0;

  static PicClass mobile(std::int64_t n, std::int64_t m) { return {n, -m}; }
  std::int64_t n() const { return coef_h; }
  std::int64_t m() const { return -coef_q; }
  friend bool operator==(const PicClass&, const PicClass&) = default;
};

/// coef_h H + coef_q Q + coef_delta Delta on the further blow-up of a line.
struct PicClassLine {
  std::int64_t coef_h = 0;
  std::int64_t coef_q = 0;
  std::int64_t coef_delta = 0;

  static PicClassLine mobile(std::int64_t n, std::int64_t m, std::int64_t mu) { return {n, -m, -mu}; }
  friend bool operator==(const PicClassLine&, const PicClassLine&) = default;
};

/// Integer matrix acting on coordinate columns; squares to the identity.
template <int N>
struct InvolutionMatrix {
  std::array<std::array<std::int64_t, N>, N> entries{};

  std::array<std::array<std::int64_t, N>, N> squared() const {
    std::array<std::array<std::int64_t, N>, N> out{};
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) out[i][j] += entries[i][k] * entries[k][j];
    return out;
  }
  bool is_involution() const {
    auto sq = squared();
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (sq[i][j] != (i == j ? 1 : 0)) return false;
    return true;
  }
  std::array<std::int64_t, N> apply(const std::array<std::int64_t, N>& v) const {
    std::array<std::int64_t, N> out{};
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) out[i] += entries[i][k] * v[k];
    return out;
  }
};

/// Pullback by the Galois involution in the basis (H, Q): columns are the
/// images H -> 3H - 4Q and Q -> 2H - 3Q.
const InvolutionMatrix<2>& galois_pullback_matrix();

/// Pullback by a line involution in the basis (H, Q, Delta):
/// H -> 11H - 6Q - 12 Delta, Q -> Q, Delta -> 10H - 6Q - 11 Delta.
const InvolutionMatrix<3>& line_pullback_matrix();

PicClass galois_involution_pullback(const PicClass& c);
PicClassLine line_involution_pullback(const PicClassLine& c);

/// Degree of the image system after untwisting by `generator`: 3n - 2m for
/// the Galois involution (generator 0), 11n - 10 mu for a line involution.
std::int64_t degree_after(int generator, std::int64_t n, std::int64_t m_or_mu);

/// The anticanonical class -K = H.
inline constexpr PicClass kAnticanonical{1, 0};

/// "nH - mQ" style rendering.
std::string render(const PicClass& c);
std::string render(const PicClassLine& c, int line_index);

}  // namespace qwb

#endif

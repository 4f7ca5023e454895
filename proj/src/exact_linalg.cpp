#include "qwb/exact_linalg.hpp"

#include <utility>

namespace qwb {

namespace {

GaussianRational& at(ExactMatrix4& m, int r, int c) { return m[r * 4 + c]; }

// m <- E^T m E and p <- p E, where E adds `factor` times column `src` to
// column `dst`.
void add_column(ExactMatrix4& m, ExactMatrix4& p, int src, int dst, const GaussianRational& factor) {
  for (int r = 0; r < 4; ++r) at(m, r, dst) += factor * at(m, r, src);
  for (int c = 0; c < 4; ++c) at(m, dst, c) += factor * at(m, src, c);
  for (int r = 0; r < 4; ++r) at(p, r, dst) += factor * at(p, r, src);
}

void swap_index(ExactMatrix4& m, ExactMatrix4& p, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < 4; ++r) std::swap(at(m, r, a), at(m, r, b));
  for (int c = 0; c < 4; ++c) std::swap(at(m, a, c), at(m, b, c));
  for (int r = 0; r < 4; ++r) std::swap(at(p, r, a), at(p, r, b));
}

}  // namespace

ExactMatrix4 identity4() {
  ExactMatrix4 m{};
  for (int k = 0; k < 4; ++k) m[k * 5] = GaussianRational(1);
  return m;
}

ExactMatrix4 multiply(const ExactMatrix4& a, const ExactMatrix4& b) {
  ExactMatrix4 out{};
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) {
      if (a[r * 4 + k].is_zero()) continue;
      for (int c = 0; c < 4; ++c) out[r * 4 + c] += a[r * 4 + k] * b[k * 4 + c];
    }
  return out;
}

ExactMatrix4 transpose(const ExactMatrix4& a) {
  ExactMatrix4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[c * 4 + r] = a[r * 4 + c];
  return out;
}

int exact_rank(ExactMatrix4 m) {
  int rank = 0;
  for (int col = 0; col < 4 && rank < 4; ++col) {
    int pivot = -1;
    for (int r = rank; r < 4; ++r)
      if (!at(m, r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < 4; ++c) std::swap(at(m, rank, c), at(m, pivot, c));
    GaussianRational inv = at(m, rank, col).inverse();
    for (int r = rank + 1; r < 4; ++r) {
      if (at(m, r, col).is_zero()) continue;
      GaussianRational factor = at(m, r, col) * inv;
      for (int c = col; c < 4; ++c) at(m, r, c) -= factor * at(m, rank, c);
    }
    ++rank;
  }
  return rank;
}

Congruence congruence_diagonalize(const ExactMatrix4& symmetric) {
  ExactMatrix4 m = symmetric;
  ExactMatrix4 p = identity4();
  int k = 0;
  int end = 4;  // rows [k, end) are undecided, rows >= end are zero
  while (k < end) {
    if (at(m, k, k).is_zero()) {
      int j = -1;
      for (int c = k + 1; c < end; ++c)
        if (!at(m, c, c).is_zero()) {
          j = c;
          break;
        }
      if (j >= 0) {
        swap_index(m, p, k, j);
      } else {
        for (int c = k + 1; c < end; ++c)
          if (!at(m, k, c).is_zero()) {
            j = c;
            break;
          }
        if (j < 0) {
          swap_index(m, p, k, --end);
          continue;
        }
        // Both diagonal entries vanish; the new diagonal is 2 m[k][j] != 0.
        add_column(m, p, j, k, GaussianRational(1));
      }
    }
    GaussianRational inv = at(m, k, k).inverse();
    for (int c = k + 1; c < 4; ++c) {
      if (at(m, k, c).is_zero()) continue;
      add_column(m, p, k, c, -(at(m, k, c) * inv));
    }
    ++k;
  }
  Congruence out;
  out.p = p;
  for (int i = 0; i < 4; ++i) out.diagonal[i] = at(m, i, i);
  return out;
}

}  // namespace qwb

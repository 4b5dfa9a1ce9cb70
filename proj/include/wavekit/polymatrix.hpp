#pragma once

#include <vector>

#include "wavekit/groebner.hpp"

namespace wavekit {
namespace detail {

// Fraction-free Gaussian elimination (Bareiss). Entries after step k are
// minors of the input, so the divisions by the previous pivot are exact.
// Row swaps only; columns without a pivot are skipped.
inline size_t bareiss_rank(std::vector<std::vector<Polynomial>> m, const RingPtr& ring) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  Polynomial prev = Polynomial::constant(ring, 1);
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pivot = rows;
    size_t best_terms = 0;
    for (size_t i = rank; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      if (pivot == rows || m[i][c].term_count() < best_terms) {
        pivot = i;
        best_terms = m[i][c].term_count();
      }
    }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        m[i][j] = divide_exact(m[rank][c] * m[i][j] - m[i][c] * m[rank][j], prev);
      m[i][c] = Polynomial::zero(ring);
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

// Determinant by Bareiss; the last pivot is the determinant up to the sign
// of the row swaps.
inline Polynomial bareiss_det(std::vector<std::vector<Polynomial>> m, const RingPtr& ring) {
  size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  Polynomial prev = Polynomial::constant(ring, 1);
  int sign = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = n;
    for (size_t i = c; i < n; ++i)
      if (!m[i][c].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == n) return Polynomial::zero(ring);
    if (pivot != c) {
      std::swap(m[c], m[pivot]);
      sign = -sign;
    }
    for (size_t i = c + 1; i < n; ++i) {
      for (size_t j = c + 1; j < n; ++j)
        m[i][j] = divide_exact(m[c][c] * m[i][j] - m[i][c] * m[c][j], prev);
      m[i][c] = Polynomial::zero(ring);
    }
    prev = m[c][c];
  }
  Polynomial det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace detail
}  // namespace wavekit

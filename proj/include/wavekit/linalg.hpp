#pragma once

#include <vector>

#include "wavekit/rational.hpp"

namespace wavekit {

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;

// In-place reduced row echelon form; returns the rank.
inline size_t rref(RationalMatrix& m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Rational inv = m[rank][c].inverse();
    for (size_t j = c; j < cols; ++j) m[rank][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline size_t matrix_rank(RationalMatrix m) { return rref(m); }

// Scale a row to coprime integers with positive first nonzero entry.
inline RationalRow primitive_row(const RationalRow& row) {
  mpz_class den = 1, num = 0;
  for (const auto& x : row) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
    den = l;
  }
  for (const auto& x : row) {
    mpz_class n = x.numerator() * (den / x.denominator());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
  }
  if (num == 0) return row;
  Rational scale{den, num};
  for (const auto& x : row)
    if (!x.is_zero()) {
      if ((x * scale).sign() < 0) scale = -scale;
      break;
    }
  RationalRow out;
  out.reserve(row.size());
  for (const auto& x : row) out.push_back(x * scale);
  return out;
}

// Basis of { x : M x = 0 }, one row per free column of the RREF, in
// canonical primitive-integer form.
inline RationalMatrix nullspace(RationalMatrix m, size_t cols) {
  if (m.empty()) m.push_back(RationalRow(cols, Rational(0)));
  size_t rank = rref(m);
  std::vector<long> pivot_of_col(cols, -1);
  for (size_t r = 0, c = 0; r < rank; ++r) {
    while (c < cols && m[r][c].is_zero()) ++c;
    if (c == cols) break;
    pivot_of_col[c] = static_cast<long>(r);
    ++c;
  }
  RationalMatrix basis;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    RationalRow v(cols, Rational(0));
    v[c] = Rational(1);
    for (size_t j = 0; j < cols; ++j) {
      if (pivot_of_col[j] >= 0) v[j] = -m[static_cast<size_t>(pivot_of_col[j])][c];
    }
    basis.push_back(primitive_row(v));
  }
  return basis;
}

}  // namespace wavekit

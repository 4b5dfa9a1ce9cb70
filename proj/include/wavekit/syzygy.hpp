#pragma once

#include <utility>
#include <vector>

#include "wavekit/module.hpp"
#include "wavekit/operator.hpp"
#include "wavekit/polymatrix.hpp"

namespace wavekit {

// Rank of A over the fraction field QQ(y).
inline size_t generic_rank(const Operator& a) {
  std::vector<std::vector<Polynomial>> m;
  m.reserve(a.rows());
  for (size_t i = 0; i < a.rows(); ++i) {
    std::vector<Polynomial> row;
    row.reserve(a.cols());
    for (size_t j = 0; j < a.cols(); ++j) row.push_back(a.entry(i, j));
    m.push_back(std::move(row));
  }
  return detail::bareiss_rank(std::move(m), a.frequency_ring());
}

// Generators of the syzygy module of A: columns of the returned matrix B
// generate ker(A : R^k -> R^l), so A*B = 0 and the sequence
// R^k' -> R^k -> R^l is exact. Columns are sorted by the module order on
// their leading terms; the generating set is not minimalized.
inline SyzygyMatrix syzygies(const Operator& a) {
  const RingPtr& ring = a.frequency_ring();
  std::vector<FreeModuleElement> columns;
  columns.reserve(a.cols());
  for (size_t j = 0; j < a.cols(); ++j) {
    std::vector<Polynomial> col;
    col.reserve(a.rows());
    for (size_t i = 0; i < a.rows(); ++i) col.push_back(a.entry(i, j));
    columns.emplace_back(ring, std::move(col));
  }
  std::vector<FreeModuleElement> kernel = module_kernel(columns, ring, a.rows());
  SyzygyMatrix b;
  b.ring = ring;
  b.rows = a.cols();
  b.cols = kernel.size();
  b.entries.assign(b.rows * b.cols, Polynomial::zero(ring));
  for (size_t j = 0; j < kernel.size(); ++j)
    for (size_t i = 0; i < b.rows; ++i) b.entries[i * b.cols + j] = kernel[j].coord(i);
  return b;
}

// The submodule of R^k spanned by the rows of A (the module M = im A^T).
inline SubmoduleBasis row_module(const Operator& a) {
  const RingPtr& ring = a.frequency_ring();
  std::vector<FreeModuleElement> rows;
  rows.reserve(a.rows());
  for (size_t i = 0; i < a.rows(); ++i) {
    std::vector<Polynomial> row;
    row.reserve(a.cols());
    for (size_t j = 0; j < a.cols(); ++j) row.push_back(a.entry(i, j));
    rows.emplace_back(ring, std::move(row));
  }
  return module_buchberger(rows, ring, a.cols());
}

// Exactness of R^l -> R^k -> R^k' (the transposed syzygy sequence) at R^k:
// every generator of ker(B^T) must lie in the row module of A. The reverse
// containment holds automatically from A*B = 0. Equivalent to the existence
// of a vector potential.
inline bool admits_vector_potential(const Operator& a) {
  const RingPtr& ring = a.frequency_ring();
  SyzygyMatrix b = syzygies(a);
  SubmoduleBasis rows = row_module(a);
  std::vector<FreeModuleElement> kernel;
  if (b.cols == 0) {
    // B^T is the zero map R^k -> R^0; its kernel is everything.
    for (size_t i = 0; i < a.cols(); ++i)
      kernel.push_back(FreeModuleElement::basis_vector(ring, a.cols(), i));
  } else {
    std::vector<FreeModuleElement> bt_columns;  // column j of B^T = row j of B
    bt_columns.reserve(a.cols());
    for (size_t j = 0; j < a.cols(); ++j) {
      std::vector<Polynomial> col;
      col.reserve(b.cols);
      for (size_t i = 0; i < b.cols; ++i) col.push_back(b.entry(j, i));
      bt_columns.emplace_back(ring, std::move(col));
    }
    kernel = module_kernel(bt_columns, ring, b.cols);
  }
  for (const auto& v : kernel)
    if (!rows.contains(v)) return false;
  return true;
}

// {0} in Ass(R^k/M) <=> R^k/M is not torsion <=> rank(A) < k over QQ(y).
inline bool has_compactly_supported_solutions(const Operator& a) {
  return generic_rank(a) < a.cols();
}

}  // namespace wavekit

#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wavekit/polynomial.hpp"

namespace wavekit {

// An l x k matrix of polynomials in the frequency variables y_1..y_n, all
// nonzero entries homogeneous of one common degree d (the order of the PDE).
//
// The registry holds the Y block only; amplitude variable names (z_1..z_k by
// default) are carried along so pipelines and displays agree on naming.
class Operator {
 public:
  Operator(RingPtr frequency_ring, size_t rows, size_t cols, std::vector<Polynomial> entries,
           std::vector<std::string> amplitude_names = {})
      : ring_(std::move(frequency_ring)),
        rows_(rows),
        cols_(cols),
        entries_(std::move(entries)),
        amp_names_(std::move(amplitude_names)) {
    if (rows_ == 0 || cols_ == 0) throw UsageError("operator with zero dimension");
    if (entries_.size() != rows_ * cols_) throw UsageError("operator entry count mismatch");
    if (ring_->block_indices(Block::Y).size() != ring_->size())
      throw UsageError("operator registry must contain frequency variables only");
    degree_ = -1;
    for (const auto& e : entries_) {
      require_same_ring(e.ring(), ring_, "operator entry");
      if (e.is_zero()) continue;
      auto d = e.homogeneous_degree();
      if (!d) throw UsageError("operator entry is not homogeneous: " + e.str());
      if (degree_ == -1) degree_ = *d;
      else if (degree_ != *d)
        throw UsageError("operator entries have mixed degrees");
    }
    if (degree_ == -1) degree_ = 1;  // zero operator; any degree fits
    if (amp_names_.empty()) {
      for (size_t j = 1; j <= cols_; ++j) amp_names_.push_back("z" + std::to_string(j));
    }
    if (amp_names_.size() != cols_) throw UsageError("amplitude name count mismatch");
    for (const auto& nm : amp_names_) {
      if (nm.empty()) throw UsageError("empty amplitude name");
      if (ring_->has(nm)) throw UsageError("amplitude name collides with frequency variable: " + nm);
    }
    for (size_t a = 0; a < amp_names_.size(); ++a)
      for (size_t b = a + 1; b < amp_names_.size(); ++b)
        if (amp_names_[a] == amp_names_[b])
          throw UsageError("duplicate amplitude name: " + amp_names_[a]);
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t n() const { return ring_->size(); }
  int order() const { return degree_; }  // the common degree d
  const RingPtr& frequency_ring() const { return ring_; }
  const std::vector<std::string>& amplitude_names() const { return amp_names_; }

  const Polynomial& entry(size_t i, size_t j) const { return entries_.at(i * cols_ + j); }
  const std::vector<Polynomial>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  bool has_default_amplitude_names() const {
    for (size_t j = 0; j < cols_; ++j)
      if (amp_names_[j] != "z" + std::to_string(j + 1)) return false;
    return true;
  }

  // Operator file format (parse/emit round-trips). The amplitudes header is
  // emitted only when the names differ from the default z1..zk.
  std::string str() const {
    std::ostringstream os;
    os << "ring";
    for (const auto& nm : ring_->names()) os << " " << nm;
    os << "\n";
    os << "matrix " << rows_ << " " << cols_ << "\n";
    if (!has_default_amplitude_names()) {
      os << "amplitudes";
      for (const auto& nm : amp_names_) os << " " << nm;
      os << "\n";
    }
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) {
        if (j) os << ", ";
        os << entry(i, j).str();
      }
      os << "\n";
    }
    return os.str();
  }

  friend bool operator==(const Operator& a, const Operator& b) {
    return same_ring(a.ring_, b.ring_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_ && a.amp_names_ == b.amp_names_;
  }

 private:
  RingPtr ring_;
  size_t rows_, cols_;
  int degree_;
  std::vector<Polynomial> entries_;
  std::vector<std::string> amp_names_;
};

// Matrix whose columns are syzygies of an operator: A * B = 0 identically.
struct SyzygyMatrix {
  RingPtr ring;
  size_t rows = 0;  // k
  size_t cols = 0;  // k' (number of generating syzygies; may be 0)
  std::vector<Polynomial> entries;

  const Polynomial& entry(size_t i, size_t j) const { return entries.at(i * cols + j); }
  std::vector<Polynomial> column(size_t j) const {
    std::vector<Polynomial> col;
    col.reserve(rows);
    for (size_t i = 0; i < rows; ++i) col.push_back(entry(i, j));
    return col;
  }
};

}  // namespace wavekit

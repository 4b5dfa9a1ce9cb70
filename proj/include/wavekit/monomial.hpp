#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "wavekit/error.hpp"
#include "wavekit/ring.hpp"

namespace wavekit {

// Exponent vector over a registry, with the total degree cached.
// Storage comparison (operator<) is plain lexicographic on the exponent
// vector; it fixes a container order only. Semantic term orders live in
// MonomialOrder.
class Monomial {
 public:
  explicit Monomial(size_t nvars) : exp_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<int> exps)
      : exp_(std::move(exps)), deg_(std::accumulate(exp_.begin(), exp_.end(), 0)) {
    for (int e : exp_)
      if (e < 0) throw UsageError("negative exponent");
  }

  size_t nvars() const { return exp_.size(); }
  int degree() const { return deg_; }
  int operator[](size_t i) const { return exp_[i]; }
  const std::vector<int>& exponents() const { return exp_; }
  bool is_one() const { return deg_ == 0; }

  void set(size_t i, int e) {
    if (e < 0) throw UsageError("negative exponent");
    deg_ += e - exp_[i];
    exp_[i] = e;
  }

  int degree_in(const std::vector<size_t>& vars) const {
    int d = 0;
    for (size_t i : vars) d += exp_[i];
    return d;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.exp_.size());
    for (size_t i = 0; i < a.exp_.size(); ++i) r.exp_[i] = a.exp_[i] + b.exp_[i];
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  bool divides(const Monomial& other) const {
    if (deg_ > other.deg_) return false;
    for (size_t i = 0; i < exp_.size(); ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  // this / d, requires d | this.
  Monomial divided_by(const Monomial& d) const {
    Monomial r(exp_.size());
    for (size_t i = 0; i < exp_.size(); ++i) {
      r.exp_[i] = exp_[i] - d.exp_[i];
      if (r.exp_[i] < 0) throw UsageError("monomial division not exact");
    }
    r.deg_ = deg_ - d.deg_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.exp_.size());
    int deg = 0;
    for (size_t i = 0; i < a.exp_.size(); ++i) {
      r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      deg += r.exp_[i];
    }
    r.deg_ = deg;
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exp_.size(); ++i)
      if (a.exp_[i] > 0 && b.exp_[i] > 0) return false;
    return true;
  }

  // Restriction to a variable subset (exponents elsewhere zeroed).
  Monomial restricted_to(const std::vector<size_t>& vars) const {
    Monomial r(exp_.size());
    for (size_t i : vars) r.set(i, exp_[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exp_ != b.exp_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exp_ < b.exp_; }

 private:
  std::vector<int> exp_;
  int deg_;
};

}  // namespace wavekit

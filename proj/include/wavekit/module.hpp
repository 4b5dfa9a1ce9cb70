#pragma once

#include <utility>
#include <vector>

#include "wavekit/groebner.hpp"

namespace wavekit {

// Element of a free module R^k: a fixed-length coordinate vector of
// polynomials over one registry.
class FreeModuleElement {
 public:
  FreeModuleElement(RingPtr ring, std::vector<Polynomial> coords)
      : ring_(std::move(ring)), coords_(std::move(coords)) {
    if (coords_.empty()) throw UsageError("module element of rank zero");
    for (const auto& c : coords_) require_same_ring(c.ring(), ring_, "module element");
  }

  static FreeModuleElement zero(const RingPtr& ring, size_t rank) {
    return FreeModuleElement(ring, std::vector<Polynomial>(rank, Polynomial::zero(ring)));
  }

  static FreeModuleElement basis_vector(const RingPtr& ring, size_t rank, size_t i) {
    auto e = zero(ring, rank);
    e.coords_[i] = Polynomial::constant(ring, 1);
    return e;
  }

  size_t rank() const { return coords_.size(); }
  const RingPtr& ring() const { return ring_; }
  const Polynomial& coord(size_t i) const { return coords_[i]; }
  const std::vector<Polynomial>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b) {
    return same_ring(a.ring_, b.ring_) && a.coords_ == b.coords_;
  }

  FreeModuleElement& operator+=(const FreeModuleElement& o) {
    check_compatible(o);
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  FreeModuleElement& operator-=(const FreeModuleElement& o) {
    check_compatible(o);
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend FreeModuleElement operator+(FreeModuleElement a, const FreeModuleElement& b) {
    return a += b;
  }
  friend FreeModuleElement operator-(FreeModuleElement a, const FreeModuleElement& b) {
    return a -= b;
  }
  friend FreeModuleElement operator*(const Polynomial& s, const FreeModuleElement& v) {
    std::vector<Polynomial> c;
    c.reserve(v.rank());
    for (const auto& x : v.coords_) c.push_back(s * x);
    return FreeModuleElement(v.ring_, std::move(c));
  }

 private:
  void check_compatible(const FreeModuleElement& o) const {
    require_same_ring(ring_, o.ring_, "module arithmetic");
    if (coords_.size() != o.coords_.size()) throw UsageError("module rank mismatch");
  }

  RingPtr ring_;
  std::vector<Polynomial> coords_;
};

namespace detail {

inline EPoly to_epoly(const FreeModuleElement& v, const ModuleOrder& o, int comp_offset = 0) {
  std::vector<ETerm> ts;
  mpz_class den = 1;
  for (size_t i = 0; i < v.rank(); ++i)
    for (const auto& [m, c] : v.coord(i).terms()) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
      den = l;
    }
  for (size_t i = 0; i < v.rank(); ++i)
    for (const auto& [m, c] : v.coord(i).terms())
      ts.push_back({static_cast<int>(i) + comp_offset, m, c.numerator() * (den / c.denominator())});
  return e_normalize(std::move(ts), o);
}

inline FreeModuleElement from_epoly_module(const EPoly& e, const RingPtr& ring, size_t rank,
                                           int comp_offset = 0) {
  std::vector<Polynomial> coords(rank, Polynomial::zero(ring));
  for (const ETerm& t : e)
    coords.at(static_cast<size_t>(t.comp - comp_offset)).add_term(t.mono, Rational(t.coef));
  return FreeModuleElement(ring, std::move(coords));
}

}  // namespace detail

// Groebner basis of a submodule of R^rank. Elements are kept primitive
// (integer coefficients, positive leading coefficient), sorted ascending by
// leading (position, monomial).
class SubmoduleBasis {
 public:
  SubmoduleBasis(RingPtr ring, size_t rank, ModuleOrder order, std::vector<FreeModuleElement> basis)
      : ring_(std::move(ring)), rank_(rank), order_(std::move(order)), basis_(std::move(basis)) {}

  const RingPtr& ring() const { return ring_; }
  size_t rank() const { return rank_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<FreeModuleElement>& basis() const { return basis_; }

  bool contains(const FreeModuleElement& v) const {
    if (v.rank() != rank_) throw UsageError("module rank mismatch in membership");
    if (v.is_zero()) return true;
    if (basis_.empty()) return false;
    std::vector<detail::EPoly> eb;
    eb.reserve(basis_.size());
    for (const auto& g : basis_) eb.push_back(detail::to_epoly(g, order_));
    return detail::e_reduce(detail::to_epoly(v, order_), eb, order_).empty();
  }

  // Normal form up to a positive scalar (primitive integer representative).
  FreeModuleElement normal_form(const FreeModuleElement& v) const {
    if (v.rank() != rank_) throw UsageError("module rank mismatch in normal form");
    std::vector<detail::EPoly> eb;
    eb.reserve(basis_.size());
    for (const auto& g : basis_) eb.push_back(detail::to_epoly(g, order_));
    detail::EPoly r = detail::e_reduce(detail::to_epoly(v, order_), eb, order_);
    return detail::from_epoly_module(r, ring_, rank_);
  }

 private:
  RingPtr ring_;
  size_t rank_;
  ModuleOrder order_;
  std::vector<FreeModuleElement> basis_;
};

inline SubmoduleBasis module_buchberger(const std::vector<FreeModuleElement>& gens,
                                        const RingPtr& ring, size_t rank,
                                        ModuleOrder order = ModuleOrder::pot()) {
  std::vector<detail::EPoly> egens;
  egens.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.rank() != rank) throw UsageError("module generator rank mismatch");
    require_same_ring(g.ring(), ring, "module generator");
    egens.push_back(detail::to_epoly(g, order));
  }
  auto eb = detail::e_buchberger(std::move(egens), order, static_cast<int>(rank));
  std::vector<FreeModuleElement> basis;
  basis.reserve(eb.size());
  for (const auto& e : eb) basis.push_back(detail::from_epoly_module(e, ring, rank));
  return SubmoduleBasis(ring, rank, std::move(order), std::move(basis));
}

inline bool module_membership(const FreeModuleElement& v, const SubmoduleBasis& basis) {
  return basis.contains(v);
}

// Generators of the kernel of the map R^m -> R^k sending e_j to images[j].
// Standard elimination: compute a POT Groebner basis of the graph elements
// (images[j], e_j) in R^k (+) R^m; basis elements supported entirely on the
// tag block project to kernel generators.
inline std::vector<FreeModuleElement> module_kernel(const std::vector<FreeModuleElement>& images,
                                                    const RingPtr& ring, size_t k,
                                                    const MonomialOrder& mono =
                                                        MonomialOrder::grevlex()) {
  size_t m = images.size();
  ModuleOrder order = ModuleOrder::pot(mono);
  std::vector<detail::EPoly> gens;
  gens.reserve(m);
  for (size_t j = 0; j < m; ++j) {
    const auto& img = images[j];
    if (img.rank() != k) throw UsageError("kernel image rank mismatch");
    require_same_ring(img.ring(), ring, "kernel image");
    std::vector<Polynomial> coords = img.coords();
    coords.resize(k + m, Polynomial::zero(ring));
    coords[k + j] = Polynomial::constant(ring, 1);
    gens.push_back(detail::to_epoly(FreeModuleElement(ring, std::move(coords)), order));
  }
  auto eb = detail::e_buchberger(std::move(gens), order, static_cast<int>(k + m));
  std::vector<FreeModuleElement> kernel;
  for (const auto& e : eb) {
    if (e.empty()) continue;
    if (e.front().comp >= static_cast<int>(k))  // POT: whole element is in the tag block
      kernel.push_back(detail::from_epoly_module(e, ring, m, static_cast<int>(k)));
  }
  return kernel;
}

}  // namespace wavekit

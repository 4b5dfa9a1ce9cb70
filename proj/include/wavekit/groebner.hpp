#pragma once

#include <utility>
#include <vector>

#include "wavekit/gb_engine.hpp"
#include "wavekit/polynomial.hpp"

namespace wavekit {

namespace detail {

// Clear denominators: the engine works with integer coefficients.
inline EPoly to_epoly(const Polynomial& p, const ModuleOrder& o, int comp = 0) {
  mpz_class den = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    den = l;
  }
  std::vector<ETerm> ts;
  ts.reserve(p.term_count());
  for (const auto& [m, c] : p.terms())
    ts.push_back({comp, m, c.numerator() * (den / c.denominator())});
  return e_normalize(std::move(ts), o);
}

inline Polynomial from_epoly(const EPoly& e, const RingPtr& ring) {
  Polynomial p(ring);
  for (const ETerm& t : e) p.add_term(t.mono, Rational(t.coef));
  return p;
}

}  // namespace detail

// Finitely generated ideal in a registry. Generators are kept nonzero and
// deduplicated; the generating set itself is otherwise arbitrary — the
// reduced Groebner basis is the canonical form.
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}

  Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
      require_same_ring(g.ring(), ring_, "ideal generator");
      if (g.is_zero()) continue;
      bool dup = false;
      for (const auto& h : gens_)
        if (h == g) {
          dup = true;
          break;
        }
      if (!dup) gens_.push_back(std::move(g));
    }
  }

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
  static Ideal unit(const RingPtr& ring) {
    return Ideal(ring, {Polynomial::constant(ring, 1)});
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

// Remainder and quotients of multivariate division: p = sum q_i * d_i + r,
// no term of r divisible by any leading monomial of the divisors.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

inline DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors,
                             const MonomialOrder& order) {
  DivisionResult res{std::vector<Polynomial>(), Polynomial::zero(p.ring())};
  res.quotients.reserve(divisors.size());
  for (size_t i = 0; i < divisors.size(); ++i) res.quotients.push_back(Polynomial::zero(p.ring()));

  std::vector<std::pair<Monomial, Rational>> leads;
  leads.reserve(divisors.size());
  for (const auto& d : divisors) {
    require_same_ring(d.ring(), p.ring(), "division");
    if (d.is_zero()) throw UsageError("division by zero polynomial");
    leads.push_back(d.leading_term(order));
  }

  Polynomial h = p;
  while (!h.is_zero()) {
    auto [lm, lc] = h.leading_term(order);
    bool hit = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (leads[i].first.divides(lm)) {
        Rational c = lc / leads[i].second;
        Monomial m = lm.divided_by(leads[i].first);
        Polynomial t = Polynomial::term(p.ring(), m, c);
        res.quotients[i] += t;
        h -= t * divisors[i];
        hit = true;
        break;
      }
    }
    if (!hit) {
      Polynomial t = Polynomial::term(p.ring(), lm, lc);
      res.remainder += t;
      h -= t;
    }
  }
  return res;
}

// Exact quotient p / q; throws if the division leaves a remainder.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw UsageError("exact division by zero");
  if (p.is_zero()) return p;
  DivisionResult r = divide(p, {q}, MonomialOrder::grevlex());
  if (!r.remainder.is_zero()) throw UsageError("division is not exact");
  return r.quotients[0];
}

// Groebner basis of an ideal under a fixed order. When reduced, the basis is
// the canonical one: monic generators, fully interreduced, sorted ascending
// by leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Ideal ideal, MonomialOrder order, std::vector<Polynomial> basis, bool reduced)
      : ideal_(std::move(ideal)),
        order_(std::move(order)),
        basis_(std::move(basis)),
        reduced_(reduced) {}

  const Ideal& ideal() const { return ideal_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  bool is_reduced() const { return reduced_; }
  const RingPtr& ring() const { return ideal_.ring(); }

  Polynomial normal_form(const Polynomial& p) const {
    if (basis_.empty()) return p;
    return divide(p, basis_, order_).remainder;
  }

  bool contains(const Polynomial& p) const {
    if (p.is_zero()) return true;
    if (basis_.empty()) return false;
    ModuleOrder mo{ModuleOrder::Layout::POT, order_};
    std::vector<detail::EPoly> eb;
    eb.reserve(basis_.size());
    for (const auto& g : basis_) eb.push_back(detail::to_epoly(g, mo));
    return detail::e_reduce(detail::to_epoly(p, mo), eb, mo).empty();
  }

  // Canonical integer-primitive scaling of the basis, for emission and for
  // ideal equality checks.
  std::vector<Polynomial> canonical_basis() const {
    std::vector<Polynomial> out;
    out.reserve(basis_.size());
    for (const auto& g : basis_) out.push_back(g.canonicalized());
    return out;
  }

 private:
  Ideal ideal_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  bool reduced_;
};

// Buchberger's algorithm; the result is always the reduced (canonical)
// basis. Empty generator lists give the zero ideal with an empty basis.
inline GroebnerBasis buchberger(const Ideal& ideal,
                                const MonomialOrder& order = MonomialOrder::grevlex()) {
  ModuleOrder mo{ModuleOrder::Layout::POT, order};
  std::vector<detail::EPoly> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(detail::to_epoly(g, mo));
  std::vector<detail::EPoly> eb = detail::e_buchberger(std::move(gens), mo, /*rank=*/1);
  std::vector<Polynomial> basis;
  basis.reserve(eb.size());
  for (const auto& e : eb) basis.push_back(detail::from_epoly(e, ideal.ring()).monic(order));
  return GroebnerBasis(ideal, order, std::move(basis), true);
}

inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                const MonomialOrder& order = MonomialOrder::grevlex()) {
  return buchberger(Ideal(ring, gens), order);
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  require_same_ring(p.ring(), gb.ring(), "normal form");
  return gb.normal_form(p);
}

// Canonical generator list of an ideal: the reduced GB, integer-primitive.
inline std::vector<Polynomial> canonical_generators(
    const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex()) {
  return buchberger(ideal, order).canonical_basis();
}

inline bool ideal_equal(const Ideal& a, const Ideal& b,
                        const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (!same_ring(a.ring(), b.ring())) return false;
  return canonical_generators(a, order) == canonical_generators(b, order);
}

// Mutual membership of generators (set-theoretic equality up to saturation
// differences is NOT implied; this is containment both ways of the given
// generating sets).
inline bool mutually_contained(const Ideal& a, const Ideal& b,
                               const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (!same_ring(a.ring(), b.ring())) return false;
  GroebnerBasis ga = buchberger(a, order);
  GroebnerBasis gb = buchberger(b, order);
  for (const auto& g : b.generators())
    if (!ga.contains(g)) return false;
  for (const auto& g : a.generators())
    if (!gb.contains(g)) return false;
  return true;
}

}  // namespace wavekit

#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wavekit/monomial.hpp"
#include "wavekit/order.hpp"
#include "wavekit/rational.hpp"
#include "wavekit/ring.hpp"

namespace wavekit {

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no zero coefficients are stored; equality is term-map equality.
// Storage is order-agnostic (see Monomial); term orders are applied lazily
// by the Groebner machinery.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw UsageError("polynomial without ring");
  }

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.ring_->size()), c);
    return p;
  }

  static Polynomial variable(const RingPtr& ring, size_t index, int exp = 1) {
    if (index >= ring->size()) throw UsageError("variable index out of range");
    Polynomial p(ring);
    if (exp < 0) throw UsageError("negative exponent");
    Monomial m(ring->size());
    m.set(index, exp);
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
  }

  static Polynomial variable(const RingPtr& ring, std::string_view name, int exp = 1) {
    long i = ring->index_of(name);
    if (i < 0) throw UsageError("unknown variable: " + std::string(name));
    return variable(ring, static_cast<size_t>(i), exp);
  }

  static Polynomial term(RingPtr ring, Monomial m, const Rational& c) {
    Polynomial p(std::move(ring));
    if (m.nvars() != p.ring_->size()) throw UsageError("monomial size mismatch");
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw UsageError("not a constant polynomial");
    return terms_.begin()->second;
  }

  // Max total degree over terms; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  int degree_in(Block b) const {
    const auto& vars = ring_->block_indices(b);
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(vars));
    return d;
  }

  // Common degree of all terms within the given block, if there is one.
  // The zero polynomial is homogeneous of every degree; we report 0.
  std::optional<int> homogeneous_degree_in(Block b) const {
    const auto& vars = ring_->block_indices(b);
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      int dm = m.degree_in(vars);
      if (!d) d = dm;
      else if (*d != dm) return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
  }

  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      if (!d) d = m.degree();
      else if (*d != m.degree()) return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_, "polynomial addition");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_, "polynomial subtraction");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_, "polynomial multiplication");
    Polynomial r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : p.terms_) r.terms_.emplace(m, c * k);
    return r;
  }
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

  Polynomial pow(int e) const {
    if (e < 0) throw UsageError("negative power");
    Polynomial r = constant(ring_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Ring homomorphism determined by images of some variables; variables
  // without an image must exist in the target registry and map to themselves.
  // All images must live in `target`.
  Polynomial substitute(const std::map<size_t, Polynomial>& images, const RingPtr& target) const {
    for (const auto& [i, img] : images) {
      if (i >= ring_->size()) throw UsageError("unknown variable in substitution");
      require_same_ring(img.ring(), target, "substitution image");
    }
    Polynomial result(target);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(target, c);
      for (size_t i = 0; i < ring_->size() && !t.is_zero(); ++i) {
        int e = m[i];
        if (e == 0) continue;
        auto it = images.find(i);
        if (it != images.end()) {
          t = t * it->second.pow(e);
        } else {
          long j = target->index_of(ring_->name(i));
          if (j < 0)
            throw UsageError("variable " + ring_->name(i) + " missing from substitution target");
          t = t * variable(target, static_cast<size_t>(j), e);
        }
      }
      result += t;
    }
    return result;
  }

  // Rename into another registry by variable name (every variable that
  // actually occurs must exist in the target).
  Polynomial transport(const RingPtr& target) const {
    if (same_ring(ring_, target)) {
      Polynomial copy = *this;
      return copy;
    }
    std::vector<long> map(ring_->size(), -1);
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
      Monomial mt(target->size());
      for (size_t i = 0; i < ring_->size(); ++i) {
        if (m[i] == 0) continue;
        if (map[i] < 0) {
          map[i] = target->index_of(ring_->name(i));
          if (map[i] < 0)
            throw UsageError("variable " + ring_->name(i) + " missing from target registry");
        }
        mt.set(static_cast<size_t>(map[i]), m[i]);
      }
      r.add_term(std::move(mt), c);
    }
    return r;
  }

  // Decompose p = sum of (monomial in `b`-variables) * (coefficient free of
  // them). Pairs are returned with block monomials in descending grevlex.
  std::vector<std::pair<Monomial, Polynomial>> coefficients_in(Block b) const {
    const auto& vars = ring_->block_indices(b);
    std::map<Monomial, Polynomial> groups;
    for (const auto& [m, c] : terms_) {
      Monomial key = m.restricted_to(vars);
      Monomial rest(ring_->size());
      for (size_t i = 0; i < ring_->size(); ++i) rest.set(i, m[i] - key[i]);
      auto it = groups.find(key);
      if (it == groups.end()) it = groups.emplace(key, Polynomial(ring_)).first;
      it->second.add_term(std::move(rest), c);
    }
    std::vector<std::pair<Monomial, Polynomial>> out(groups.begin(), groups.end());
    MonomialOrder g = MonomialOrder::grevlex();
    std::sort(out.begin(), out.end(),
              [&](const auto& x, const auto& y) { return g.greater(x.first, y.first); });
    return out;
  }

  // Leading term under an order; polynomial must be nonzero.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw UsageError("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
  }

  // Scale so coefficients are coprime integers and the grevlex-leading
  // coefficient is positive. Canonical representative of the scalar class.
  Polynomial canonicalized() const {
    if (terms_.empty()) return *this;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : terms_) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
      den_lcm = l;
    }
    for (const auto& [m, c] : terms_) {
      mpz_class n = c.numerator() * (den_lcm / c.denominator());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    auto [lm, lc] = leading_term(MonomialOrder::grevlex());
    if ((lc * scale).sign() < 0) scale = -scale;
    return scale * *this;
  }

  // Monic under the given order.
  Polynomial monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    return leading_term(order).second.inverse() * *this;
  }

  // Canonical text form: terms in descending grevlex, explicit '*' and '^'.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    MonomialOrder g = MonomialOrder::grevlex();
    std::sort(ts.begin(), ts.end(),
              [&](const auto* x, const auto* y) { return g.greater(x->first, y->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : ts) {
      const auto& [m, c] = *t;
      Rational a = c.abs();
      if (first) {
        if (c.sign() < 0) os << "-";
        first = false;
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      bool need_coeff = !a.is_one() || m.is_one();
      if (need_coeff) os << a.str();
      bool prev = need_coeff;
      for (size_t i = 0; i < ring_->size(); ++i) {
        if (m[i] == 0) continue;
        if (prev) os << "*";
        os << ring_->name(i);
        if (m[i] > 1) os << "^" << m[i];
        prev = true;
      }
    }
    return os.str();
  }

  void add_term(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  RingPtr ring_;
  TermMap terms_;
};

}  // namespace wavekit

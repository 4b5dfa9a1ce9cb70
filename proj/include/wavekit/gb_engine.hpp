#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "wavekit/monomial.hpp"
#include "wavekit/order.hpp"

namespace wavekit::detail {

// Internal Buchberger engine. Works on free-module elements with integer
// coefficients (rank 1 recovers the ideal case); all reductions are
// fraction-free with content removal, which is what keeps coefficient growth
// in check over QQ.

struct ETerm {
  int comp;
  Monomial mono;
  mpz_class coef;
};

// Terms sorted strictly descending under the active module order.
using EPoly = std::vector<ETerm>;

inline int e_cmp(const ModuleOrder& o, int ca, const Monomial& ma, int cb, const Monomial& mb) {
  return o.compare(ca, ma, cb, mb);
}

inline mpz_class z_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Divide out the content and make the leading coefficient positive.
inline void e_make_primitive(EPoly& p) {
  if (p.empty()) return;
  mpz_class g = 0;
  for (const ETerm& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.front().coef) < 0) g = -g;
  if (g == 1) return;
  for (ETerm& t : p) t.coef /= g;
}

inline EPoly e_normalize(std::vector<ETerm> ts, const ModuleOrder& o) {
  std::sort(ts.begin(), ts.end(), [&](const ETerm& a, const ETerm& b) {
    return e_cmp(o, a.comp, a.mono, b.comp, b.mono) > 0;
  });
  EPoly out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef += t.coef;
      if (out.back().coef == 0) out.pop_back();
    } else if (t.coef != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// a*p + b*(shift(q) by monomial m); both inputs sorted, result sorted.
inline EPoly e_axpy(const EPoly& p, const mpz_class& a, const EPoly& q, const mpz_class& b,
                    const Monomial& m, const ModuleOrder& o) {
  EPoly out;
  out.reserve(p.size() + q.size());
  size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    if (j >= q.size()) {
      out.push_back({p[i].comp, p[i].mono, a * p[i].coef});
      ++i;
      continue;
    }
    Monomial qm = q[j].mono * m;
    if (i >= p.size()) {
      out.push_back({q[j].comp, std::move(qm), b * q[j].coef});
      ++j;
      continue;
    }
    int c = e_cmp(o, p[i].comp, p[i].mono, q[j].comp, qm);
    if (c > 0) {
      out.push_back({p[i].comp, p[i].mono, a * p[i].coef});
      ++i;
    } else if (c < 0) {
      out.push_back({q[j].comp, std::move(qm), b * q[j].coef});
      ++j;
    } else {
      mpz_class coef = a * p[i].coef + b * q[j].coef;
      if (coef != 0) out.push_back({p[i].comp, std::move(qm), std::move(coef)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full normal form of p against basis, fraction-free. Returns the remainder
// up to a positive scalar (primitive). Zero result <=> membership.
inline EPoly e_reduce(EPoly p, const std::vector<EPoly>& basis, const ModuleOrder& o) {
  EPoly rem;
  size_t pos = 0;  // terms before pos are settled into rem
  while (pos < p.size()) {
    const ETerm& lead = p[pos];
    const EPoly* red = nullptr;
    for (const EPoly& g : basis) {
      if (g.empty()) continue;
      const ETerm& gl = g.front();
      if (gl.comp == lead.comp && gl.mono.divides(lead.mono)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      rem.push_back(std::move(p[pos]));
      ++pos;
      continue;
    }
    const ETerm& gl = red->front();
    mpz_class gamma = z_gcd(gl.coef, lead.coef);
    mpz_class a = gl.coef / gamma;
    mpz_class b = -lead.coef / gamma;
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
    Monomial shift = lead.mono.divided_by(gl.mono);
    EPoly tail(p.begin() + static_cast<long>(pos), p.end());
    p = e_axpy(tail, a, *red, b, shift, o);
    pos = 0;
    if (a != 1)
      for (ETerm& t : rem) t.coef *= a;
  }
  e_make_primitive(rem);
  return rem;
}

// S-pair of two elements with equal leading component: leading terms cancel.
inline EPoly e_spair(const EPoly& f, const EPoly& g, const ModuleOrder& o) {
  const ETerm& lf = f.front();
  const ETerm& lg = g.front();
  Monomial L = Monomial::lcm(lf.mono, lg.mono);
  mpz_class gamma = z_gcd(lf.coef, lg.coef);
  mpz_class a = lg.coef / gamma;
  mpz_class b = -lf.coef / gamma;
  EPoly fs = e_axpy(EPoly{}, 1, f, a, L.divided_by(lf.mono), o);
  return e_axpy(fs, 1, g, b, L.divided_by(lg.mono), o);
}

struct GBPair {
  int i, j;           // indices into basis, i < j
  Monomial lcm;       // lcm of leading monomials
  bool coprime;
};

// Gebauer-Moeller pair bookkeeping: applies Buchberger's product criterion
// (rank-1 only; it is not valid for modules) and the chain criterion.
class PairQueue {
 public:
  PairQueue(const ModuleOrder& o, bool allow_coprime_criterion)
      : order_(&o), coprime_ok_(allow_coprime_criterion),
        pairs_([this](const GBPair& a, const GBPair& b) { return pair_less(a, b); }) {}

  bool empty() const { return pairs_.empty(); }

  GBPair pop() {
    GBPair p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    return p;
  }

  // Add pairs of the new element (index t) against all previous ones.
  void update(const std::vector<EPoly>& basis, int t) {
    const ETerm& lt = basis[t].front();
    std::vector<GBPair> cand;
    for (int i = 0; i < t; ++i) {
      if (basis[i].empty()) continue;
      const ETerm& li = basis[i].front();
      if (li.comp != lt.comp) continue;
      GBPair p{i, t, Monomial::lcm(li.mono, lt.mono), Monomial::coprime(li.mono, lt.mono)};
      cand.push_back(std::move(p));
    }
    // Keep a new pair if its lcm is coprime-trivial or no other new pair's
    // lcm divides it (coprime pairs participate in pruning, then drop out).
    std::vector<GBPair> kept;
    for (size_t a = 0; a < cand.size(); ++a) {
      bool drop = false;
      if (!(coprime_ok_ && cand[a].coprime)) {
        for (size_t b = 0; b < cand.size(); ++b) {
          if (a == b) continue;
          if (cand[b].lcm == cand[a].lcm) {
            // Equal lcms: keep the smallest index only.
            if (b < a) {
              drop = true;
              break;
            }
            continue;
          }
          if (cand[b].lcm.divides(cand[a].lcm)) {
            drop = true;
            break;
          }
        }
      }
      if (!drop) kept.push_back(cand[a]);
    }
    // Chain criterion on old pairs: (i,j) is redundant once lm(t) divides
    // lcm(i,j) and both mixed lcms differ from lcm(i,j).
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const GBPair& p = *it;
      const ETerm& li = basis[p.i].front();
      const ETerm& lj = basis[p.j].front();
      if (lt.comp == li.comp && lt.mono.divides(p.lcm) &&
          Monomial::lcm(li.mono, lt.mono) != p.lcm && Monomial::lcm(lj.mono, lt.mono) != p.lcm) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (auto& p : kept) {
      if (coprime_ok_ && p.coprime) continue;  // product criterion
      pairs_.insert(std::move(p));
    }
  }

 private:
  bool pair_less(const GBPair& a, const GBPair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = order_->mono.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  const ModuleOrder* order_;
  bool coprime_ok_;
  std::set<GBPair, std::function<bool(const GBPair&, const GBPair&)>> pairs_;
};

// Buchberger with normal selection strategy. Returns the reduced basis:
// minimal, interreduced, primitive integer coefficients, positive leading
// coefficients, sorted ascending by leading term.
inline std::vector<EPoly> e_buchberger(std::vector<EPoly> gens, const ModuleOrder& o, int rank) {
  std::vector<EPoly> basis;
  PairQueue queue(o, /*allow_coprime_criterion=*/rank == 1);
  for (EPoly& g : gens) {
    if (g.empty()) continue;
    e_make_primitive(g);
    basis.push_back(std::move(g));
    queue.update(basis, static_cast<int>(basis.size()) - 1);
  }
  while (!queue.empty()) {
    GBPair p = queue.pop();
    EPoly s = e_spair(basis[p.i], basis[p.j], o);
    EPoly r = e_reduce(std::move(s), basis, o);
    if (!r.empty()) {
      basis.push_back(std::move(r));
      queue.update(basis, static_cast<int>(basis.size()) - 1);
    }
  }

  // Minimalize: drop elements whose lead is divisible by another kept lead.
  std::vector<int> idx(basis.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    int c = e_cmp(o, basis[a].front().comp, basis[a].front().mono, basis[b].front().comp,
                  basis[b].front().mono);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<EPoly> minimal;
  for (int i : idx) {
    const ETerm& li = basis[i].front();
    bool dominated = false;
    for (const EPoly& k : minimal) {
      if (k.front().comp == li.comp && k.front().mono.divides(li.mono)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(basis[i]);
  }

  // Interreduce: tails fully reduced against the other elements.
  std::vector<EPoly> reduced = minimal;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<EPoly> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = e_reduce(reduced[i], others, o);
  }
  return reduced;
}

}  // namespace wavekit::detail

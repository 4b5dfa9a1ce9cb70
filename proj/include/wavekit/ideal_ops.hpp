#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wavekit/groebner.hpp"

namespace wavekit {

namespace detail {

inline std::vector<size_t> indices_of_names(const RingPtr& ring,
                                            const std::vector<std::string>& names) {
  std::vector<size_t> out;
  out.reserve(names.size());
  for (const auto& nm : names) {
    long i = ring->index_of(nm);
    if (i < 0) throw UsageError("unknown variable: " + nm);
    out.push_back(static_cast<size_t>(i));
  }
  return out;
}

}  // namespace detail

// I ∩ (subring without the dropped variables): the drop-free elements of a
// block-elimination Groebner basis. The result lives in the shrunken
// registry; its generators are the canonical reduced GB under grevlex there.
inline Ideal eliminate(const Ideal& ideal, const std::vector<size_t>& drop) {
  const RingPtr& ring = ideal.ring();
  for (size_t i : drop)
    if (i >= ring->size()) throw UsageError("eliminate: variable index out of range");
  if (drop.empty()) return Ideal(ring, canonical_generators(ideal));
  std::vector<char> dead(ring->size(), 0);
  size_t distinct = 0;
  for (size_t i : drop) {
    if (!dead[i]) ++distinct;
    dead[i] = 1;
  }
  if (distinct == ring->size()) throw UsageError("eliminate: cannot drop every variable");

  MonomialOrder order = MonomialOrder::block_elimination(ring->size(), drop);
  GroebnerBasis gb = buchberger(ideal, order);
  RingPtr small = ring->without(drop);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis()) {
    bool free_of_drop = true;
    for (const auto& [m, c] : g.terms()) {
      for (size_t i = 0; i < ring->size() && free_of_drop; ++i)
        if (dead[i] && m[i] > 0) free_of_drop = false;
      if (!free_of_drop) break;
    }
    if (free_of_drop) kept.push_back(g.transport(small).canonicalized());
  }
  return Ideal(small, std::move(kept));
}

inline Ideal eliminate_names(const Ideal& ideal, const std::vector<std::string>& names) {
  return eliminate(ideal, detail::indices_of_names(ideal.ring(), names));
}

inline Ideal eliminate_block(const Ideal& ideal, Block b) {
  return eliminate(ideal, ideal.ring()->block_indices(b));
}

// Intersection via the t-trick: eliminate t from t*I + (1-t)*J.
inline Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal intersection");
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  const RingPtr& ring = a.ring();
  std::string tname = ring->fresh_name("t");
  RingPtr ext = ring->extended({{tname, Block::T}});
  Polynomial t = Polynomial::variable(ext, tname);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() + b.generators().size());
  for (const auto& g : a.generators()) gens.push_back(t * g.transport(ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.transport(ext));
  return eliminate_names(Ideal(ext, std::move(gens)), {tname});
}

// Ideal quotient (I : f) = { g : g*f in I }, computed as (I ∩ <f>) / f.
inline Ideal quotient(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw UsageError("ideal quotient by zero polynomial");
  require_same_ring(ideal.ring(), f.ring(), "ideal quotient");
  if (ideal.is_zero()) return Ideal::zero(ideal.ring());
  Ideal cap = intersect(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Polynomial> gens;
  gens.reserve(cap.generators().size());
  for (const auto& g : cap.generators()) gens.push_back(divide_exact(g, f).canonicalized());
  return Ideal(ideal.ring(), canonical_generators(Ideal(ideal.ring(), std::move(gens))));
}

// Principal saturation (I : f^infinity) by the Rabinowitsch trick: adjoin a
// fresh t, add 1 - t*f, eliminate t.
inline Ideal saturate_principal(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw UsageError("saturation by zero polynomial");
  require_same_ring(ideal.ring(), f.ring(), "saturation");
  if (ideal.is_zero()) return Ideal::zero(ideal.ring());
  if (f.is_constant()) return Ideal(ideal.ring(), canonical_generators(ideal));
  const RingPtr& ring = ideal.ring();
  std::string tname = ring->fresh_name("t");
  RingPtr ext = ring->extended({{tname, Block::T}});
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size() + 1);
  for (const auto& g : ideal.generators()) gens.push_back(g.transport(ext));
  gens.push_back(Polynomial::constant(ext, 1) -
                 Polynomial::variable(ext, tname) * f.transport(ext));
  return eliminate_names(Ideal(ext, std::move(gens)), {tname});
}

// (I : J^infinity) — intersection of the principal saturations by the
// generators of J. Stable: saturating the result by J again changes nothing.
inline Ideal saturate(const Ideal& ideal, const Ideal& by) {
  require_same_ring(ideal.ring(), by.ring(), "saturation");
  if (by.is_zero()) throw UsageError("saturation by the zero ideal");
  bool first = true;
  Ideal acc = Ideal::zero(ideal.ring());
  for (const auto& f : by.generators()) {
    Ideal s = saturate_principal(ideal, f);
    acc = first ? s : intersect(acc, s);
    first = false;
  }
  return acc;
}

inline Ideal saturate_by_block(const Ideal& ideal, Block b) {
  std::vector<Polynomial> vars;
  for (size_t i : ideal.ring()->block_indices(b))
    vars.push_back(Polynomial::variable(ideal.ring(), i));
  if (vars.empty()) throw UsageError("saturation block has no variables");
  return saturate(ideal, Ideal(ideal.ring(), std::move(vars)));
}

// Kernel of the ring map psi : k[target] -> k[source]/relations determined by
// images of the target variables. Computed as the graph ideal
// relations + <v - image(v)> in the combined ring, then eliminating all
// source-only variables. A target variable whose name already exists in the
// source registry must map to itself (the variable is shared).
inline Ideal ring_map_kernel(const RingPtr& target_ring,
                             const std::map<size_t, Polynomial>& images,
                             const Ideal& source_relations) {
  const RingPtr& source = source_relations.ring();
  for (size_t v = 0; v < target_ring->size(); ++v)
    if (!images.count(v))
      throw UsageError("ring_map_kernel: no image for target variable " + target_ring->name(v));

  std::vector<std::pair<std::string, Block>> vars;
  for (size_t i = 0; i < source->size(); ++i)
    vars.emplace_back(source->name(i), source->block(i));
  std::vector<std::string> source_only;
  for (size_t i = 0; i < source->size(); ++i)
    if (!target_ring->has(source->name(i))) source_only.push_back(source->name(i));
  for (size_t v = 0; v < target_ring->size(); ++v)
    if (!source->has(target_ring->name(v)))
      vars.emplace_back(target_ring->name(v), target_ring->block(v));
  RingPtr combined = Ring::make(std::move(vars));

  std::vector<Polynomial> gens;
  for (const auto& g : source_relations.generators()) gens.push_back(g.transport(combined));
  for (const auto& [v, img] : images) {
    require_same_ring(img.ring(), source, "ring map image");
    const std::string& name = target_ring->name(v);
    if (source->has(name)) {
      if (img != Polynomial::variable(source, name))
        throw UsageError("shared variable " + name + " must map to itself");
      continue;
    }
    gens.push_back(Polynomial::variable(combined, name) - img.transport(combined));
  }

  Ideal graph(combined, std::move(gens));
  Ideal elim = eliminate_names(graph, source_only);
  std::vector<Polynomial> out;
  out.reserve(elim.generators().size());
  for (const auto& g : elim.generators()) out.push_back(g.transport(target_ring));
  return Ideal(target_ring, std::move(out));
}

// Minimal homogeneous generating set, greedy by ascending degree. Intended
// for (multi)homogeneous ideals, where the count per degree is an invariant.
inline std::vector<Polynomial> minimal_generators(const Ideal& ideal) {
  std::vector<Polynomial> pool = canonical_generators(ideal);
  MonomialOrder g = MonomialOrder::grevlex();
  std::stable_sort(pool.begin(), pool.end(), [&](const Polynomial& x, const Polynomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return g.less(x.leading_term(g).first, y.leading_term(g).first);
  });
  std::vector<Polynomial> kept;
  for (const auto& p : pool) {
    if (kept.empty()) {
      kept.push_back(p);
      continue;
    }
    GroebnerBasis gb = buchberger(Ideal(ideal.ring(), kept));
    if (!gb.contains(p)) kept.push_back(p);
  }
  return kept;
}

}  // namespace wavekit

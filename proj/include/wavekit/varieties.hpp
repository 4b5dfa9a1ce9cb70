#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wavekit/ideal_ops.hpp"
#include "wavekit/linalg.hpp"
#include "wavekit/operator.hpp"
#include "wavekit/plucker.hpp"
#include "wavekit/polymatrix.hpp"
#include "wavekit/syzygy.hpp"

namespace wavekit {

// A saturated ideal cutting out one of the classifying varieties, together
// with its ambient product of projective factors and the pipeline that
// produced it. Generators are the canonical reduced Groebner basis,
// integer-primitive.
struct VarietyIdeal {
  Ideal ideal;
  std::vector<Block> factors;
  std::string pipeline;
  int r = -1;
  std::optional<std::vector<int>> patch;
  std::vector<std::string> saturation_steps;

  // Unit ideal: the variety is empty.
  bool is_unit() const {
    for (const auto& g : ideal.generators())
      if (g.is_constant()) return true;
    return false;
  }
  // Zero ideal: the variety is the whole ambient space.
  bool is_zero_ideal() const { return ideal.is_zero(); }
};

namespace detail {

inline RingPtr yz_ring(const Operator& a) {
  std::vector<std::pair<std::string, Block>> vars;
  for (const auto& nm : a.frequency_ring()->names()) vars.push_back({nm, Block::Y});
  for (const auto& nm : a.amplitude_names()) vars.push_back({nm, Block::Z});
  return Ring::make(std::move(vars));
}

inline RingPtr z_ring(const Operator& a) {
  std::vector<std::pair<std::string, Block>> vars;
  for (const auto& nm : a.amplitude_names()) vars.push_back({nm, Block::Z});
  return Ring::make(std::move(vars));
}

// The l entries of A(y) * z in a registry containing the Y and Z variables.
inline std::vector<Polynomial> incidence_forms(const Operator& a, const RingPtr& ring) {
  std::vector<Polynomial> forms;
  forms.reserve(a.rows());
  for (size_t i = 0; i < a.rows(); ++i) {
    Polynomial e(ring);
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a.entry(i, j).is_zero()) continue;
      e += a.entry(i, j).transport(ring) * Polynomial::variable(ring, a.amplitude_names()[j]);
    }
    forms.push_back(std::move(e));
  }
  return forms;
}

inline Ideal canonicalize(const Ideal& ideal) {
  return Ideal(ideal.ring(), canonical_generators(ideal));
}

}  // namespace detail

// Support of the PDE: the locus in P^{n-1} where rank A(y) <= k-1, cut out
// set-theoretically by the k x k minors, saturated by <y>. Zero ideal when
// the rank never reaches k (the support is everything).
inline VarietyIdeal support_ideal(const Operator& a) {
  const RingPtr& ring = a.frequency_ring();
  VarietyIdeal out{Ideal::zero(ring), {Block::Y}, "support", -1, std::nullopt, {}};
  size_t k = a.cols();
  if (a.rows() < k || generic_rank(a) < k) return out;
  std::vector<size_t> pick(k);
  std::vector<Polynomial> minors;
  std::function<void(size_t, size_t)> rec = [&](size_t from, size_t chosen) {
    if (chosen == k) {
      std::vector<std::vector<Polynomial>> sub;
      sub.reserve(k);
      for (size_t i = 0; i < k; ++i) {
        std::vector<Polynomial> row;
        row.reserve(k);
        for (size_t j = 0; j < k; ++j) row.push_back(a.entry(pick[i], j));
        sub.push_back(std::move(row));
      }
      Polynomial det = detail::bareiss_det(std::move(sub), ring);
      if (!det.is_zero()) minors.push_back(det.canonicalized());
      return;
    }
    if (a.rows() - from < k - chosen) return;
    for (size_t i = from; i < a.rows(); ++i) {
      pick[chosen] = i;
      rec(i + 1, chosen + 1);
    }
  };
  rec(0, 0);
  out.ideal = saturate_by_block(Ideal(ring, std::move(minors)), Block::Y);
  out.saturation_steps = {"(I : <y>^inf)"};
  return out;
}

// Incidence variety I_A = {(y,z) : A(y) z = 0} in P^{n-1} x P^{k-1}; the
// saturated ideal ((<A(y)z> : <y>^inf) : <z>^inf).
inline VarietyIdeal incidence_ideal(const Operator& a) {
  RingPtr ring = detail::yz_ring(a);
  Ideal forms(ring, detail::incidence_forms(a, ring));
  Ideal sat_y = saturate_by_block(forms, Block::Y);
  Ideal sat_yz = saturate_by_block(sat_y, Block::Z);
  return VarietyIdeal{std::move(sat_yz),
                      {Block::Y, Block::Z},
                      "incidence",
                      -1,
                      std::nullopt,
                      {"(I : <y>^inf)", "(I : <z>^inf)"}};
}

namespace detail {

// Symbolic (n-r) x n parametrization matrix S. Without a patch every entry
// is a fresh s_{a,i}; with patch columns J, column J[b] is the b-th identity
// column and only the remaining entries are variables.
struct SMatrix {
  std::vector<std::vector<Polynomial>> entries;  // over some registry
  std::vector<std::pair<std::string, Block>> variables;
};

inline SMatrix build_s_matrix(int m, int n, const std::optional<std::vector<int>>& patch,
                              const RingPtr& ring) {
  SMatrix s;
  s.entries.assign(m, std::vector<Polynomial>(n, Polynomial::zero(ring)));
  std::vector<int> identity_col(n + 1, -1);
  if (patch) {
    for (size_t b = 0; b < patch->size(); ++b) identity_col[(*patch)[b]] = static_cast<int>(b);
  }
  for (int a = 0; a < m; ++a)
    for (int i = 1; i <= n; ++i) {
      if (identity_col[i] >= 0) {
        s.entries[a][i - 1] =
            Polynomial::constant(ring, identity_col[i] == a ? 1 : 0);
      } else {
        s.entries[a][i - 1] =
            Polynomial::variable(ring, "s" + std::to_string(a + 1) + std::to_string(i));
      }
    }
  return s;
}

inline std::vector<std::pair<std::string, Block>> s_variables(
    int m, int n, const std::optional<std::vector<int>>& patch) {
  std::vector<char> is_identity(n + 1, 0);
  if (patch)
    for (int c : *patch) is_identity[c] = 1;
  std::vector<std::pair<std::string, Block>> vars;
  for (int a = 1; a <= m; ++a)
    for (int i = 1; i <= n; ++i)
      if (!is_identity[i])
        vars.push_back({"s" + std::to_string(a) + std::to_string(i), Block::S});
  return vars;
}

inline void validate_patch(const std::optional<std::vector<int>>& patch, int m, int n) {
  if (!patch) return;
  if (static_cast<int>(patch->size()) != m)
    throw UsageError("patch must list exactly n-r column indices");
  std::vector<char> seen(n + 1, 0);
  for (int c : *patch) {
    if (c < 1 || c > n) throw UsageError("patch column index out of range");
    if (seen[c]) throw UsageError("duplicate patch column index");
    seen[c] = 1;
  }
}

// A patched run dehomogenizes the Pluecker block at the chart minor p_J.
// Recover the multihomogeneous ideal of the chart closure: drop the chart
// equation, rehomogenize the p-block with p_J, and saturate by p_J.
inline Ideal close_patch_chart(const Ideal& kernel, const RingPtr& full_ring,
                               const std::string& pj_name) {
  Ideal chart = eliminate_names(kernel, {pj_name});
  long pj = full_ring->index_of(pj_name);
  const auto& pvars = full_ring->block_indices(Block::P);
  std::vector<Polynomial> homog;
  for (const auto& g : chart.generators()) {
    Polynomial gt = g.transport(full_ring);
    int dmax = 0;
    for (const auto& [m, c] : gt.terms()) dmax = std::max(dmax, m.degree_in(pvars));
    Polynomial h(full_ring);
    for (const auto& [m, c] : gt.terms()) {
      Monomial mm = m;
      mm.set(static_cast<size_t>(pj), m[pj] + (dmax - m.degree_in(pvars)));
      h.add_term(std::move(mm), c);
    }
    homog.push_back(std::move(h));
  }
  return saturate_principal(Ideal(full_ring, std::move(homog)),
                            Polynomial::variable(full_ring, static_cast<size_t>(pj)));
}

}  // namespace detail

// Ideal of the wave pair variety P^r_A inside P^{k-1} x Gr(n-r, n), in
// Pluecker coordinates:
//
//   S      <- symbolic (n-r) x n matrix
//   J      <- coefficients of the w-monomials in A(wS) z
//   psi    <- ring map QQ[z,p] -> QQ[z,S]/J,  p_I -> det S_I, z_i -> z_i
//   return ((ker psi : <z>^inf) : <p>^inf)
//
// With a patch the selected columns of S form an identity block; the result
// then describes only the closure of that affine chart of the Grassmannian
// and may miss components meeting {p_patch = 0}.
inline VarietyIdeal wave_pair_ideal(const Operator& a, int r,
                                    std::optional<std::vector<int>> patch = std::nullopt) {
  int n = static_cast<int>(a.n());
  if (r < 0 || r > n - 1) throw PreconditionError("wave pair level r must be in [0, n-1]");
  int m = n - r;
  detail::validate_patch(patch, m, n);
  PlueckerContext ctx = plucker_context(n, r);

  // Working registry: amplitudes, free S entries, w block.
  std::vector<std::pair<std::string, Block>> vars;
  for (const auto& nm : a.amplitude_names()) vars.push_back({nm, Block::Z});
  auto svars = detail::s_variables(m, n, patch);
  vars.insert(vars.end(), svars.begin(), svars.end());
  for (int w = 1; w <= m; ++w) vars.push_back({"w" + std::to_string(w), Block::W});
  RingPtr zsw = Ring::make(vars);

  detail::SMatrix s = detail::build_s_matrix(m, n, patch, zsw);

  // y_i -> (w S)_i
  std::map<size_t, Polynomial> freq_sub;
  for (int i = 0; i < n; ++i) {
    Polynomial img(zsw);
    for (int w = 0; w < m; ++w)
      img += Polynomial::variable(zsw, "w" + std::to_string(w + 1)) * s.entries[w][i];
    freq_sub.emplace(static_cast<size_t>(i), std::move(img));
  }

  std::vector<Polynomial> j_gens;
  for (size_t row = 0; row < a.rows(); ++row) {
    Polynomial e(zsw);
    for (size_t col = 0; col < a.cols(); ++col) {
      if (a.entry(row, col).is_zero()) continue;
      e += a.entry(row, col).substitute(freq_sub, zsw) *
           Polynomial::variable(zsw, a.amplitude_names()[col]);
    }
    for (auto& [wm, coef] : e.coefficients_in(Block::W)) j_gens.push_back(std::move(coef));
  }

  // J lives in the z,s subring.
  std::vector<std::pair<std::string, Block>> zs_vars(vars.begin(), vars.end() - m);
  RingPtr zs = Ring::make(zs_vars);
  std::vector<Polynomial> j_small;
  j_small.reserve(j_gens.size());
  for (const auto& g : j_gens)
    if (!g.is_zero()) j_small.push_back(g.transport(zs));
  Ideal j_ideal(zs, std::move(j_small));

  // Target: z and Pluecker variables.
  std::vector<std::pair<std::string, Block>> target_vars;
  for (const auto& nm : a.amplitude_names()) target_vars.push_back({nm, Block::Z});
  for (size_t v = 0; v < ctx.variable_count(); ++v)
    target_vars.push_back({ctx.variable_name(v), Block::P});
  RingPtr zp = Ring::make(target_vars);

  std::map<size_t, Polynomial> images;
  for (size_t i = 0; i < a.cols(); ++i)
    images.emplace(i, Polynomial::variable(zs, a.amplitude_names()[i]));
  for (size_t v = 0; v < ctx.variable_count(); ++v) {
    const auto& I = ctx.subsets()[v];
    std::vector<std::vector<Polynomial>> sub;
    for (int row = 0; row < m; ++row) {
      std::vector<Polynomial> srow;
      for (int i : I) srow.push_back(s.entries[row][i - 1].transport(zs));
      sub.push_back(std::move(srow));
    }
    images.emplace(a.cols() + v, detail::bareiss_det(std::move(sub), zs));
  }

  Ideal kernel = ring_map_kernel(zp, images, j_ideal);
  std::vector<std::string> steps;
  if (patch) {
    std::vector<int> sorted = *patch;
    std::sort(sorted.begin(), sorted.end());
    kernel = detail::close_patch_chart(kernel, zp, detail::plucker_name(sorted));
    steps.push_back("close patch chart");
  }
  Ideal sat_z = saturate_by_block(kernel, Block::Z);
  Ideal sat_zp = saturate_by_block(sat_z, Block::P);
  steps.push_back("(I : <z>^inf)");
  steps.push_back("(I : <p>^inf)");
  return VarietyIdeal{std::move(sat_zp), {Block::Z, Block::P}, "wavepair", r, std::move(patch),
                      std::move(steps)};
}

// Level r wave variety W^r_A in P^{k-1}: eliminate the Pluecker variables
// from the wave pair ideal, then saturate by <z>.
inline VarietyIdeal wave_ideal(const Operator& a, int r) {
  VarietyIdeal wp = wave_pair_ideal(a, r);
  Ideal in_z = eliminate_block(wp.ideal, Block::P);
  Ideal sat = saturate_by_block(in_z, Block::Z);
  auto steps = wp.saturation_steps;
  steps.push_back("eliminate p");
  steps.push_back("(I : <z>^inf)");
  return VarietyIdeal{std::move(sat), {Block::Z}, "wave", r, std::nullopt, std::move(steps)};
}

// Level r obstruction variety O^r_A in P^{k-1}, by the universal-subspace
// elimination: impose y in sigma via the signed Laplace bilinears in (y, p),
// add A(y)z, saturate by <y> and eliminate y; then reduce modulo the
// Pluecker relations of Gr(r, n) and collect the z-coefficients of every
// residual p-monomial; finally saturate by <z>.
inline VarietyIdeal obstruction_ideal(const Operator& a, int r) {
  int n = static_cast<int>(a.n());
  if (r < 1 || r > n) throw PreconditionError("obstruction level r must be in [1, n]");
  PlueckerContext sigma = plucker_context(n, n - r);  // Gr(r, n), |J| = r

  std::vector<std::pair<std::string, Block>> vars;
  for (const auto& nm : a.frequency_ring()->names()) vars.push_back({nm, Block::Y});
  for (const auto& nm : a.amplitude_names()) vars.push_back({nm, Block::Z});
  for (size_t v = 0; v < sigma.variable_count(); ++v)
    vars.push_back({sigma.variable_name(v), Block::P});
  RingPtr yzq = Ring::make(std::move(vars));

  std::vector<Polynomial> gens = detail::incidence_forms(a, yzq);
  // y in sigma: for each (r+1)-subset I, the Laplace expansion along the
  // y-row: sum_t (-1)^t y_{I[t]} p_{I minus I[t]}.
  for (const auto& I : detail::subsets_of_size(n, r + 1)) {
    Polynomial bil(yzq);
    for (size_t t = 0; t < I.size(); ++t) {
      std::vector<int> rest;
      for (size_t u = 0; u < I.size(); ++u)
        if (u != t) rest.push_back(I[u]);
      Polynomial term =
          Polynomial::variable(yzq, a.frequency_ring()->name(static_cast<size_t>(I[t] - 1))) *
          Polynomial::variable(yzq, detail::plucker_name(rest));
      bil += (t % 2 == 0) ? term : -term;
    }
    gens.push_back(std::move(bil));
  }
  Ideal start(yzq, std::move(gens));
  Ideal sat_y = saturate_by_block(start, Block::Y);
  Ideal zq_ideal = eliminate_block(sat_y, Block::Y);

  // "for all p in Gr": reduce modulo G with the p-block dominant, then every
  // z-coefficient of every residual p-monomial must vanish.
  std::vector<Polynomial> reduced;
  if (!sigma.relations().is_zero()) {
    MonomialOrder order = MonomialOrder::block_elimination(
        zq_ideal.ring()->size(), zq_ideal.ring()->block_indices(Block::P));
    std::vector<Polynomial> g_gens;
    for (const auto& g : sigma.relations().generators())
      g_gens.push_back(g.transport(zq_ideal.ring()));
    GroebnerBasis ggb = buchberger(Ideal(zq_ideal.ring(), g_gens), order);
    for (const auto& g : zq_ideal.generators()) reduced.push_back(ggb.normal_form(g));
  } else {
    reduced = zq_ideal.generators();
  }

  RingPtr zr = detail::z_ring(a);
  std::vector<Polynomial> coeffs;
  for (const auto& g : reduced)
    for (auto& [pm, coef] : g.coefficients_in(Block::P))
      if (!coef.is_zero()) coeffs.push_back(coef.transport(zr));
  Ideal sat = saturate_by_block(Ideal(zr, std::move(coeffs)), Block::Z);
  return VarietyIdeal{std::move(sat),
                      {Block::Z},
                      "obstruction",
                      r,
                      std::nullopt,
                      {"(I : <y>^inf)", "eliminate y", "reduce mod G", "(I : <z>^inf)"}};
}

// For d = 1, write A(y) z = C(z) y; C is l x n with entries linear in z.
inline std::vector<std::vector<Polynomial>> first_order_c_matrix(const Operator& a) {
  if (a.order() != 1) throw PreconditionError("C(z) requires a first-order operator (d = 1)");
  RingPtr zr = detail::z_ring(a);
  std::vector<std::vector<Polynomial>> c(a.rows(),
                                         std::vector<Polynomial>(a.n(), Polynomial::zero(zr)));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Polynomial& e = a.entry(i, j);
      for (const auto& [mono, coef] : e.terms()) {
        for (size_t v = 0; v < a.n(); ++v)
          if (mono[v] > 0) {
            c[i][v] += Polynomial::variable(zr, a.amplitude_names()[j]) *
                       Polynomial::constant(zr, coef);
            break;
          }
      }
    }
  return c;
}

// For d = 1,  W^r_A = O^{r+1}_A = { z : rank C(z) <= r } set-theoretically:
// the ideal of (r+1) x (r+1) minors of C(z).
inline VarietyIdeal wave_ideal_first_order(const Operator& a, int r) {
  if (a.order() != 1)
    throw PreconditionError("first-order wave variety requires d = 1");
  if (r < 0) throw PreconditionError("level r must be nonnegative");
  auto c = first_order_c_matrix(a);
  RingPtr zr = detail::z_ring(a);
  size_t size = static_cast<size_t>(r) + 1;
  VarietyIdeal out{Ideal::zero(zr), {Block::Z}, "wave-first-order", r, std::nullopt, {}};
  if (size > a.rows() || size > a.n()) return out;  // rank condition vacuous
  std::vector<Polynomial> minors;
  std::vector<size_t> rpick(size), cpick(size);
  std::function<void(size_t, size_t)> rows_rec = [&](size_t rfrom, size_t rch) {
    if (rch == size) {
      std::function<void(size_t, size_t)> cols_rec = [&](size_t cfrom, size_t cch) {
        if (cch == size) {
          std::vector<std::vector<Polynomial>> sub;
          for (size_t i = 0; i < size; ++i) {
            std::vector<Polynomial> row;
            for (size_t j = 0; j < size; ++j) row.push_back(c[rpick[i]][cpick[j]]);
            sub.push_back(std::move(row));
          }
          Polynomial det = detail::bareiss_det(std::move(sub), zr);
          if (!det.is_zero()) minors.push_back(det.canonicalized());
          return;
        }
        for (size_t j = cfrom; j < a.n(); ++j) {
          cpick[cch] = j;
          cols_rec(j + 1, cch + 1);
        }
      };
      cols_rec(0, 0);
      return;
    }
    for (size_t i = rfrom; i < a.rows(); ++i) {
      rpick[rch] = i;
      rows_rec(i + 1, rch + 1);
    }
  };
  rows_rec(0, 0);
  out.ideal = detail::canonicalize(Ideal(zr, std::move(minors)));
  return out;
}

// Fano_r of the projective variety cut out by homogeneous generators in the
// frequency variables: the Algorithm specialized to k = 1. Returns the ideal
// in the Pluecker coordinates of Gr(n-r, n), saturated by <p>.
inline VarietyIdeal fano_ideal(const std::vector<Polynomial>& generators, const RingPtr& yring,
                               int r, std::optional<std::vector<int>> patch = std::nullopt) {
  int n = static_cast<int>(yring->size());
  if (r < 0 || r > n - 1) throw PreconditionError("Fano level r must be in [0, n-1]");
  for (const auto& g : generators) {
    require_same_ring(g.ring(), yring, "fano generator");
    if (!g.is_zero() && !g.homogeneous_degree())
      throw PreconditionError("Fano generators must be homogeneous");
  }
  int m = n - r;
  detail::validate_patch(patch, m, n);
  PlueckerContext ctx = plucker_context(n, r);

  std::vector<std::pair<std::string, Block>> vars = detail::s_variables(m, n, patch);
  for (int w = 1; w <= m; ++w) vars.push_back({"w" + std::to_string(w), Block::W});
  RingPtr sw = Ring::make(vars);
  detail::SMatrix s = detail::build_s_matrix(m, n, patch, sw);
  std::map<size_t, Polynomial> freq_sub;
  for (int i = 0; i < n; ++i) {
    Polynomial img(sw);
    for (int w = 0; w < m; ++w)
      img += Polynomial::variable(sw, "w" + std::to_string(w + 1)) * s.entries[w][i];
    freq_sub.emplace(static_cast<size_t>(i), std::move(img));
  }

  std::vector<Polynomial> j_gens;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    Polynomial sub = g.substitute(freq_sub, sw);
    for (auto& [wm, coef] : sub.coefficients_in(Block::W)) j_gens.push_back(std::move(coef));
  }

  std::vector<std::pair<std::string, Block>> s_only(vars.begin(), vars.end() - m);
  RingPtr sring = s_only.empty() ? sw : Ring::make(s_only);
  std::vector<Polynomial> j_small;
  for (const auto& g : j_gens)
    if (!g.is_zero()) j_small.push_back(g.transport(sring));

  std::map<size_t, Polynomial> images;
  for (size_t v = 0; v < ctx.variable_count(); ++v) {
    const auto& I = ctx.subsets()[v];
    std::vector<std::vector<Polynomial>> sub;
    for (int row = 0; row < m; ++row) {
      std::vector<Polynomial> srow;
      for (int i : I) srow.push_back(s.entries[row][i - 1].transport(sring));
      sub.push_back(std::move(srow));
    }
    images.emplace(v, detail::bareiss_det(std::move(sub), sring));
  }
  Ideal kernel = ring_map_kernel(ctx.ring(), images, Ideal(sring, std::move(j_small)));
  std::vector<std::string> steps;
  if (patch) {
    std::vector<int> sorted = *patch;
    std::sort(sorted.begin(), sorted.end());
    kernel = detail::close_patch_chart(kernel, ctx.ring(), detail::plucker_name(sorted));
    steps.push_back("close patch chart");
  }
  Ideal sat = saturate_by_block(kernel, Block::P);
  steps.push_back("(I : <p>^inf)");
  return VarietyIdeal{std::move(sat), {Block::P}, "fano", r, std::move(patch), std::move(steps)};
}

// Certificate for a single rational wave pair: u = z and the matrix L of
// linear forms cutting out pi-perp (the support of the waves); pi is the
// rowspace of S. The support basis is the exact nullspace of S.
struct WavePairCertificate {
  bool verified = false;
  std::vector<Rational> amplitude;
  RationalMatrix forms;    // L, one row per linear form; equals S canonicalized
  RationalMatrix support;  // basis of pi-perp
};

inline WavePairCertificate verify_wave_pair(const Operator& a, const std::vector<Rational>& z,
                                            const RationalMatrix& s) {
  size_t n = a.n();
  if (z.size() != a.cols()) throw UsageError("amplitude length must equal k");
  bool all_zero = true;
  for (const auto& c : z)
    if (!c.is_zero()) all_zero = false;
  if (all_zero) throw PreconditionError("amplitude z must be nonzero");
  if (s.empty() || s.size() > n) throw UsageError("S must be a nonempty (n-r) x n matrix");
  for (const auto& row : s)
    if (row.size() != n) throw UsageError("S row length must equal n");
  if (matrix_rank(s) != s.size()) throw PreconditionError("S must have full row rank");

  size_t m = s.size();
  std::vector<std::pair<std::string, Block>> vars;
  for (size_t w = 1; w <= m; ++w) vars.push_back({"w" + std::to_string(w), Block::W});
  RingPtr wring = Ring::make(std::move(vars));
  std::map<size_t, Polynomial> freq_sub;
  for (size_t i = 0; i < n; ++i) {
    Polynomial img(wring);
    for (size_t w = 0; w < m; ++w)
      img += Polynomial::constant(wring, s[w][i]) * Polynomial::variable(wring, w);
    freq_sub.emplace(i, std::move(img));
  }

  WavePairCertificate cert;
  cert.amplitude = z;
  cert.verified = true;
  for (size_t i = 0; i < a.rows() && cert.verified; ++i) {
    Polynomial e(wring);
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a.entry(i, j).is_zero() || z[j].is_zero()) continue;
      e += a.entry(i, j).substitute(freq_sub, wring) * Polynomial::constant(wring, z[j]);
    }
    if (!e.is_zero()) cert.verified = false;
  }
  if (cert.verified) {
    for (const auto& row : s) cert.forms.push_back(primitive_row(row));
    cert.support = nullspace(s, n);
  }
  return cert;
}

}  // namespace wavekit

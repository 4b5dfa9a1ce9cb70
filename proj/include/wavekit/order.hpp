#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wavekit/monomial.hpp"

namespace wavekit {

// Total multiplicative order on monomials. Variable precedence follows
// registry position: the first registered variable is the largest.
//
// Kinds:
//   lex      — pure lexicographic
//   grevlex  — graded reverse lexicographic
//   block    — elimination order: monomials are compared first by their
//              restriction to a distinguished first block of variables
//              (graded, so anything touching the block beats anything free
//              of it), ties broken on the remaining variables.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }

  static MonomialOrder block_elimination(size_t nvars, std::vector<size_t> first_block,
                                         Kind first_kind = Kind::Grevlex,
                                         Kind rest_kind = Kind::Grevlex) {
    if (first_kind == Kind::Block || rest_kind == Kind::Block)
      throw UsageError("nested block orders are not supported");
    MonomialOrder o(Kind::Block);
    o.first_kind_ = first_kind;
    o.rest_kind_ = rest_kind;
    std::vector<char> in_first(nvars, 0);
    for (size_t i : first_block) {
      if (i >= nvars) throw UsageError("block variable index out of range");
      in_first[i] = 1;
    }
    for (size_t i = 0; i < nvars; ++i)
      (in_first[i] ? o.first_ : o.rest_).push_back(i);
    return o;
  }

  Kind kind() const { return kind_; }
  const std::vector<size_t>& first_block() const { return first_; }

  // -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex: return cmp_lex_full(a, b);
      case Kind::Grevlex: return cmp_grevlex_full(a, b);
      case Kind::Block: {
        int c = cmp_on(a, b, first_, first_kind_);
        if (c != 0) return c;
        return cmp_on(a, b, rest_, rest_kind_);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const {
    switch (kind_) {
      case Kind::Lex: return "lex";
      case Kind::Grevlex: return "grevlex";
      case Kind::Block: return "block-elimination";
    }
    return "?";
  }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  static int cmp_lex_full(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.nvars(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }

  static int cmp_grevlex_full(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    // Equal degree: last variable where they differ, smaller exponent wins.
    for (size_t i = a.nvars(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  static int cmp_on(const Monomial& a, const Monomial& b, const std::vector<size_t>& vars,
                    Kind kind) {
    if (kind == Kind::Lex) {
      for (size_t i : vars)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    }
    int da = 0, db = 0;
    for (size_t i : vars) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (size_t k = vars.size(); k-- > 0;) {
      size_t i = vars[k];
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  Kind first_kind_ = Kind::Grevlex;
  Kind rest_kind_ = Kind::Grevlex;
  std::vector<size_t> first_;
  std::vector<size_t> rest_;
};

// Order on free-module terms (component, monomial).
//
// POT (position over term): components decide first, e1 > e2 > ...;
// TOP (term over position): monomials decide first, components break ties.
struct ModuleOrder {
  enum class Layout { POT, TOP };

  Layout layout;
  MonomialOrder mono;

  static ModuleOrder pot(MonomialOrder m = MonomialOrder::grevlex()) {
    return ModuleOrder{Layout::POT, std::move(m)};
  }
  static ModuleOrder top(MonomialOrder m = MonomialOrder::grevlex()) {
    return ModuleOrder{Layout::TOP, std::move(m)};
  }

  int compare(int comp_a, const Monomial& ma, int comp_b, const Monomial& mb) const {
    if (layout == Layout::POT) {
      if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;  // e1 largest
      return mono.compare(ma, mb);
    }
    int c = mono.compare(ma, mb);
    if (c != 0) return c;
    if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
    return 0;
  }
};

}  // namespace wavekit

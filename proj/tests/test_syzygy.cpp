#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "wavekit/builtin.hpp"
#include "wavekit/parse.hpp"
#include "wavekit/syzygy.hpp"

using namespace wavekit;

namespace {

// A * B as a polynomial matrix; zero iff every entry vanishes.
bool product_is_zero(const Operator& a, const SyzygyMatrix& b) {
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < b.cols; ++j) {
      Polynomial e(a.frequency_ring());
      for (size_t m = 0; m < a.cols(); ++m) e += a.entry(i, m) * b.entry(m, j);
      if (!e.is_zero()) return false;
    }
  return true;
}

// Test-local determinant by cofactor expansion (independent of Bareiss).
Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
  size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return m[0][0];
  Polynomial det(ring);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * cofactor_det(sub, ring);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

// Brute-force rank: largest m with a nonvanishing m x m minor.
size_t minor_rank(const Operator& a) {
  size_t maxm = std::min(a.rows(), a.cols());
  for (size_t m = maxm; m >= 1; --m) {
    std::vector<size_t> rsel(m), csel(m);
    bool found = false;
    std::function<void(size_t, size_t)> rows_rec = [&](size_t rf, size_t rc) {
      if (found) return;
      if (rc == m) {
        std::function<void(size_t, size_t)> cols_rec = [&](size_t cf, size_t cc) {
          if (found) return;
          if (cc == m) {
            std::vector<std::vector<Polynomial>> sub;
            for (size_t i = 0; i < m; ++i) {
              std::vector<Polynomial> row;
              for (size_t j = 0; j < m; ++j) row.push_back(a.entry(rsel[i], csel[j]));
              sub.push_back(std::move(row));
            }
            if (!cofactor_det(sub, a.frequency_ring()).is_zero()) found = true;
            return;
          }
          for (size_t j = cf; j < a.cols(); ++j) {
            csel[cc] = j;
            cols_rec(j + 1, cc + 1);
          }
        };
        cols_rec(0, 0);
        return;
      }
      for (size_t i = rf; i < a.rows(); ++i) {
        rsel[rc] = i;
        rows_rec(i + 1, rc + 1);
      }
    };
    rows_rec(0, 0);
    if (found) return m;
  }
  return 0;
}

Operator reference_skew_matrix_operator() {
  // Skew matrix B of the running 2x4 example.
  auto R = detail::y_ring(3);
  auto e = [&](const char* s) { return parse_polynomial(s, R); };
  std::vector<Polynomial> entries = {
      e("0"),             e("-y3^2"),  e("y2*y3"),  e("y1*y3 - y2^2"),
      e("y3^2"),          e("0"),      e("-y1*y3"), e("y1*y2"),
      e("-y2*y3"),        e("y1*y3"),  e("0"),      e("-y1^2"),
      e("y2^2 - y1*y3"),  e("-y1*y2"), e("y1^2"),   e("0")};
  return Operator(R, 4, 4, entries);
}

}  // namespace

TEST_CASE("syzygies of div") {
  auto R = Ring::make({{"y1", Block::Y}, {"y2", Block::Y}});
  Operator div(R, 1, 2, {parse_polynomial("y1", R), parse_polynomial("y2", R)});
  SyzygyMatrix b = syzygies(div);
  REQUIRE(b.cols == 1);
  // single column (-y2, y1), up to sign and scale
  auto c0 = b.entry(0, 0), c1 = b.entry(1, 0);
  bool plus = c0 == parse_polynomial("-y2", R) && c1 == parse_polynomial("y1", R);
  bool minus = c0 == parse_polynomial("y2", R) && c1 == parse_polynomial("-y1", R);
  CHECK((plus || minus));
  CHECK(product_is_zero(div, b));
}

TEST_CASE("syzygies of the 2x4 operator span the classical skew matrix") {
  Operator a = builtin_operator("ex1.1");
  SyzygyMatrix b = syzygies(a);
  CHECK(product_is_zero(a, b));

  // column span over the fraction field has rank 2
  Operator b_as_op(a.frequency_ring(), b.rows, b.cols, b.entries);
  CHECK(generic_rank(b_as_op) == 2);

  // every column of the classical skew matrix lies in the computed module
  Operator refB = reference_skew_matrix_operator();
  std::vector<FreeModuleElement> syz_gens;
  for (size_t j = 0; j < b.cols; ++j)
    syz_gens.emplace_back(a.frequency_ring(), b.column(j));
  auto syz_module = module_buchberger(syz_gens, a.frequency_ring(), a.cols());
  for (size_t j = 0; j < 4; ++j) {
    std::vector<Polynomial> col;
    for (size_t i = 0; i < 4; ++i) col.push_back(refB.entry(i, j));
    CHECK(syz_module.contains(FreeModuleElement(a.frequency_ring(), std::move(col))));
  }
}

TEST_CASE("full-column-rank operators have no syzygies") {
  Operator diag = builtin_operator("diag", {{"n", 2}});
  SyzygyMatrix b = syzygies(diag);
  CHECK(b.cols == 0);
}

TEST_CASE("vector potential decisions") {
  CHECK(admits_vector_potential(builtin_operator("ex1.1")));
  CHECK_FALSE(admits_vector_potential(builtin_operator("ex3.1")));
  // div admits the classic curl potential
  auto R = Ring::make({{"y1", Block::Y}, {"y2", Block::Y}});
  Operator div(R, 1, 2, {parse_polynomial("y1", R), parse_polynomial("y2", R)});
  CHECK(admits_vector_potential(div));
  CHECK_FALSE(admits_vector_potential(builtin_operator("diag", {{"n", 2}})));
}

TEST_CASE("classic vector potentials") {
  // curl admits the gradient potential
  Operator curl = builtin_operator("curl", {{"p", 1}, {"n", 3}});
  SyzygyMatrix b = syzygies(curl);
  REQUIRE(b.cols == 1);
  std::vector<FreeModuleElement> gens = {
      FreeModuleElement(curl.frequency_ring(), b.column(0))};
  auto module = module_buchberger(gens, curl.frequency_ring(), 3);
  const RingPtr& R = curl.frequency_ring();
  FreeModuleElement grad(R, {parse_polynomial("y1", R), parse_polynomial("y2", R),
                             parse_polynomial("y3", R)});
  CHECK(module.contains(grad));
  CHECK(admits_vector_potential(curl));

  // the Saint-Venant operator admits the symmetric gradient potential
  Operator sv = builtin_operator("saintvenant", {{"n", 2}});
  SyzygyMatrix svb = syzygies(sv);
  std::vector<FreeModuleElement> svgens;
  for (size_t j = 0; j < svb.cols; ++j)
    svgens.emplace_back(sv.frequency_ring(), svb.column(j));
  auto svmodule = module_buchberger(svgens, sv.frequency_ring(), 3);
  const RingPtr& R2 = sv.frequency_ring();
  // symmetric gradient columns over amplitudes (z11, z12, z22)
  FreeModuleElement symgrad1(R2, {parse_polynomial("2*y1", R2), parse_polynomial("y2", R2),
                                  parse_polynomial("0", R2)});
  FreeModuleElement symgrad2(R2, {parse_polynomial("0", R2), parse_polynomial("y1", R2),
                                  parse_polynomial("2*y2", R2)});
  CHECK(svmodule.contains(symgrad1));
  CHECK(svmodule.contains(symgrad2));
  CHECK(admits_vector_potential(sv));
}

TEST_CASE("compactly supported solutions") {
  CHECK(has_compactly_supported_solutions(builtin_operator("ex1.1")));
  CHECK(has_compactly_supported_solutions(builtin_operator("ex3.1")));
  CHECK_FALSE(has_compactly_supported_solutions(builtin_operator("diag", {{"n", 2}})));
}

TEST_CASE("generic rank") {
  CHECK(generic_rank(builtin_operator("ex1.1")) == 2);
  CHECK(generic_rank(builtin_operator("ex4.2")) == 3);
  auto R = Ring::make({{"y1", Block::Y}, {"y2", Block::Y}});
  Operator zero(R, 2, 2,
                std::vector<Polynomial>(4, Polynomial::zero(R)));
  CHECK(generic_rank(zero) == 0);
  // det of the 3x3 operator is the nonzero sextic
  Operator a = builtin_operator("ex4.2");
  std::vector<std::vector<Polynomial>> m(3, std::vector<Polynomial>());
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m[i].push_back(a.entry(i, j));
  CHECK(cofactor_det(m, a.frequency_ring()).canonicalized() ==
        parse_polynomial("y1^6 + y2^6 + y3^6 + y1^2*y2^2*y3^2", a.frequency_ring()));
}

TEST_CASE("generic rank agrees with brute-force minors") {
  std::vector<Operator> cases = {builtin_operator("ex1.1"), builtin_operator("ex3.1"),
                                 builtin_operator("ex4.2"), builtin_operator("diag", {{"n", 3}}),
                                 reference_skew_matrix_operator(),
                                 builtin_operator("curl", {{"p", 1}, {"n", 3}})};
  for (const auto& a : cases) CHECK(generic_rank(a) == minor_rank(a));
}

TEST_CASE("A times its syzygy matrix vanishes for every builtin") {
  std::vector<Operator> ops = {builtin_operator("ex1.1"),
                               builtin_operator("ex3.1"),
                               builtin_operator("ex6.2"),
                               builtin_operator("cayley"),
                               builtin_operator("div", {{"p", 2}, {"n", 3}}),
                               builtin_operator("curl", {{"p", 1}, {"n", 3}}),
                               builtin_operator("saintvenant", {{"n", 2}})};
  for (const auto& a : ops) {
    SyzygyMatrix b = syzygies(a);
    CHECK(product_is_zero(a, b));
    // potential implies compact support whenever there are syzygies at all
    if (b.cols >= 1 && admits_vector_potential(a))
      CHECK(has_compactly_supported_solutions(a));
  }
}

#include <catch2/catch_amalgamated.hpp>

#include "wavekit/builtin.hpp"
#include "wavekit/parse.hpp"
#include "wavekit/varieties.hpp"

using namespace wavekit;

namespace {

// Substitute a rational point for the variables of the given blocks and
// check that every generator vanishes.
bool point_on_variety(const VarietyIdeal& v, const std::map<std::string, Rational>& pt) {
  RingPtr one = Ring::make({{"u_", Block::W}});
  for (const auto& g : v.ideal.generators()) {
    std::map<size_t, Polynomial> sub;
    for (size_t i = 0; i < g.ring()->size(); ++i) {
      auto it = pt.find(g.ring()->name(i));
      if (it == pt.end()) return false;
      sub.emplace(i, Polynomial::constant(one, it->second));
    }
    if (!g.substitute(sub, one).is_zero()) return false;
  }
  return true;
}

bool all_generators_multihomogeneous(const VarietyIdeal& v) {
  for (const auto& g : v.ideal.generators())
    for (Block b : v.factors)
      if (!g.homogeneous_degree_in(b)) return false;
  return true;
}

}  // namespace

TEST_CASE("support of the 3x3 second-order operator is the sextic") {
  VarietyIdeal s = support_ideal(builtin_operator("ex4.2"));
  REQUIRE(s.ideal.generators().size() == 1);
  CHECK(s.ideal.generators()[0] ==
        parse_polynomial("y1^6 + y2^6 + y3^6 + y1^2*y2^2*y3^2", s.ideal.ring()));
  CHECK(all_generators_multihomogeneous(s));
}

TEST_CASE("wide operators have full support") {
  VarietyIdeal s = support_ideal(builtin_operator("ex1.1"));
  CHECK(s.is_zero_ideal());
}

TEST_CASE("support of the Cayley operator is its cubic surface") {
  VarietyIdeal s = support_ideal(builtin_operator("cayley"));
  REQUIRE(s.ideal.generators().size() == 1);
  const auto& det = s.ideal.generators()[0];
  CHECK(det.homogeneous_degree_in(Block::Y) == 3);
  CHECK(det == parse_polynomial(
                   "y1^3 - y1*y2^2 - y1*y3^2 + 2*y2*y3*y4 - y1*y4^2", s.ideal.ring()));
}

TEST_CASE("incidence variety of the concrete quadric operator") {
  VarietyIdeal inc = incidence_ideal(builtin_operator("ex6.2"));
  CHECK(all_generators_multihomogeneous(inc));
  // the four (frequency, amplitude) pairs of the displayed general solution
  auto on = [&](long y1, long y2, long z1, long z2) {
    return point_on_variety(inc, {{"y1", Rational(y1)},
                                  {"y2", Rational(y2)},
                                  {"z1", Rational(z1)},
                                  {"z2", Rational(z2)}});
  };
  CHECK(on(2, 1, -17, 4));
  CHECK(on(-2, 1, 17, 4));
  CHECK(on(1, 2, -2, 1));
  CHECK(on(1, -2, 2, 1));
  // a random non-solution is rejected
  CHECK_FALSE(on(1, 1, 1, 1));
}

TEST_CASE("first-order C matrix") {
  Operator a = builtin_operator("ex1.1");
  auto c = first_order_c_matrix(a);
  REQUIRE(c.size() == 2);
  REQUIRE(c[0].size() == 3);
  const RingPtr& Z = c[0][0].ring();
  CHECK(c[0][0] == parse_polynomial("z1", Z));
  CHECK(c[0][1] == parse_polynomial("z2", Z));
  CHECK(c[0][2] == parse_polynomial("z3", Z));
  CHECK(c[1][0] == parse_polynomial("z2", Z));
  CHECK(c[1][1] == parse_polynomial("z3", Z));
  CHECK(c[1][2] == parse_polynomial("z4", Z));

  CHECK_THROWS_AS(first_order_c_matrix(builtin_operator("ex4.2")), PreconditionError);
}

TEST_CASE("C matrix of curl is minus curl of the amplitudes") {
  Operator curl = builtin_operator("curl", {{"p", 1}, {"n", 3}});
  auto c = first_order_c_matrix(curl);
  const RingPtr& Z = c[0][0].ring();
  // rows of curl: (i,j) = (1,2), (1,3), (2,3); C row for (i,j) has
  // -z_{1j} at column i and z_{1i}... expanded: A(y)z row (i,j) =
  // y_i z_{1j} - y_j z_{1i}.
  CHECK(c[0][0] == parse_polynomial("z12", Z));
  CHECK(c[0][1] == parse_polynomial("-z11", Z));
  CHECK(c[0][2] == parse_polynomial("0", Z));
  CHECK(c[2][1] == parse_polynomial("z13", Z));
  CHECK(c[2][2] == parse_polynomial("-z12", Z));
}

TEST_CASE("C matrix of the Cayley operator") {
  auto c = first_order_c_matrix(builtin_operator("cayley"));
  const RingPtr& Z = c[0][0].ring();
  std::vector<std::vector<std::string>> want = {{"z1", "z2", "z3", "0"},
                                                {"z2", "z1", "0", "z3"},
                                                {"z3", "0", "z1", "z2"}};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(c[i][j] == parse_polynomial(want[i][j], Z));
}

TEST_CASE("C matrix of div-sum is the generic matrix of amplitudes") {
  Operator d = builtin_operator("div", {{"p", 2}, {"n", 3}});
  auto c = first_order_c_matrix(d);
  REQUIRE(c.size() == 2);
  const RingPtr& Z = c[0][0].ring();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(c[i][j] == parse_polynomial("z" + std::to_string(i + 1) + std::to_string(j + 1), Z));
}

TEST_CASE("first-order wave varieties are determinantal") {
  Operator a = builtin_operator("ex1.1");
  VarietyIdeal w1 = wave_ideal_first_order(a, 1);
  const RingPtr& Z = w1.ideal.ring();
  Ideal expected(Z, {parse_polynomial("z2^2 - z1*z3", Z), parse_polynomial("z2*z3 - z1*z4", Z),
                     parse_polynomial("z3^2 - z2*z4", Z)});
  CHECK(ideal_equal(w1.ideal, expected));

  // rank condition vacuous
  CHECK(wave_ideal_first_order(a, 2).is_zero_ideal());
  CHECK(wave_ideal_first_order(a, 5).is_zero_ideal());

  // div^2, r=1: 2x2 minors of the generic 2x3 matrix
  Operator d = builtin_operator("div", {{"p", 2}, {"n", 3}});
  VarietyIdeal dw = wave_ideal_first_order(d, 1);
  CHECK(dw.ideal.generators().size() == 3);
  CHECK_THROWS_AS(wave_ideal_first_order(builtin_operator("ex4.2"), 1), PreconditionError);
}

TEST_CASE("wave pair variety at r = n-1 is the incidence variety") {
  Operator a = builtin_operator("ex6.2");
  VarietyIdeal wp = wave_pair_ideal(a, 1);  // n = 2, r = n-1 = 1
  VarietyIdeal inc = incidence_ideal(a);
  // rename p_i <-> y_i and compare reduced bases
  RingPtr incring = inc.ideal.ring();
  std::vector<Polynomial> renamed;
  for (const auto& g : wp.ideal.generators()) {
    std::map<size_t, Polynomial> sub;
    const RingPtr& wr = g.ring();
    for (size_t i = 0; i < wr->size(); ++i) {
      std::string nm = wr->name(i);
      if (nm[0] == 'p') nm = "y" + nm.substr(1);
      sub.emplace(i, Polynomial::variable(incring, nm));
    }
    renamed.push_back(g.substitute(sub, incring));
  }
  CHECK(canonical_generators(Ideal(incring, renamed)) == inc.ideal.generators());
}

TEST_CASE("wave hierarchy endpoints for the 2x4 operator") {
  Operator a = builtin_operator("ex1.1");
  VarietyIdeal w0 = wave_ideal(a, 0);
  CHECK(w0.is_unit());  // W^0 is empty
  VarietyIdeal w2 = wave_ideal(a, 2);
  CHECK(w2.is_zero_ideal());  // W^2 is all of P^3
}

TEST_CASE("twisted cubic from the full Algorithm pipeline") {
  Operator a = builtin_operator("ex1.1");
  VarietyIdeal w1 = wave_ideal(a, 1);
  CHECK(ideal_equal(w1.ideal, wave_ideal_first_order(a, 1).ideal));
  CHECK(all_generators_multihomogeneous(w1));
}

TEST_CASE("obstruction at level 2 equals wave at level 1") {
  Operator a = builtin_operator("ex1.1");
  VarietyIdeal o2 = obstruction_ideal(a, 2);
  VarietyIdeal w1 = wave_ideal(a, 1);
  CHECK(o2.ideal.generators() == w1.ideal.generators());
}

TEST_CASE("obstruction endpoints") {
  Operator a = builtin_operator("ex6.2");
  // r = n: equals the top wave variety
  VarietyIdeal on = obstruction_ideal(a, 2);
  VarietyIdeal wn = wave_ideal(a, 1);
  CHECK(on.ideal.generators() == wn.ideal.generators());
  // r = 1: equals W^0
  VarietyIdeal o1 = obstruction_ideal(a, 1);
  VarietyIdeal w0 = wave_ideal(a, 0);
  CHECK(o1.is_unit() == w0.is_unit());
  CHECK(o1.ideal.generators() == w0.ideal.generators());

  // endpoints for the 2x4 operator as well: O^n = W^{n-1}, O^1 = W^0
  Operator b = builtin_operator("ex1.1");
  CHECK(obstruction_ideal(b, 3).ideal.generators() == wave_ideal(b, 2).ideal.generators());
  CHECK(obstruction_ideal(b, 1).is_unit() == wave_ideal(b, 0).is_unit());
}

TEST_CASE("Fano varieties") {
  // an irreducible conic in P^2 contains no lines
  auto Y3 = detail::y_ring(3);
  VarietyIdeal conic =
      fano_ideal({parse_polynomial("y1^2 + y2^2 - y3^2", Y3)}, Y3, 1);
  CHECK(conic.is_unit());

  // a smooth quadric surface in P^3 carries two rulings of lines
  auto Y4 = detail::y_ring(4);
  auto quadric = parse_polynomial("y1*y4 - y2*y3", Y4);
  VarietyIdeal lines = fano_ideal({quadric}, Y4, 2);
  CHECK_FALSE(lines.is_unit());
  CHECK_FALSE(lines.is_zero_ideal());
  // the ruling span{(1,0,1,0),(0,1,0,1)} of {y1 y4 = y2 y3}: its Pluecker
  // point must satisfy the Fano ideal. Minors of [[1,0,1,0],[0,1,0,1]]:
  // p12=1, p13=0, p14=1, p23=-1, p24=0, p34=1.
  CHECK(point_on_variety(lines, {{"p12", Rational(1)},
                                 {"p13", Rational(0)},
                                 {"p14", Rational(1)},
                                 {"p23", Rational(-1)},
                                 {"p24", Rational(0)},
                                 {"p34", Rational(1)}}));
}

TEST_CASE("k = 1 wave pairs are Fano varieties") {
  // A = [a] for the quadric surface: P^r_A = Fano_r(S_A)
  auto Y4 = detail::y_ring(4);
  auto quadric = parse_polynomial("y1*y4 - y2*y3", Y4);
  Operator a(Y4, 1, 1, {quadric});
  VarietyIdeal wp = wave_pair_ideal(a, 2);
  VarietyIdeal fano = fano_ideal({quadric}, Y4, 2);
  // drop the z coordinate (the wave pair ideal is z-saturated, so its
  // generators are pure p-polynomials) and compare
  Ideal projected = eliminate_block(wp.ideal, Block::Z);
  CHECK(projected.generators() == fano.ideal.generators());
}

TEST_CASE("verify_wave_pair certificates") {
  Operator a = builtin_operator("ex1.1");
  // amplitude on the twisted cubic at (s,t) = (1,2)
  std::vector<Rational> z = {Rational(1), Rational(2), Rational(4), Rational(8)};
  RationalMatrix s = {{Rational(2), Rational(-1), Rational(0)},
                      {Rational(0), Rational(2), Rational(-1)}};
  WavePairCertificate cert = verify_wave_pair(a, z, s);
  CHECK(cert.verified);
  CHECK(cert.forms == s);
  REQUIRE(cert.support.size() == 1);
  CHECK(cert.support[0] ==
        RationalRow{Rational(1), Rational(2), Rational(4)});

  // perturbing the amplitude breaks it
  std::vector<Rational> bad = {Rational(1), Rational(2), Rational(4), Rational(9)};
  CHECK_FALSE(verify_wave_pair(a, bad, s).verified);

  // degenerate inputs are rejected
  std::vector<Rational> zero(4, Rational(0));
  CHECK_THROWS_AS(verify_wave_pair(a, zero, s), PreconditionError);
  RationalMatrix rank_deficient = {{Rational(1), Rational(2), Rational(4)},
                                   {Rational(2), Rational(4), Rational(8)}};
  CHECK_THROWS_AS(verify_wave_pair(a, z, rank_deficient), PreconditionError);

  // the quadric-operator superposition: z = (-17,4) with S = [2, 1]
  Operator q = builtin_operator("ex6.2");
  WavePairCertificate qc = verify_wave_pair(q, {Rational(-17), Rational(4)},
                                            {{Rational(2), Rational(1)}});
  CHECK(qc.verified);
}

TEST_CASE("wave pair points satisfy the wave pair ideal") {
  // soundness of the parametrization check on a sampled twisted-cubic point
  Operator a = builtin_operator("ex1.1");
  VarietyIdeal wp = wave_pair_ideal(a, 1);
  CHECK(all_generators_multihomogeneous(wp));
  // z = (1,2,4,8), pi = rowspace [[2,-1,0],[0,2,-1]]; pluecker coordinates
  // of pi: minors p12 = 4, p13 = -2, p23 = 1
  CHECK(point_on_variety(wp, {{"z1", Rational(1)},
                              {"z2", Rational(2)},
                              {"z3", Rational(4)},
                              {"z4", Rational(8)},
                              {"p12", Rational(4)},
                              {"p13", Rational(-2)},
                              {"p23", Rational(1)}}));
}

TEST_CASE("eliminating y from the saturated incidence ideal of the 2x4 operator") {
  // W^2 is all of P^3, so the projection to the amplitude factor is cut out
  // by the zero ideal
  VarietyIdeal inc = incidence_ideal(builtin_operator("ex1.1"));
  Ideal z_part = eliminate_block(inc.ideal, Block::Y);
  CHECK(z_part.is_zero());
}

TEST_CASE("wave hierarchy inclusions") {
  // W^0 subset W^1 subset ... : ideals shrink, so each generator of the
  // level r+1 ideal reduces to zero modulo the level r basis
  for (const char* name : {"ex1.1", "div"}) {
    Operator op = name == std::string("div")
                      ? builtin_operator("div", {{"p", 2}, {"n", 3}})
                      : builtin_operator(name);
    VarietyIdeal prev = wave_ideal(op, 0);
    for (int r = 1; r < static_cast<int>(op.n()); ++r) {
      VarietyIdeal cur = wave_ideal(op, r);
      GroebnerBasis prev_gb = buchberger(prev.ideal);
      bool prev_unit = prev.is_unit();
      for (const auto& g : cur.ideal.generators()) {
        if (prev_unit) break;  // unit ideal contains everything
        CHECK(prev_gb.contains(g));
      }
      prev = cur;
    }
  }
}

TEST_CASE("first-order shortcut agrees set-theoretically for curl") {
  // For the 2-fold curl at r = 2 the minors of C(z) are cubics inside the
  // quadric-generated saturated wave ideal: one-sided containment only.
  Operator curl2 = builtin_operator("curl", {{"p", 2}, {"n", 3}});
  VarietyIdeal shortcut = wave_ideal_first_order(curl2, 2);
  VarietyIdeal full = wave_ideal(curl2, 2);
  GroebnerBasis full_gb = buchberger(full.ideal);
  CHECK_FALSE(shortcut.ideal.is_zero());
  for (const auto& g : shortcut.ideal.generators()) CHECK(full_gb.contains(g));

  // single curl: both routes give the zero ideal (W^2 is everything)
  Operator curl1 = builtin_operator("curl", {{"p", 1}, {"n", 3}});
  CHECK(wave_ideal_first_order(curl1, 2).is_zero_ideal());
  CHECK(wave_ideal(curl1, 2).is_zero_ideal());
}

TEST_CASE("builtin matrices match their defining patterns") {
  Operator curl = builtin_operator("curl", {{"p", 1}, {"n", 3}});
  const RingPtr& R = curl.frequency_ring();
  CHECK(curl.rows() == 3);
  CHECK(curl.cols() == 3);
  // rows are d_i e_j - d_j e_i for (i,j) = (1,2), (1,3), (2,3)
  CHECK(curl.entry(0, 0) == parse_polynomial("-y2", R));
  CHECK(curl.entry(0, 1) == parse_polynomial("y1", R));
  CHECK(curl.entry(0, 2).is_zero());
  CHECK(curl.entry(2, 1) == parse_polynomial("-y3", R));
  CHECK(curl.entry(2, 2) == parse_polynomial("y2", R));

  Operator sv = builtin_operator("saintvenant", {{"n", 2}});
  CHECK(sv.rows() == 16);
  CHECK(sv.cols() == 3);
  CHECK(sv.order() == 2);
  for (const auto& e : sv.entries()) {
    if (e.is_zero()) continue;
    // nonzero entries are quadratic, with monomial support
    CHECK(e.homogeneous_degree_in(Block::Y) == 2);
  }
  // the classical Saint-Venant row y1^2 z22 + y2^2 z11 - 2 y1 y2 z12 occurs
  bool found = false;
  RingPtr yz = detail::yz_ring(sv);
  Polynomial expect = parse_polynomial("y1^2*z22 + y2^2*z11 - 2*y1*y2*z12", yz);
  for (const auto& f : detail::incidence_forms(sv, yz))
    if (f == expect) found = true;
  CHECK(found);

  CHECK_THROWS_AS(builtin_operator("nonsense"), UsageError);
  CHECK_THROWS_AS(builtin_operator("curl", {{"q", 1}}), UsageError);
}

TEST_CASE("patch validation") {
  Operator a = builtin_operator("ex1.1");
  CHECK_THROWS_AS(wave_pair_ideal(a, 1, std::vector<int>{1}), UsageError);
  CHECK_THROWS_AS(wave_pair_ideal(a, 1, std::vector<int>{1, 4}), UsageError);
  CHECK_THROWS_AS(wave_pair_ideal(a, 1, std::vector<int>{2, 2}), UsageError);
  CHECK_THROWS_AS(wave_pair_ideal(a, 3), PreconditionError);
  CHECK_THROWS_AS(wave_pair_ideal(a, -1), PreconditionError);
}

TEST_CASE("patch keeps the components it can see") {
  // twisted cubic pipeline restricted to the chart p12 != 0
  Operator a = builtin_operator("ex1.1");
  VarietyIdeal wp = wave_pair_ideal(a, 1, std::vector<int>{1, 2});
  // the sampled point has p12 = 4 != 0, so it survives in the chart closure
  CHECK(point_on_variety(wp, {{"z1", Rational(1)},
                              {"z2", Rational(2)},
                              {"z3", Rational(4)},
                              {"z4", Rational(8)},
                              {"p12", Rational(4)},
                              {"p13", Rational(-2)},
                              {"p23", Rational(1)}}));
  // the wave pair variety here is irreducible and meets the chart, so the
  // chart closure reproduces the unpatched ideal exactly
  VarietyIdeal full = wave_pair_ideal(a, 1);
  CHECK(wp.ideal.generators() == full.ideal.generators());
}

TEST_CASE("patch drops components at the chart boundary") {
  // two of the six Cayley components satisfy p12 = 0; the chart {p12 != 0}
  // loses them, and the patched ideal strictly contains the unpatched one
  Operator cayley = builtin_operator("cayley");
  VarietyIdeal patched = wave_pair_ideal(cayley, 2, std::vector<int>{1, 2});
  VarietyIdeal full = wave_pair_ideal(cayley, 2);
  GroebnerBasis patched_gb = buchberger(patched.ideal);
  for (const auto& g : full.ideal.generators()) CHECK(patched_gb.contains(g));
  // the component through z = (1,1,0), p = (0,1,-1,-1,1,0) has p12 = 0
  CHECK(point_on_variety(full, {{"z1", Rational(1)}, {"z2", Rational(1)},
                                {"z3", Rational(0)}, {"p12", Rational(0)},
                                {"p13", Rational(1)}, {"p14", Rational(-1)},
                                {"p23", Rational(-1)}, {"p24", Rational(1)},
                                {"p34", Rational(0)}}));
  CHECK_FALSE(point_on_variety(patched, {{"z1", Rational(1)}, {"z2", Rational(1)},
                                         {"z3", Rational(0)}, {"p12", Rational(0)},
                                         {"p13", Rational(1)}, {"p14", Rational(-1)},
                                         {"p23", Rational(-1)}, {"p24", Rational(1)},
                                         {"p34", Rational(0)}}));
}

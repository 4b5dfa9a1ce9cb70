#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wavekit/builtin.hpp"
#include "wavekit/parse.hpp"

using namespace wavekit;

namespace {
RingPtr yring2() { return Ring::make({{"y1", Block::Y}, {"y2", Block::Y}}); }
}

TEST_CASE("expression grammar") {
  auto R = yring2();
  CHECK(parse_polynomial("y1^2 - 2*y2", R) ==
        parse_polynomial("y1*y1 - y2 - y2", R));
  CHECK(parse_polynomial("-y1", R) == -Polynomial::variable(R, "y1"));
  CHECK(parse_polynomial("(y1 + y2)^3", R).term_count() == 4);
  CHECK(parse_polynomial("0", R).is_zero());
  CHECK(parse_polynomial("2^3", R) == Polynomial::constant(R, 8));
}

TEST_CASE("grammar rejections carry codes and positions") {
  auto R = yring2();
  try {
    parse_polynomial("y1 y2", R);
    FAIL("implicit multiplication must be rejected");
  } catch (const ParseError& e) {
    CHECK(e.code() == "syntax");
    CHECK(e.column() == 4);
  }
  try {
    parse_polynomial("y1^y2", R);
    FAIL();
  } catch (const ParseError& e) {
    CHECK(e.code() == "bad-exponent");
  }
  try {
    parse_polynomial("y1 + q", R);
    FAIL();
  } catch (const ParseError& e) {
    CHECK(e.code() == "unknown-variable");
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_polynomial("(y1", R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y1 +", R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y1^(2)", R), ParseError);
}

TEST_CASE("operator file happy path") {
  std::string text =
      "ring y1 y2 y3\n"
      "matrix 2 4\n"
      "y1, y2, y3, 0\n"
      "0, y1, y2, y3\n";
  Operator op = parse_operator(text);
  CHECK(op.rows() == 2);
  CHECK(op.cols() == 4);
  CHECK(op.n() == 3);
  CHECK(op.order() == 1);
  CHECK(op == builtin_operator("ex1.1"));
}

TEST_CASE("operator file comments and blank lines") {
  std::string text =
      "# the divergence operator\n"
      "ring d1 d2\n"
      "\n"
      "matrix 1 2\n"
      "d1, d2   # one row\n";
  Operator op = parse_operator(text);
  CHECK(op.rows() == 1);
  CHECK(op.frequency_ring()->name(0) == "d1");
}

TEST_CASE("operator file error codes") {
  try {
    parse_operator("ring y1 y2\nmatrix 1 2\ny1 + y2^2, y1\n");
    FAIL();
  } catch (const ParseError& e) {
    CHECK(e.code() == "inhomogeneous");
    CHECK(e.line() == 3);
  }
  try {
    parse_operator("ring y1 y2\nmatrix 2 4\ny1, y2, y1, y2\ny1, y2, y1\n");
    FAIL();
  } catch (const ParseError& e) {
    CHECK(e.code() == "dimension");
    CHECK(e.line() == 4);
  }
  try {
    parse_operator("ring y1 y2\nmatrix 1 2\ny1, (y2\n");
    FAIL();
  } catch (const ParseError& e) {
    CHECK(e.code() == "syntax");
  }
  CHECK_THROWS_AS(parse_operator("matrix 1 1\ny1\n"), ParseError);
  CHECK_THROWS_AS(parse_operator("ring y1 y1\nmatrix 1 1\ny1\n"), ParseError);
}

TEST_CASE("mixed degrees across entries are rejected") {
  try {
    parse_operator("ring y1 y2\nmatrix 1 2\ny1, y2^2\n");
    FAIL();
  } catch (const ParseError& e) {
    CHECK(e.code() == "inhomogeneous");
  }
}

TEST_CASE("parse-emit round trip on builtins") {
  for (const auto& name : builtin_operator_names()) {
    Operator op = builtin_operator(name);
    Operator back = parse_operator(op.str());
    CHECK(back.rows() == op.rows());
    CHECK(back.cols() == op.cols());
    CHECK(back.entries() == op.entries());
  }
}

TEST_CASE("parse-emit round trip on random operators") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-5, 5), pick(0, 2);
  auto R = Ring::make({{"y1", Block::Y}, {"y2", Block::Y}, {"y3", Block::Y}});
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial> entries;
    for (int e = 0; e < 4; ++e) {
      // random homogeneous quadric
      Polynomial p(R);
      for (size_t a = 0; a < 3; ++a)
        for (size_t b = a; b < 3; ++b) {
          if (pick(rng) == 0) continue;
          Monomial m(3);
          m.set(a, m[a] + 1);
          m.set(b, m[b] + 1);
          int c = coef(rng);
          if (c) p.add_term(m, Rational(c));
        }
      entries.push_back(p);
    }
    Operator op(R, 2, 2, entries);
    Operator back = parse_operator(op.str());
    CHECK(back == op);
  }
}

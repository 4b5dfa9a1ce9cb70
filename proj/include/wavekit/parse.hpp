#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wavekit/error.hpp"
#include "wavekit/operator.hpp"
#include "wavekit/polynomial.hpp"

namespace wavekit {

// Polynomial expression grammar:
//
//   expr   := ['-'|'+'] term ( ('+'|'-') term )*
//   term   := factor ( '*' factor )*
//   factor := atom [ '^' INT ]
//   atom   := INT | VAR | '(' expr ')'
//
// Implicit multiplication is not allowed; exponents are nonnegative integer
// literals. Every VAR must be a registry variable.
namespace detail {

struct Token {
  enum class Kind { Int, Name, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  Lexer(std::string_view src, int line0, int col0) : src_(src), line_(line0), col_(col0) {}

  Token next() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) advance();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Token::Kind::End, "", line, col};
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        num += src_[pos_];
        advance();
      }
      return {Token::Kind::Int, num, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        name += src_[pos_];
        advance();
      }
      return {Token::Kind::Name, name, line, col};
    }
    advance();
    switch (c) {
      case '+': return {Token::Kind::Plus, "+", line, col};
      case '-': return {Token::Kind::Minus, "-", line, col};
      case '*': return {Token::Kind::Star, "*", line, col};
      case '^': return {Token::Kind::Caret, "^", line, col};
      case '(': return {Token::Kind::LParen, "(", line, col};
      case ')': return {Token::Kind::RParen, ")", line, col};
      case ',': return {Token::Kind::Comma, ",", line, col};
      default:
        throw ParseError("syntax", line, col, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_;
  int col_;
};

class PolyParser {
 public:
  PolyParser(std::string_view src, RingPtr ring, int line0, int col0)
      : lex_(src, line0, col0), ring_(std::move(ring)) {
    cur_ = lex_.next();
  }

  Polynomial parse() {
    Polynomial p = expr();
    expect_end();
    return p;
  }

 private:
  void bump() { cur_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& code, const std::string& msg) {
    throw ParseError(code, cur_.line, cur_.col, msg);
  }

  void expect_end() {
    if (cur_.kind != Token::Kind::End)
      fail("syntax", "unexpected token '" + cur_.text + "' after expression");
  }

  Polynomial expr() {
    bool neg = false;
    if (cur_.kind == Token::Kind::Minus) {
      neg = true;
      bump();
    } else if (cur_.kind == Token::Kind::Plus) {
      bump();
    }
    Polynomial p = term();
    if (neg) p = -p;
    while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
      bool minus = cur_.kind == Token::Kind::Minus;
      bump();
      Polynomial q = term();
      p = minus ? p - q : p + q;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (cur_.kind == Token::Kind::Star) {
      bump();
      p = p * factor();
    }
    return p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (cur_.kind == Token::Kind::Caret) {
      bump();
      if (cur_.kind != Token::Kind::Int)
        fail("bad-exponent", "exponent must be a nonnegative integer literal");
      int e = 0;
      try {
        e = std::stoi(cur_.text);
      } catch (...) {
        fail("bad-exponent", "exponent out of range");
      }
      if (e > (1 << 20)) fail("bad-exponent", "exponent too large");
      bump();
      return base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    switch (cur_.kind) {
      case Token::Kind::Int: {
        Rational c = Rational(mpz_class(cur_.text));
        bump();
        return Polynomial::constant(ring_, c);
      }
      case Token::Kind::Name: {
        long idx = ring_->index_of(cur_.text);
        if (idx < 0)
          throw ParseError("unknown-variable", cur_.line, cur_.col,
                           "unknown variable '" + cur_.text + "'");
        bump();
        return Polynomial::variable(ring_, static_cast<size_t>(idx));
      }
      case Token::Kind::LParen: {
        bump();
        Polynomial p = expr();
        if (cur_.kind != Token::Kind::RParen) fail("syntax", "expected ')'");
        bump();
        return p;
      }
      default:
        fail("syntax", "expected integer, variable, or '('");
    }
  }

  Lexer lex_;
  Token cur_;
  RingPtr ring_;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, int line = 1,
                                   int col = 1) {
  return detail::PolyParser(text, ring, line, col).parse();
}

// Operator file format:
//
//   ring y1 y2 y3          # declares the frequency variables
//   matrix 2 4
//   y1, y2, y3, 0
//   0, y1, y2, y3
//
// Blank lines and '#' comments are ignored. Entries are comma-separated
// polynomial expressions over the declared ring; all nonzero entries must be
// homogeneous of one common degree.
inline Operator parse_operator(const std::string& text) {
  std::vector<std::pair<std::string, int>> lines;  // content, 1-based line number
  {
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
      ++no;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      bool blank = true;
      for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) lines.emplace_back(raw, no);
    }
  }
  if (lines.size() < 2) throw ParseError("syntax", 1, 1, "expected 'ring' and 'matrix' headers");

  // Header 1: ring <var>...
  RingPtr ring;
  {
    std::istringstream hs(lines[0].first);
    std::string kw;
    hs >> kw;
    if (kw != "ring")
      throw ParseError("syntax", lines[0].second, 1, "expected 'ring' declaration");
    std::vector<std::pair<std::string, Block>> vars;
    std::string nm;
    while (hs >> nm) {
      for (char c : nm)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw ParseError("syntax", lines[0].second, 1, "bad variable name '" + nm + "'");
      if (std::isdigit(static_cast<unsigned char>(nm[0])))
        throw ParseError("syntax", lines[0].second, 1, "bad variable name '" + nm + "'");
      vars.emplace_back(nm, Block::Y);
    }
    if (vars.empty())
      throw ParseError("syntax", lines[0].second, 1, "ring declaration lists no variables");
    try {
      ring = Ring::make(std::move(vars));
    } catch (const UsageError& e) {
      throw ParseError("syntax", lines[0].second, 1, e.what());
    }
  }

  // Header 2: matrix <rows> <cols>
  size_t rows = 0, cols = 0;
  {
    std::istringstream hs(lines[1].first);
    std::string kw;
    hs >> kw;
    if (kw != "matrix")
      throw ParseError("syntax", lines[1].second, 1, "expected 'matrix' declaration");
    long r = 0, c = 0;
    if (!(hs >> r >> c) || r <= 0 || c <= 0)
      throw ParseError("dimension", lines[1].second, 1, "matrix dimensions must be positive");
    std::string junk;
    if (hs >> junk)
      throw ParseError("syntax", lines[1].second, 1, "trailing tokens after matrix dimensions");
    rows = static_cast<size_t>(r);
    cols = static_cast<size_t>(c);
  }

  // Optional header 3: amplitudes <name>... (amplitude variable names)
  std::vector<std::string> amp_names;
  size_t first_row = 2;
  if (lines.size() > 2) {
    std::istringstream hs(lines[2].first);
    std::string kw;
    hs >> kw;
    if (kw == "amplitudes") {
      std::string nm;
      while (hs >> nm) amp_names.push_back(nm);
      if (amp_names.size() != cols)
        throw ParseError("dimension", lines[2].second, 1,
                         "amplitudes header must list exactly " + std::to_string(cols) +
                             " names");
      first_row = 3;
    }
  }

  if (lines.size() != first_row + rows)
    throw ParseError("dimension", lines.back().second, 1,
                     "expected " + std::to_string(rows) + " entry rows, found " +
                         std::to_string(lines.size() - first_row));

  std::vector<Polynomial> entries;
  entries.reserve(rows * cols);
  for (size_t i = 0; i < rows; ++i) {
    const auto& [content, lineno] = lines[first_row + i];
    std::vector<std::pair<std::string, int>> cells;  // text, 1-based col offset
    {
      std::string cell;
      int start = 1, col = 1;
      for (char c : content) {
        if (c == ',') {
          cells.emplace_back(cell, start);
          cell.clear();
          start = col + 1;
        } else {
          cell += c;
        }
        ++col;
      }
      cells.emplace_back(cell, start);
    }
    if (cells.size() != cols)
      throw ParseError("dimension", lineno, 1,
                       "row " + std::to_string(i + 1) + " has " + std::to_string(cells.size()) +
                           " entries, expected " + std::to_string(cols));
    for (const auto& [cell, colno] : cells) {
      bool blank = true;
      for (char c : cell)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (blank) throw ParseError("syntax", lineno, colno, "empty matrix entry");
      entries.push_back(parse_polynomial(cell, ring, lineno, colno));
    }
  }

  // Homogeneity with line/column attribution: check before constructing.
  int degree = -1;
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      const Polynomial& e = entries[i * cols + j];
      if (e.is_zero()) continue;
      auto d = e.homogeneous_degree();
      int lineno = lines[first_row + i].second;
      if (!d)
        throw ParseError("inhomogeneous", lineno, 1,
                         "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ") is not homogeneous: " + e.str());
      if (degree == -1) degree = *d;
      else if (degree != *d)
        throw ParseError("inhomogeneous", lineno, 1,
                         "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ") has degree " + std::to_string(*d) + ", expected " +
                             std::to_string(degree));
    }

  return Operator(ring, rows, cols, std::move(entries), std::move(amp_names));
}

}  // namespace wavekit

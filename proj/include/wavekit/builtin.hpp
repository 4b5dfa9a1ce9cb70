#pragma once

#include <map>
#include <string>
#include <vector>

#include "wavekit/operator.hpp"
#include "wavekit/parse.hpp"

namespace wavekit {

namespace detail {

inline RingPtr y_ring(int n) {
  std::vector<std::pair<std::string, Block>> vars;
  for (int i = 1; i <= n; ++i) vars.push_back({"y" + std::to_string(i), Block::Y});
  return Ring::make(std::move(vars));
}

inline Operator operator_from_rows(int n, const std::vector<std::vector<std::string>>& rows,
                                   std::vector<std::string> amp_names = {}) {
  RingPtr ring = y_ring(n);
  std::vector<Polynomial> entries;
  for (const auto& row : rows)
    for (const auto& cell : row) entries.push_back(parse_polynomial(cell, ring));
  return Operator(ring, rows.size(), rows[0].size(), std::move(entries), std::move(amp_names));
}

inline int param_or(const std::map<std::string, int>& params, const std::string& key, int dflt) {
  auto it = params.find(key);
  return it == params.end() ? dflt : it->second;
}

}  // namespace detail

// Built-in example operators, by name:
//   ex1.1        2x4 first-order operator (n = 3)
//   ex3.1        [[d1^2, d1 d2], [d1 d2, d2^2]] (n = 2)
//   ex4.2        3x3 second-order operator with sextic support (n = 3)
//   ex6.2        concrete 2x2 quadric operator (n = 2)
//   cayley       3x3 linear matrix of the Cayley cubic (n = 4)
//   div          p-fold direct sum of (d1..dn); params p, n
//   curl         p-fold direct sum of the curl matrix; params p, n
//   saintvenant  Saint-Venant operator, full n^4 row set; param n
//   diag         diag(d1..dn); param n
inline Operator builtin_operator(const std::string& name,
                                 const std::map<std::string, int>& params = {}) {
  using detail::operator_from_rows;
  using detail::param_or;
  for (const auto& [key, val] : params) {
    if (key != "p" && key != "n") throw UsageError("unknown builtin parameter: " + key);
    if (val < 1) throw UsageError("builtin parameter must be positive: " + key);
  }

  if (name == "ex1.1") {
    return operator_from_rows(3, {{"y1", "y2", "y3", "0"}, {"0", "y1", "y2", "y3"}});
  }
  if (name == "ex3.1") {
    return operator_from_rows(2, {{"y1^2", "y1*y2"}, {"y1*y2", "y2^2"}});
  }
  if (name == "ex4.2") {
    return operator_from_rows(3, {{"y1^2", "y2^2", "y3^2"},
                                  {"-y2^2", "y3^2", "y1^2"},
                                  {"-y3^2", "-y1^2", "y2^2"}});
  }
  if (name == "ex6.2") {
    return operator_from_rows(
        2, {{"y1^2 + 4*y2^2", "17*y1*y2"}, {"2*y1*y2", "4*y1^2 + y2^2"}});
  }
  if (name == "cayley") {
    return operator_from_rows(4,
                              {{"y1", "y2", "y3"}, {"y2", "y1", "y4"}, {"y3", "y4", "y1"}});
  }
  if (name == "div") {
    int p = param_or(params, "p", 1), n = param_or(params, "n", 3);
    if (n > 9) throw UsageError("div: n too large");
    std::vector<std::vector<std::string>> rows(p, std::vector<std::string>(p * n, "0"));
    std::vector<std::string> amps;
    for (int c = 0; c < p; ++c)
      for (int i = 1; i <= n; ++i) {
        rows[c][c * n + i - 1] = "y" + std::to_string(i);
        amps.push_back("z" + std::to_string(c + 1) + std::to_string(i));
      }
    return operator_from_rows(n, rows, amps);
  }
  if (name == "curl") {
    int p = param_or(params, "p", 1), n = param_or(params, "n", 3);
    if (n < 2) throw UsageError("curl: n must be at least 2");
    if (n > 9) throw UsageError("curl: n too large");
    int block_rows = n * (n - 1) / 2;
    std::vector<std::vector<std::string>> rows(p * block_rows,
                                               std::vector<std::string>(p * n, "0"));
    std::vector<std::string> amps;
    for (int c = 0; c < p; ++c)
      for (int i = 1; i <= n; ++i) amps.push_back("z" + std::to_string(c + 1) + std::to_string(i));
    for (int c = 0; c < p; ++c) {
      int row = c * block_rows;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          rows[row][c * n + j - 1] = "y" + std::to_string(i);        // d_i e_j
          rows[row][c * n + i - 1] = "-y" + std::to_string(j);       // - d_j e_i
          ++row;
        }
    }
    return operator_from_rows(n, rows, amps);
  }
  if (name == "saintvenant") {
    int n = param_or(params, "n", 3);
    if (n < 2) throw UsageError("saintvenant: n must be at least 2");
    if (n > 9) throw UsageError("saintvenant: n too large");
    // Columns are unordered pairs (a <= b); full redundant n^4 row set.
    std::map<std::pair<int, int>, int> col_of;
    std::vector<std::string> amps;
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b) {
        col_of[{a, b}] = static_cast<int>(amps.size());
        amps.push_back("z" + std::to_string(a) + std::to_string(b));
      }
    RingPtr ring = detail::y_ring(n);
    auto mono = [&](int i, int j) {
      return Polynomial::variable(ring, "y" + std::to_string(i)) *
             Polynomial::variable(ring, "y" + std::to_string(j));
    };
    size_t k = amps.size();
    std::vector<Polynomial> entries;
    entries.reserve(static_cast<size_t>(n) * n * n * n * k);
    auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            std::vector<Polynomial> row(k, Polynomial::zero(ring));
            row[col_of[key(a, b)]] += mono(i, j);
            row[col_of[key(i, j)]] += mono(a, b);
            row[col_of[key(j, b)]] -= mono(i, a);
            row[col_of[key(i, a)]] -= mono(j, b);
            for (auto& e : row) entries.push_back(std::move(e));
          }
    size_t rows = static_cast<size_t>(n) * n * n * n;
    return Operator(ring, rows, k, std::move(entries), amps);
  }
  if (name == "diag") {
    int n = param_or(params, "n", 2);
    if (n > 9) throw UsageError("diag: n too large");
    std::vector<std::vector<std::string>> rows(n, std::vector<std::string>(n, "0"));
    for (int i = 0; i < n; ++i) rows[i][i] = "y" + std::to_string(i + 1);
    return operator_from_rows(n, rows);
  }
  throw UsageError("unknown builtin operator: " + name);
}

inline const std::vector<std::string>& builtin_operator_names() {
  static const std::vector<std::string> names = {
      "ex1.1", "ex3.1", "ex4.2", "ex6.2", "cayley", "div", "curl", "saintvenant", "diag"};
  return names;
}

}  // namespace wavekit

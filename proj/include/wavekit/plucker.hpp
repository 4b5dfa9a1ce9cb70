#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wavekit/ideal_ops.hpp"
#include "wavekit/polymatrix.hpp"

namespace wavekit {

namespace detail {

inline std::vector<std::vector<int>> subsets_of_size(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

inline std::string plucker_name(const std::vector<int>& subset) {
  std::string name = "p";
  for (int i : subset) name += std::to_string(i);
  return name;
}

// Registry s_{a,i} for a symbolic m x n matrix.
inline RingPtr s_matrix_ring(int m, int n) {
  std::vector<std::pair<std::string, Block>> vars;
  for (int a = 1; a <= m; ++a)
    for (int i = 1; i <= n; ++i)
      vars.push_back({"s" + std::to_string(a) + std::to_string(i), Block::S});
  return Ring::make(vars);
}

}  // namespace detail

// The Grassmannian Gr(n-r, n) in Pluecker coordinates: one variable p_I per
// subset I of {1..n} with |I| = n-r (subsets in lexicographic order), and
// the ideal G of quadratic Pluecker relations cutting out the image of the
// embedding. G = 0 exactly when the embedding fills its projective space
// (n-r in {1, n-1, n}).
class PlueckerContext {
 public:
  PlueckerContext(int n, int r, RingPtr ring, std::vector<std::vector<int>> subsets,
                  Ideal relations)
      : n_(n),
        r_(r),
        ring_(std::move(ring)),
        subsets_(std::move(subsets)),
        relations_(std::move(relations)) {}

  int n() const { return n_; }
  int r() const { return r_; }
  int subset_size() const { return n_ - r_; }  // |I|
  const RingPtr& ring() const { return ring_; }
  const std::vector<std::vector<int>>& subsets() const { return subsets_; }
  const Ideal& relations() const { return relations_; }

  size_t variable_count() const { return subsets_.size(); }
  const std::string& variable_name(size_t i) const { return ring_->name(i); }

 private:
  int n_, r_;
  RingPtr ring_;
  std::vector<std::vector<int>> subsets_;
  Ideal relations_;
};

inline PlueckerContext plucker_context(int n, int r) {
  if (n < 1 || n > 9) throw PreconditionError("Pluecker coordinates require 1 <= n <= 9");
  if (r < 0 || r > n - 1) throw PreconditionError("Pluecker level r out of range [0, n-1]");
  int m = n - r;
  auto subsets = detail::subsets_of_size(n, m);
  std::vector<std::pair<std::string, Block>> vars;
  for (const auto& I : subsets) vars.push_back({detail::plucker_name(I), Block::P});
  RingPtr ring = Ring::make(std::move(vars));

  if (m == 1 || m == n - 1 || m == n)
    return PlueckerContext(n, r, ring, std::move(subsets), Ideal::zero(ring));

  // General case: kernel of p_I -> det(S_I) for a symbolic (n-r) x n matrix.
  RingPtr sring = detail::s_matrix_ring(m, n);
  std::map<size_t, Polynomial> images;
  for (size_t v = 0; v < subsets.size(); ++v) {
    const auto& I = subsets[v];
    std::vector<std::vector<Polynomial>> sub;
    for (int a = 1; a <= m; ++a) {
      std::vector<Polynomial> row;
      for (int i : I)
        row.push_back(Polynomial::variable(sring, "s" + std::to_string(a) + std::to_string(i)));
      sub.push_back(std::move(row));
    }
    images.emplace(v, detail::bareiss_det(std::move(sub), sring));
  }
  Ideal relations = ring_map_kernel(ring, images, Ideal::zero(sring));
  return PlueckerContext(n, r, ring, std::move(subsets), std::move(relations));
}

}  // namespace wavekit

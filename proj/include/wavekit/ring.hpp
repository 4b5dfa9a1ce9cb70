#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wavekit/error.hpp"

namespace wavekit {

// Role a variable plays in the pipelines: frequency y, amplitude z,
// Pluecker coordinate p, parametrization s, auxiliary w, saturation t.
enum class Block : unsigned char { Y, Z, P, S, W, T };

inline const char* block_name(Block b) {
  switch (b) {
    case Block::Y: return "Y";
    case Block::Z: return "Z";
    case Block::P: return "P";
    case Block::S: return "S";
    case Block::W: return "W";
    case Block::T: return "T";
  }
  return "?";
}

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Variable registry: an ordered list of named variables, each tagged with a
// block. Immutable once created; polynomials hold a RingPtr to their registry.
class Ring {
 public:
  static RingPtr make(std::vector<std::pair<std::string, Block>> vars) {
    if (vars.empty()) throw UsageError("empty variable registry");
    auto ring = std::shared_ptr<Ring>(new Ring());
    for (size_t i = 0; i < vars.size(); ++i) {
      auto& [name, block] = vars[i];
      if (name.empty()) throw UsageError("empty variable name");
      if (ring->index_.count(name)) throw UsageError("duplicate variable name: " + name);
      ring->index_.emplace(name, i);
      ring->names_.push_back(std::move(name));
      ring->blocks_.push_back(block);
      ring->by_block_[static_cast<size_t>(block)].push_back(i);
    }
    return ring;
  }

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  Block block(size_t i) const { return blocks_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  // -1 if absent.
  long index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : static_cast<long>(it->second);
  }
  bool has(std::string_view name) const { return index_of(name) >= 0; }

  const std::vector<size_t>& block_indices(Block b) const {
    return by_block_[static_cast<size_t>(b)];
  }

  // Structural equality: same names, same blocks, same order.
  bool same(const Ring& other) const {
    return names_ == other.names_ && blocks_ == other.blocks_;
  }

  // New registry with extra variables appended.
  RingPtr extended(const std::vector<std::pair<std::string, Block>>& extra) const {
    std::vector<std::pair<std::string, Block>> vars;
    vars.reserve(size() + extra.size());
    for (size_t i = 0; i < size(); ++i) vars.emplace_back(names_[i], blocks_[i]);
    for (const auto& v : extra) vars.push_back(v);
    return make(std::move(vars));
  }

  // New registry without the given variable indices.
  RingPtr without(const std::vector<size_t>& drop) const {
    std::vector<char> dead(size(), 0);
    for (size_t i : drop) dead.at(i) = 1;
    std::vector<std::pair<std::string, Block>> vars;
    for (size_t i = 0; i < size(); ++i)
      if (!dead[i]) vars.emplace_back(names_[i], blocks_[i]);
    return make(std::move(vars));
  }

  // A variable name not present in the registry: base, base2, base3, ...
  std::string fresh_name(const std::string& base) const {
    if (!has(base)) return base;
    for (int i = 2;; ++i) {
      std::string cand = base + std::to_string(i);
      if (!has(cand)) return cand;
    }
  }

 private:
  Ring() = default;

  std::vector<std::string> names_;
  std::vector<Block> blocks_;
  std::map<std::string, size_t> index_;
  std::array<std::vector<size_t>, 6> by_block_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same(*b));
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
  if (!same_ring(a, b)) throw UsageError(std::string("registry mismatch in ") + what);
}

}  // namespace wavekit

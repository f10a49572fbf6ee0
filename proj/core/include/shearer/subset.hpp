#pragma once

#include "shearer/errors.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace shearer {

/// Subset of the vertices 0..n-1 as a multi-word bitmask.
class VertexSubset {
public:
  VertexSubset() = default;
  explicit VertexSubset(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSubset from_mask(int universe, std::uint64_t mask) {
    VertexSubset s(universe);
    if (universe < 64 && (mask >> universe) != 0)
      throw PreconditionError("from_mask: bit beyond universe");
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  static VertexSubset full(int universe) {
    VertexSubset s(universe);
    for (int v = 0; v < universe; ++v) s.set(v);
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void set(int v) {
    check(v);
    words_[v >> 6] |= std::uint64_t(1) << (v & 63);
  }
  void reset(int v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }

  bool contains(const VertexSubset& other) const {
    for (std::size_t i = 0; i < words_.size() || i < other.words_.size(); ++i) {
      std::uint64_t a = i < words_.size() ? words_[i] : 0;
      std::uint64_t b = i < other.words_.size() ? other.words_[i] : 0;
      if ((b & ~a) != 0) return false;
    }
    return true;
  }

  bool intersects(const VertexSubset& other) const {
    std::size_t m = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < m; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  /// Single-word view; valid only while the universe fits in 64 bits.
  std::uint64_t low_mask() const {
    if (n_ > 64) throw CapExceeded("subset universe exceeds 64 vertices");
    return words_.empty() ? 0 : words_[0];
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if (test(v)) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSubset& a, const VertexSubset& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  VertexSubset operator&(const VertexSubset& o) const { return binop(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
  VertexSubset operator|(const VertexSubset& o) const { return binop(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
  VertexSubset minus(const VertexSubset& o) const { return binop(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }

private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw PreconditionError("vertex index out of universe");
  }
  template <class F>
  VertexSubset binop(const VertexSubset& o, F f) const {
    if (n_ != o.n_) throw PreconditionError("subset universes differ");
    VertexSubset r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = f(words_[i], o.words_[i]);
    return r;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace shearer

#pragma once

#include "shearer/errors.hpp"
#include "shearer/graph.hpp"
#include "shearer/numeric.hpp"

#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace shearer {

/// Memo of critical-function values for one fixed (graph, parameter) pair,
/// keyed by vertex subset. Dense storage once the universe fits the measure
/// cap, hash map beyond that. Insert-if-absent under a writer lock; values
/// are immutable afterwards, so shared readers are safe and recomputing an
/// entry is benign (every route yields the identical value). References
/// returned by put/find stay valid for the cache's lifetime.
template <class T>
class XiCache {
  enum : std::uint8_t { kEmpty = 0, kWriting = 1, kPresent = 2 };

public:
  explicit XiCache(int n) : n_(n) {
    if (n <= kMeasureCap) {
      dense_.resize(std::size_t(1) << n);
      state_ = std::vector<std::atomic<std::uint8_t>>(std::size_t(1) << n);
    }
  }

  int universe() const { return n_; }

  const T* find(std::uint64_t mask) const {
    if (!dense_.empty())
      return state_[mask].load(std::memory_order_acquire) == kPresent ? &dense_[mask] : nullptr;
    std::shared_lock lock(mutex_);
    auto it = map_.find(mask);
    return it == map_.end() ? nullptr : &it->second;
  }

  const T& put(std::uint64_t mask, T value) {
    if (!dense_.empty()) {
      std::uint8_t expected = kEmpty;
      if (state_[mask].compare_exchange_strong(expected, kWriting, std::memory_order_acq_rel)) {
        dense_[mask] = std::move(value);
        state_[mask].store(kPresent, std::memory_order_release);
      } else {
        // Another writer owns the slot; its value is identical by contract.
        while (state_[mask].load(std::memory_order_acquire) != kPresent) {}
      }
      return dense_[mask];
    }
    std::unique_lock lock(mutex_);
    return map_.emplace(mask, std::move(value)).first->second;
  }

  std::size_t entries() const {
    if (!dense_.empty()) {
      std::size_t c = 0;
      for (const auto& s : state_) c += s.load(std::memory_order_acquire) == kPresent;
      return c;
    }
    std::shared_lock lock(mutex_);
    return map_.size();
  }

private:
  int n_;
  std::vector<T> dense_;
  std::vector<std::atomic<std::uint8_t>> state_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, T> map_;
};

/// Sum over independent sets T of prod_{v in T} w_v, the empty set
/// contributing 1. Walks every independent set explicitly.
template <class T>
T xi_enumerate(const Graph& g, const Vec<T>& weights) {
  if (g.size() > kEnumerationCap) throw CapExceeded("xi_enumerate cap exceeded");
  if (static_cast<int>(weights.size()) != g.size())
    throw PreconditionError("weight vector size mismatch");
  T total(0);
  struct Frame {
    T product;
    std::uint64_t candidates;
  };
  std::uint64_t all = g.size() >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.size()) - 1;
  std::vector<Frame> stack{{T(1), all}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    total += f.product;
    std::uint64_t c = f.candidates;
    while (c) {
      int v = std::countr_zero(c);
      c &= c - 1;
      stack.push_back({f.product * weights[v], c & ~g.neighbors_mask(v)});
    }
  }
  return total;
}

namespace detail {

template <class T>
const T& xi_subset(const Graph& g, const Vec<T>& q, std::uint64_t mask, XiCache<T>& cache) {
  if (const T* hit = cache.find(mask)) return *hit;
  if (mask == 0) return cache.put(0, T(1));
  int v = pivot_vertex(g, mask);
  T del = xi_subset(g, q, mask & ~(std::uint64_t(1) << v), cache);
  T con = xi_subset(g, q, mask & ~g.closed_neighbors_mask(v), cache);
  return cache.put(mask, del - q[v] * con);
}

template <class T>
Vec<T> q_of(const Vec<T>& p) {
  Vec<T> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = T(1) - p[i];
  return q;
}

}  // namespace detail

/// Critical function on the induced subgraph G[mask] via the memoized
/// deletion-contraction identity, populating the cache along the way.
template <class T>
T xi_dc_subset(const Graph& g, const Vec<T>& p, std::uint64_t mask, XiCache<T>& cache) {
  if (g.size() > kEnumerationCap) throw CapExceeded("xi_dc cap exceeded");
  return detail::xi_subset(g, detail::q_of(p), mask, cache);
}

template <class T>
T xi_dc(const Graph& g, const Vec<T>& p, XiCache<T>& cache) {
  std::uint64_t all = g.size() >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.size()) - 1;
  return xi_dc_subset(g, p, all, cache);
}

/// Fills the cache with the critical function of every induced subgraph.
/// Ascending-mask order makes both referenced entries already present.
template <class T>
void xi_fill_all(const Graph& g, const Vec<T>& p, XiCache<T>& cache) {
  if (g.size() > kMeasureCap) throw CapExceeded("all-subset fill cap exceeded");
  Vec<T> q = detail::q_of(p);
  cache.put(0, T(1));
  std::uint64_t all = (std::uint64_t(1) << g.size()) - 1;
  for (std::uint64_t mask = 1; mask <= all; ++mask) {
    if (cache.find(mask)) continue;
    int v = detail::pivot_vertex(g, mask);
    const T* del = cache.find(mask & ~(std::uint64_t(1) << v));
    const T* con = cache.find(mask & ~g.closed_neighbors_mask(v));
    cache.put(mask, *del - q[v] * *con);
  }
}

/// One vertex open extension probability Q_W^v(p) as a ratio of critical
/// functions; throws OutsideRegion when the denominator is not positive.
template <class T>
T ovoep(const Graph& g, const VertexSubset& w, int v, const Vec<T>& p, XiCache<T>& cache) {
  if (w.test(v)) throw PreconditionError("ovoep: vertex already in the conditioning set");
  std::uint64_t wm = w.low_mask();
  T denom = xi_dc_subset(g, p, wm, cache);
  if (!(denom > T(0))) throw OutsideRegion("ovoep: conditioning set has nonpositive critical function");
  T numer = xi_dc_subset(g, p, wm | (std::uint64_t(1) << v), cache);
  return numer / denom;
}

/// Cell set inside a rows x cols box, one bitmask per row.
struct GridCells {
  int cols = 0;
  std::vector<std::uint32_t> row_masks;

  int rows() const { return static_cast<int>(row_masks.size()); }
  int cell_count() const {
    int c = 0;
    for (auto m : row_masks) c += std::popcount(m);
    return c;
  }
  bool test(int x, int y) const {
    return y >= 0 && y < rows() && x >= 0 && x < cols && ((row_masks[y] >> x) & 1u);
  }
  void set(int x, int y) { row_masks[y] |= std::uint32_t(1) << x; }
};

/// Critical function of the subgraph of the square lattice induced by the
/// cells, by a row transfer over masks of occupied cells. Homogeneous
/// parameter p; empty shape yields 1.
template <class T>
T xi_grid(const GridCells& cells, const T& p) {
  if (cells.cols > kGridColumnCap) throw CapExceeded("grid column cap exceeded");
  T q = T(1) - p;
  std::uint32_t full = cells.cols >= 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << cells.cols) - 1;
  // dp[m] = sum of weighted independent sets of the rows so far whose last
  // row picks exactly m.
  std::vector<T> dp;
  std::vector<std::uint32_t> dp_masks{0};
  dp.push_back(T(1));
  for (int y = 0; y < cells.rows(); ++y) {
    std::uint32_t allowed = cells.row_masks[y] & full;
    // Row patterns with no horizontally adjacent picks.
    std::vector<std::uint32_t> patterns;
    std::vector<T> weights;
    for (std::uint32_t m = allowed;; m = (m - 1) & allowed) {
      if ((m & (m << 1)) == 0) {
        patterns.push_back(m);
        T w(1);
        for (int c = std::popcount(m); c > 0; --c) w *= -q;
        weights.push_back(w);
      }
      if (m == 0) break;
    }
    std::vector<T> next(patterns.size(), T(0));
    for (std::size_t i = 0; i < dp_masks.size(); ++i) {
      if (dp[i] == T(0)) continue;
      for (std::size_t j = 0; j < patterns.size(); ++j)
        if ((dp_masks[i] & patterns[j]) == 0) next[j] += dp[i] * weights[j];
    }
    dp = std::move(next);
    dp_masks = std::move(patterns);
  }
  T total(0);
  for (const T& x : dp) total += x;
  return total;
}

/// Induced subgraph of the square lattice on the cells, vertices numbered in
/// row-major order of the present cells.
Graph cell_graph(const GridCells& cells);

}  // namespace shearer

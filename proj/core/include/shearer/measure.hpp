#pragma once

#include "shearer/dist.hpp"
#include "shearer/graph.hpp"
#include "shearer/xi.hpp"

#include <optional>
#include <utility>

namespace shearer {

enum class Region { Interior, Boundary, Outside };

/// Region membership verdict; witness is the least subset with nonpositive
/// critical function when the status is not Interior.
struct RegionStatus {
  Region region = Region::Interior;
  std::optional<std::uint64_t> witness;

  bool interior() const { return region == Region::Interior; }
};

const char* region_name(Region r);

/// Result of the explicit construction. The mass table always holds the
/// inclusion-exclusion values; negative_config marks the least configuration
/// carrying mass below -tol, in which case the signed measure is not a law
/// (the parameters sit outside the admissible region).
template <class T>
struct MeasureResult {
  Dist<T> dist;
  std::optional<std::uint64_t> negative_config;

  bool is_probability() const { return !negative_config.has_value(); }
};

/// Explicit law with marginals p and dependency graph g: the mass of the
/// configuration with zero-set W is sum over independent supersets T of W of
/// (-1)^{|T|-|W|} prod_{v in T} q_v.
template <class T>
MeasureResult<T> construct_measure(const Graph& g, const Vec<T>& p) {
  int n = g.size();
  if (n > kMeasureCap) throw CapExceeded("measure construction cap exceeded");
  if (static_cast<int>(p.size()) != n) throw PreconditionError("parameter size mismatch");
  for (const T& pv : p)
    if (pv < T(0) || pv > T(1)) throw PreconditionError("parameter outside [0,1]");
  std::uint64_t size = std::uint64_t(1) << n;
  std::vector<T> f(size, T(0));
  f[0] = T(1);
  // f starts as T -> [T independent] * prod (-q_v), via the same ordered
  // backtracking as the enumerator.
  {
    struct Frame {
      T product;
      std::uint64_t chosen, candidates;
    };
    std::uint64_t all = size - 1;
    std::vector<Frame> stack{{T(1), 0, all}};
    while (!stack.empty()) {
      Frame fr = std::move(stack.back());
      stack.pop_back();
      f[fr.chosen] = fr.product;
      std::uint64_t c = fr.candidates;
      while (c) {
        int v = std::countr_zero(c);
        c &= c - 1;
        stack.push_back({fr.product * (p[v] - T(1)), fr.chosen | (std::uint64_t(1) << v),
                         c & ~g.neighbors_mask(v)});
      }
    }
  }
  transform::superset_zeta(f, n);
  // mass(config) = (-1)^{|W|} f[W] with W the zero-set of the configuration.
  std::vector<T> mass(size);
  std::uint64_t full = size - 1;
  for (std::uint64_t w = 0; w < size; ++w) {
    T v = (std::popcount(w) & 1) ? -f[w] : f[w];
    mass[full & ~w] = std::move(v);
  }
  MeasureResult<T> out{Dist<T>(n, std::move(mass)), std::nullopt};
  T tol = scalar_traits<T>::zero_tol();
  for (std::uint64_t c = 0; c < size; ++c)
    if (out.dist.mass[c] < -tol) {
      out.negative_config = c;
      break;
    }
  return out;
}

/// Checks the critical function of every induced subgraph through the shared
/// cache. Interior means strictly positive everywhere; a zero (within the
/// backend tolerance) with no negatives is Boundary.
template <class T>
RegionStatus membership(const Graph& g, const Vec<T>& p, XiCache<T>& cache) {
  if (g.size() > kMeasureCap) throw CapExceeded("membership cap exceeded");
  xi_fill_all(g, p, cache);
  T tol = scalar_traits<T>::zero_tol();
  std::uint64_t size = std::uint64_t(1) << g.size();
  std::optional<std::uint64_t> zero_witness;
  for (std::uint64_t w = 0; w < size; ++w) {
    Sign s = classify(*cache.find(w), tol);
    if (s == Sign::Negative) return {Region::Outside, w};
    if (s == Sign::Zero && !zero_witness) zero_witness = w;
  }
  if (zero_witness) return {Region::Boundary, zero_witness};
  return {Region::Interior, std::nullopt};
}

template <class T>
RegionStatus membership(const Graph& g, const Vec<T>& p) {
  XiCache<T> cache(g.size());
  return membership(g, p, cache);
}

template <class T>
struct BoundaryCrossing {
  Vec<T> r;
  T t;
};

namespace detail {

/// True iff some induced subgraph has a strictly negative critical function.
template <class T>
bool any_negative_subset(const Graph& g, const Vec<T>& p) {
  XiCache<T> cache(g.size());
  xi_fill_all(g, p, cache);
  std::uint64_t size = std::uint64_t(1) << g.size();
  for (std::uint64_t w = 0; w < size; ++w)
    if (*cache.find(w) < T(0)) return true;
  return false;
}

}  // namespace detail

/// Unique crossing of the segment from p to the all-ones vector with the
/// region boundary: r = p + t(1-p), found by bisection on t against the
/// all-subset nonnegativity predicate. p must not be Interior.
template <class T>
BoundaryCrossing<T> boundary_crossing(const Graph& g, const Vec<T>& p, const T& t_tol) {
  RegionStatus at_p = membership(g, p);
  if (at_p.region == Region::Interior)
    throw PreconditionError("boundary_crossing: parameters already interior");
  auto point = [&](const T& t) {
    Vec<T> r(p.size());
    for (std::size_t v = 0; v < p.size(); ++v) r[v] = p[v] + t * (T(1) - p[v]);
    return r;
  };
  if (at_p.region == Region::Boundary) return {p, T(0)};
  T lo(0), hi(1);  // lo outside, hi not outside
  while (hi - lo > t_tol) {
    T mid = (lo + hi) / 2;
    if (detail::any_negative_subset(g, point(mid)))
      lo = mid;
    else
      hi = mid;
  }
  return {point(hi), hi};
}

template <class T>
BoundaryCrossing<T> boundary_crossing(const Graph& g, const Vec<T>& p) {
  if constexpr (scalar_traits<T>::exact) {
    // Deep enough that residual masses stay negligible against any
    // root-taking downstream (see dominated_value on counterexamples).
    return boundary_crossing(g, p, Rational(BigInt(1), BigInt(1) << 200));
  } else {
    return boundary_crossing(g, p, 1e-12);
  }
}

/// Total order of w where each prefix pair is escaping, peeled from the back:
/// the last vertex has a neighbour in the exterior, the one before in the
/// exterior or among later vertices, and so on. Returns (vertex, escape)
/// pairs in order.
std::vector<std::pair<int, int>> escaping_order(const Graph& g, const VertexSubset& w,
                                                const VertexSubset& exterior);

/// Law of Y v X with Y the explicit measure at p and X an independent
/// product field at c.
template <class T>
Dist<T> or_composition(const Graph& g, const Vec<T>& p, const Vec<T>& c) {
  if (g.size() > kComposeCap) throw CapExceeded("or-composition cap exceeded");
  MeasureResult<T> y = construct_measure(g, p);
  if (!y.is_probability())
    throw OutsideRegion("or_composition: parameters outside the admissible region");
  return or_convolve(y.dist, product_dist(c));
}

/// Truncated one-vertex extension infimum over escaping conditioning sets
/// within the given radius, with the guaranteed neighbour lower bound.
template <class T>
struct IntrinsicVector {
  Vec<T> upper;  // truncated infimum; only an upper bound on the true value
  Vec<T> lower;  // min over neighbours of q_w
};

template <class T>
IntrinsicVector<T> intrinsic_vector(const Graph& g, const Vec<T>& p, int radius) {
  IntrinsicVector<T> out;
  out.upper.resize(g.size());
  out.lower.resize(g.size());
  for (int v = 0; v < g.size(); ++v) {
    // Ball of the given radius around v, v excluded.
    std::vector<int> dist(g.size(), -1);
    std::vector<int> ball;
    std::vector<int> queue{v};
    dist[v] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.erase(queue.begin());
      if (dist[u] >= radius) continue;
      for (int t : g.neighbors(u))
        if (dist[t] < 0) {
          dist[t] = dist[u] + 1;
          ball.push_back(t);
          queue.push_back(t);
        }
    }
    if (static_cast<int>(ball.size()) + 1 > 18) throw CapExceeded("intrinsic ball cap exceeded");
    // Local universe: ball vertices then v.
    std::vector<int> local(ball);
    local.push_back(v);
    InducedGraph sub = induced_subgraph(g, [&] {
      VertexSubset s(g.size());
      for (int u : local) s.set(u);
      return s;
    }());
    Vec<T> sp(sub.graph.size());
    int lv = -1;
    std::uint64_t nbr_in_ball = 0;
    for (int i = 0; i < sub.graph.size(); ++i) {
      sp[i] = p[sub.original_index[i]];
      if (sub.original_index[i] == v) lv = i;
    }
    bool has_outside_neighbor = false;
    for (int t : g.neighbors(v)) {
      bool inside = false;
      for (int i = 0; i < sub.graph.size(); ++i)
        if (sub.original_index[i] == t) {
          nbr_in_ball |= std::uint64_t(1) << i;
          inside = true;
        }
      if (!inside) has_outside_neighbor = true;
    }
    XiCache<T> cache(sub.graph.size());
    std::uint64_t universe = (std::uint64_t(1) << sub.graph.size()) - 1;
    std::uint64_t candidates = universe & ~(std::uint64_t(1) << lv);
    T best = p[v];  // W = empty
    for (std::uint64_t wmask = candidates; wmask != 0; wmask = (wmask - 1) & candidates) {
      bool escaping = has_outside_neighbor || (nbr_in_ball & ~wmask) != 0;
      if (!escaping) continue;
      T denom = xi_dc_subset(sub.graph, sp, wmask, cache);
      if (!(denom > T(0)))
        throw OutsideRegion("intrinsic_vector: window outside the admissible region");
      T val = xi_dc_subset(sub.graph, sp, wmask | (std::uint64_t(1) << lv), cache) / denom;
      if (val < best) best = val;
    }
    out.upper[v] = best;
    T lower(1);
    for (int t : g.neighbors(v)) lower = std::min(lower, T(1) - p[t]);
    out.lower[v] = g.degree(v) == 0 ? T(0) : lower;
  }
  return out;
}

}  // namespace shearer

#pragma once

#include "shearer/dist.hpp"
#include "shearer/maxflow.hpp"
#include "shearer/measure.hpp"

#include <cstdint>
#include <functional>
#include <tuple>

namespace shearer {

/// Indicator of an upward closed set of configurations.
struct UpSet {
  int n = 0;
  std::vector<std::uint8_t> member;  // indexed by configuration

  bool closed_upward() const {
    std::uint64_t size = std::uint64_t(1) << n;
    for (std::uint64_t c = 0; c < size; ++c)
      if (member[c])
        for (int i = 0; i < n; ++i)
          if (!(c >> i & 1) && !member[c | (std::uint64_t(1) << i)]) return false;
    return true;
  }

  template <class T>
  T probability(const Dist<T>& d) const {
    T t(0);
    for (std::uint64_t c = 0; c < d.configs(); ++c)
      if (member[c]) t += d.mass[c];
    return t;
  }
};

/// Joint mass on ordered configuration pairs witnessing domination.
template <class T>
struct CouplingPlan {
  int n = 0;
  std::vector<std::tuple<std::uint64_t, std::uint64_t, T>> entries;  // (y, x, mass)

  /// Row sums must reproduce the Y law, column sums the X law, and every
  /// entry must sit on or above the diagonal.
  bool valid(const Dist<T>& dY, const Dist<T>& dX, const T& tol) const {
    std::vector<T> row(dY.configs(), T(0)), col(dX.configs(), T(0));
    for (const auto& [y, x, m] : entries) {
      if ((y & x) != x) return false;
      if (m < -tol) return false;
      row[y] += m;
      col[x] += m;
    }
    for (std::uint64_t c = 0; c < dY.configs(); ++c) {
      T dy = row[c] - dY.mass[c];
      T dx = col[c] - dX.mass[c];
      if (dy > tol || -dy > tol || dx > tol || -dx > tol) return false;
    }
    return true;
  }
};

template <class T>
struct StrassenResult {
  bool dominates = false;
  CouplingPlan<T> plan;  // populated on success
  UpSet violating;       // populated on failure
};

template <class T>
struct domination_defaults {
  static T slack() { return T(0); }
  static T sigma_tol() { return Rational(1, BigInt(1) << 40); }
};
template <>
struct domination_defaults<double> {
  static double slack() { return 1e-9; }
  static double sigma_tol() { return 1e-10; }
};

/// Decides Y >= X stochastically as a transport feasibility problem: route
/// the X mass to Y configurations above it. Feasible iff max flow covers the
/// whole unit mass (up to slack); the min cut of an infeasible instance
/// yields a violating up-set.
template <class T>
StrassenResult<T> strassen_dominates(const Dist<T>& dY, const Dist<T>& dX, const T& slack) {
  if (dY.n != dX.n) throw PreconditionError("strassen: dimension mismatch");
  int n = dY.n;
  if (n > kFlowCap) throw CapExceeded("strassen cap exceeded");
  std::uint64_t size = std::uint64_t(1) << n;
  int source = 0, sink = static_cast<int>(2 * size) + 1;
  auto ynode = [](std::uint64_t c) { return static_cast<int>(c) + 1; };
  auto xnode = [size](std::uint64_t c) { return static_cast<int>(size + c) + 1; };
  MaxFlow<T> net(sink + 1);
  std::vector<int> yedge(size, -1);
  std::vector<T> ycap(size, T(0));
  std::vector<std::vector<std::pair<std::uint64_t, int>>> pair_edges(size);
  for (std::uint64_t c = 0; c < size; ++c) {
    if (dY.mass[c] > T(0)) {
      ycap[c] = dY.mass[c];
      yedge[c] = net.add_edge(source, ynode(c), dY.mass[c]);
    }
    if (dX.mass[c] > T(0)) net.add_edge(xnode(c), sink, dX.mass[c]);
  }
  // y covers every x below it; submask walk keeps this at 3^n edges.
  for (std::uint64_t y = 0; y < size; ++y) {
    if (!(dY.mass[y] > T(0))) continue;
    for (std::uint64_t x = y;; x = (x - 1) & y) {
      if (dX.mass[x] > T(0)) pair_edges[y].emplace_back(x, net.add_edge(ynode(y), xnode(x), T(2)));
      if (x == 0) break;
    }
  }
  T eps = scalar_traits<T>::exact ? T(0) : T(1e-14);
  T flow = net.run(source, sink, eps);
  StrassenResult<T> out;
  out.dominates = T(1) - flow <= slack;
  if (out.dominates) {
    out.plan.n = n;
    for (std::uint64_t y = 0; y < size; ++y)
      for (auto [x, id] : pair_edges[y]) {
        T f = net.flow_on(id, T(2));
        if (f > T(0)) out.plan.entries.emplace_back(y, x, f);
      }
  } else {
    // Up-closure of the x side of the min cut violates domination by at
    // least the flow deficit.
    auto reach = net.source_side(source, eps);
    out.violating.n = n;
    out.violating.member.assign(size, 0);
    for (std::uint64_t c = 0; c < size; ++c)
      if (dX.mass[c] > T(0) && !reach[xnode(c)]) out.violating.member[c] = 1;
    for (int i = 0; i < n; ++i)
      for (std::uint64_t c = 0; c < size; ++c)
        if (c >> i & 1)
          out.violating.member[c] =
              out.violating.member[c] | out.violating.member[c ^ (std::uint64_t(1) << i)];
  }
  return out;
}

template <class T>
StrassenResult<T> strassen_dominates(const Dist<T>& dY, const Dist<T>& dX) {
  return strassen_dominates(dY, dX, domination_defaults<T>::slack());
}

/// Exhaustive check of P(Y in U) >= P(X in U) over every up-set U; the
/// doubly exponential growth caps this at n <= 4.
template <class T>
bool upset_dominates(const Dist<T>& dY, const Dist<T>& dX, const T& slack) {
  if (dY.n != dX.n) throw PreconditionError("upset oracle: dimension mismatch");
  if (dY.n > kUpSetCap) throw CapExceeded("up-set oracle cap exceeded");
  int n = dY.n;
  std::uint32_t configs = std::uint32_t(1) << n;
  // Up-sets as bitmasks over configurations.
  for (std::uint64_t u = 0; u < (std::uint64_t(1) << configs); ++u) {
    bool upset = true;
    for (std::uint32_t c = 0; c < configs && upset; ++c)
      if (u >> c & 1)
        for (int i = 0; i < n; ++i)
          if (!(c >> i & 1) && !(u >> (c | (1u << i)) & 1)) {
            upset = false;
            break;
          }
    if (!upset) continue;
    T py(0), px(0);
    for (std::uint32_t c = 0; c < configs; ++c)
      if (u >> c & 1) {
        py += dY.mass[c];
        px += dX.mass[c];
      }
    if (py < px - slack) return false;
  }
  return true;
}

template <class T>
bool upset_dominates(const Dist<T>& dY, const Dist<T>& dX) {
  return upset_dominates(dY, dX, domination_defaults<T>::slack());
}

/// Largest c with d >= product(c), by bisection; the dominated set is a
/// closed down-set, so the bracket [0, min marginal] is exact.
template <class T>
T dominated_value(const Dist<T>& d, const T& tol) {
  if (d.n > kFlowCap) throw CapExceeded("dominated_value cap exceeded");
  T hi(1);
  for (int v = 0; v < d.n; ++v) hi = std::min(hi, d.marginal(v));
  if (hi <= T(0)) return T(0);
  T feasibility = scalar_traits<T>::exact ? T(0) : T(1e-12);
  auto feasible = [&](const T& c) {
    Vec<T> cv(d.n, c);
    return strassen_dominates(d, product_dist(cv), feasibility).dominates;
  };
  if (feasible(hi)) return hi;
  T lo(0);
  while (hi - lo > tol) {
    T mid = (lo + hi) / 2;
    if (feasible(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

template <class T>
T dominated_value(const Dist<T>& d) {
  return dominated_value(d, domination_defaults<T>::sigma_tol());
}

/// Law of Y ^ X with X an independent product field at x.
template <class T>
Dist<T> min_composition(const Dist<T>& dY, const Vec<T>& x) {
  return and_convolve(dY, product_dist(x));
}

/// Necessary conditions for domination: all-ones probabilities dominate and
/// all-zeros probabilities are dominated, over every vertex subset.
template <class T>
std::pair<bool, bool> necessary_check(const Dist<T>& dY, const Dist<T>& dX, const T& slack) {
  if (dY.n != dX.n) throw PreconditionError("necessary_check: dimension mismatch");
  if (dY.n > kFlowCap) throw CapExceeded("necessary_check cap exceeded");
  auto y1 = dY.all_ones_table(), x1 = dX.all_ones_table();
  auto y0 = dY.all_zeros_table(), x0 = dX.all_zeros_table();
  bool ones = true, zeros = true;
  for (std::uint64_t w = 0; w < dY.configs(); ++w) {
    if (y1[w] < x1[w] - slack) ones = false;
    if (y0[w] > x0[w] + slack) zeros = false;
  }
  return {ones, zeros};
}

template <class T>
std::pair<bool, bool> necessary_check(const Dist<T>& dY, const Dist<T>& dX) {
  return necessary_check(dY, dX, domination_defaults<T>::slack());
}

/// The boundary coupling: cross the segment [p, 1] to the boundary vector r,
/// solve p = x r, and thin the explicit measure at r with a product field at
/// x. The result keeps marginals p and strong dependency graph g but puts
/// zero mass on the all-ones pattern of the witness, so it dominates no
/// non-trivial product field.
template <class T>
struct Counterexample {
  Dist<T> dist;
  Vec<T> r, x;
  T t;
};

template <class T>
Counterexample<T> counterexample(const Graph& g, const Vec<T>& p) {
  if (g.size() > kCounterexampleCap) throw CapExceeded("counterexample cap exceeded");
  BoundaryCrossing<T> cross = boundary_crossing(g, p);  // throws if p Interior
  Vec<T> x(p.size());
  for (std::size_t v = 0; v < p.size(); ++v)
    x[v] = cross.r[v] == T(0) ? T(1) : p[v] / cross.r[v];
  MeasureResult<T> shearer = construct_measure(g, cross.r);
  Dist<T> z = min_composition(shearer.dist, x);
  return {std::move(z), std::move(cross.r), std::move(x), cross.t};
}

/// Conditional-probability oracle: P(Z_len = 1 | Z_0..Z_{len-1} = prefix).
using CondOracle = std::function<double(std::uint64_t prefix, int len)>;

CondOracle make_cond_oracle(Dist<double> d);

/// Sequential coupling of Z against an independent product floor: one shared
/// uniform per step yields (z,x) with z >= x whenever the conditional stays
/// above the floor. Aborts when it does not.
std::vector<std::pair<std::uint64_t, std::uint64_t>> russo_sample(
    const CondOracle& cond, const std::vector<double>& floor_p, std::uint64_t seed, int count);

}  // namespace shearer

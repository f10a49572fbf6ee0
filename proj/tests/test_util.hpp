#pragma once

#include "shearer/bounds.hpp"
#include "shearer/domination.hpp"
#include "shearer/graph.hpp"
#include "shearer/grid.hpp"
#include "shearer/measure.hpp"
#include "shearer/xi.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <thread>

namespace testutil {

using namespace shearer;

inline Graph random_graph(Rng& rng, int n, double edge_p) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < edge_p) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline VecD random_p(Rng& rng, int n, double lo, double hi) {
  VecD p(n);
  for (double& x : p) x = lo + (hi - lo) * rng.uniform();
  return p;
}

/// Random exact rationals with small denominators.
inline VecQ random_pq(Rng& rng, int n, int max_den) {
  VecQ p(n);
  for (Rational& x : p) {
    long den = 2 + static_cast<long>(rng.uniform() * (max_den - 2));
    long num = static_cast<long>(rng.uniform() * (den + 1));
    x = Rational(num, den);
  }
  return p;
}

template <class T>
Vec<T> shearer_weights(const Vec<T>& p) {
  Vec<T> w(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) w[i] = p[i] - T(1);
  return w;
}

inline VecQ exact_vec(const VecD& p) {
  VecQ q;
  q.reserve(p.size());
  for (double x : p) q.emplace_back(x);
  return q;
}

inline Dist<double> random_dist(Rng& rng, int n) {
  std::vector<double> mass(std::size_t(1) << n);
  double total = 0;
  for (double& m : mass) {
    m = rng.uniform();
    total += m;
  }
  for (double& m : mass) m /= total;
  return Dist<double>(n, std::move(mass));
}

/// Random law with masses on a 1/grid lattice (exact in both backends).
inline Dist<Rational> random_dist_q(Rng& rng, int n, int grid) {
  std::vector<long> ticks(std::size_t(1) << n, 0);
  for (int t = 0; t < grid; ++t) ticks[static_cast<std::size_t>(rng.uniform() * ticks.size())]++;
  std::vector<Rational> mass(ticks.size());
  for (std::size_t i = 0; i < ticks.size(); ++i) mass[i] = Rational(ticks[i], grid);
  return Dist<Rational>(n, std::move(mass));
}

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline std::uint64_t full_mask(int n) { return (std::uint64_t(1) << n) - 1; }

}  // namespace testutil

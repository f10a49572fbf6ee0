#include "test_util.hpp"

using namespace shearer;
using namespace testutil;

TEST_SUITE_BEGIN("xi");

TEST_CASE("enumeration at fixed points") {
  Graph k2 = complete_graph(2);
  CHECK(xi_enumerate<double>(k2, {-0.25, -0.25}) == doctest::Approx(0.5).epsilon(1e-14));
  Graph p3 = path_graph(3);
  CHECK(xi_enumerate<double>(p3, {-0.3, -0.3, -0.3}) == doctest::Approx(0.19).epsilon(1e-14));
  Rng rng(3);
  Graph g = random_graph(rng, 8, 0.4);
  CHECK(xi_enumerate<double>(g, VecD(8, 0.0)) == 1.0);
  CHECK(xi_enumerate<Rational>(k2, {Rational(-1, 4), Rational(-1, 4)}) == Rational(1, 2));
  CHECK_THROWS_AS(xi_enumerate<double>(k2, {-0.25}), PreconditionError);
}

TEST_CASE("deletion-contraction at fixed points") {
  Graph k2 = complete_graph(2);
  XiCache<double> cache(2);
  CHECK(xi_dc<double>(k2, {0.75, 0.75}, cache) == doctest::Approx(0.5).epsilon(1e-14));
  // The recursion walked through the singleton and the empty set.
  CHECK(*cache.find(0) == 1.0);
  CHECK(*cache.find(0b10) == 0.75);

  Graph one(1, {});
  XiCache<double> c1(1);
  CHECK(xi_dc<double>(one, {0.3}, c1) == doctest::Approx(0.3));

  Graph c4 = cycle_graph(4);
  XiCache<double> c2(4);
  CHECK(xi_dc<double>(c4, VecD(4, 0.75), c2) == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(xi_enumerate(c4, shearer_weights(VecD(4, 0.75))) == doctest::Approx(0.125));
}

TEST_CASE("dc equals enumeration on random instances") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng.uniform() * 10);
    Graph g = random_graph(rng, n, rng.uniform());
    VecD p = random_p(rng, n, 0.2, 1.0);
    XiCache<double> cache(n);
    double dc = xi_dc(g, p, cache);
    double en = xi_enumerate(g, shearer_weights(p));
    CHECK(near(dc, en, 1e-12));
  }
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng.uniform() * 9);
    Graph g = random_graph(rng, n, rng.uniform());
    VecQ p = random_pq(rng, n, 32);
    XiCache<Rational> cache(n);
    CHECK(xi_dc(g, p, cache) == xi_enumerate(g, shearer_weights(p)));
  }
}

TEST_CASE("fundamental identity holds at every pivot") {
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform() * 7);
    Graph g = random_graph(rng, n, rng.uniform());
    VecQ p = random_pq(rng, n, 16);
    Rational whole = xi_enumerate(g, shearer_weights(p));
    for (int v = 0; v < n; ++v) {
      VertexSubset rest = VertexSubset::full(n);
      rest.reset(v);
      auto del = induced_subgraph(g, rest);
      VertexSubset far = rest;
      for (int u : g.neighbors(v)) far.reset(u);
      auto con = induced_subgraph(g, far);
      VecQ pd, pc;
      for (int i : del.original_index) pd.push_back(p[i]);
      for (int i : con.original_index) pc.push_back(p[i]);
      Rational rhs = xi_enumerate(del.graph, shearer_weights(pd)) -
                     (Rational(1) - p[v]) * xi_enumerate(con.graph, shearer_weights(pc));
      CHECK(whole == rhs);
    }
  }
}

TEST_CASE("monotone in p inside the region") {
  Rng rng(31);
  int hits = 0;
  for (int trial = 0; trial < 200 && hits < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform() * 6);
    Graph g = random_graph(rng, n, rng.uniform());
    VecD p = random_p(rng, n, 0.6, 1.0);
    if (!membership(g, p).interior()) continue;
    VecD p2 = p;
    for (double& x : p2) x += (1.0 - x) * rng.uniform();
    if (!membership(g, p2).interior()) continue;
    ++hits;
    XiCache<double> c1(n), c2(n);
    double a = xi_dc(g, p, c1), b = xi_dc(g, p2, c2);
    CHECK(a <= b + 1e-12);
  }
  CHECK(hits >= 20);
}

TEST_CASE("open extension probabilities") {
  Graph p3 = path_graph(3);
  VecD p(3, 0.7);
  XiCache<double> cache(3);
  SUBCASE("empty condition gives the marginal") {
    CHECK(ovoep(p3, VertexSubset(3), 1, p, cache) == doctest::Approx(0.7));
  }
  SUBCASE("adjacent singleton") {
    CHECK(ovoep(p3, VertexSubset::from_mask(3, 0b001), 1, p, cache) ==
          doctest::Approx(4.0 / 7.0).epsilon(1e-12));
  }
  SUBCASE("non-adjacent singleton leaves the marginal") {
    CHECK(ovoep(p3, VertexSubset::from_mask(3, 0b001), 2, p, cache) == doctest::Approx(0.7));
  }
  SUBCASE("vertex already conditioned") {
    CHECK_THROWS_AS(ovoep(p3, VertexSubset::from_mask(3, 0b001), 0, p, cache),
                    PreconditionError);
  }
  SUBCASE("nonpositive denominator reports OutsideRegion") {
    VecD bad{0.4, 0.4, 0.9};
    XiCache<double> c(3);
    CHECK_THROWS_AS(ovoep(p3, VertexSubset::from_mask(3, 0b011), 2, bad, c), OutsideRegion);
  }
}

TEST_CASE("ovoep decreases as the condition grows") {
  Rng rng(41);
  int hits = 0;
  for (int trial = 0; trial < 300 && hits < 50; ++trial) {
    int n = 3 + static_cast<int>(rng.uniform() * 5);
    Graph g = random_graph(rng, n, rng.uniform() * 0.7);
    VecD p = random_p(rng, n, 0.75, 1.0);
    if (!membership(g, p).interior()) continue;
    int v = static_cast<int>(rng.uniform() * n);
    VertexSubset w(n), u(n);
    for (int i = 0; i < n; ++i) {
      if (i == v) continue;
      double r = rng.uniform();
      if (r < 0.3) w.set(i);
      if (r < 0.6) u.set(i);  // w is a subset of u
    }
    ++hits;
    XiCache<double> cache(n);
    CHECK(ovoep(g, w, v, p, cache) >= ovoep(g, u, v, p, cache) - 1e-12);
  }
  CHECK(hits >= 30);
}

TEST_CASE("ovoep bounds: marginal above, escapes below") {
  Rng rng(43);
  int hits = 0;
  for (int trial = 0; trial < 200 && hits < 30; ++trial) {
    int n = 3 + static_cast<int>(rng.uniform() * 4);
    Graph g = random_graph(rng, n, rng.uniform() * 0.8);
    VecD p = random_p(rng, n, 0.8, 1.0);
    if (!membership(g, p).interior()) continue;
    ++hits;
    XiCache<double> cache(n);
    for (int v = 0; v < n; ++v) {
      std::uint64_t others = full_mask(n) & ~(std::uint64_t(1) << v);
      for (std::uint64_t wm = others;; wm = (wm - 1) & others) {
        double q = ovoep(g, VertexSubset::from_mask(n, wm), v, p, cache);
        CHECK(q <= p[v] + 1e-12);
        for (int w : g.neighbors(v))
          if (!(wm >> w & 1)) CHECK(q >= (1.0 - p[w]) - 1e-12);
        if (wm == 0) break;
      }
    }
  }
  CHECK(hits >= 10);
}

TEST_CASE("escaping extensions stay above 1 - 1/D at the tree bound") {
  // Degree-3 ball at the critical homogeneous parameter of the 3-regular
  // tree: every escaping pair extends with probability at least 2/3.
  Graph g = tree_ball(3, 2);
  int n = g.size();
  double q = 4.0 / 27.0;
  VecD p(n, 1.0 - q);
  XiCache<double> cache(n);
  for (int v = 0; v < n; ++v) {
    std::uint64_t others = full_mask(n) & ~(std::uint64_t(1) << v);
    for (std::uint64_t wm = others;; wm = (wm - 1) & others) {
      bool escaping = (g.neighbors_mask(v) & ~wm) != 0;
      if (escaping)
        CHECK(ovoep(g, VertexSubset::from_mask(n, wm), v, p, cache) >= 1.0 - 1.0 / 3.0 - 1e-12);
      if (wm == 0) break;
    }
  }
}

TEST_CASE("grid transfer matrix agrees with enumeration") {
  GridCells box2;
  box2.cols = 2;
  box2.row_masks = {0b11, 0b11};
  CHECK(xi_grid(box2, 0.75) == doctest::Approx(0.125).epsilon(1e-13));

  GridCells row3;
  row3.cols = 3;
  row3.row_masks = {0b111};
  CHECK(xi_grid(row3, 0.7) == doctest::Approx(0.19).epsilon(1e-13));

  GridCells empty;
  empty.cols = 0;
  CHECK(xi_grid(empty, 0.9) == 1.0);

  CHECK(xi_grid(box2, Rational(3, 4)) == Rational(1, 8));

  Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    GridCells cells;
    cells.cols = 1 + static_cast<int>(rng.uniform() * 5);
    int rows = 1 + static_cast<int>(rng.uniform() * 4);
    for (int r = 0; r < rows; ++r) {
      std::uint32_t m = 0;
      for (int c = 0; c < cells.cols; ++c)
        if (rng.uniform() < 0.7) m |= 1u << c;
      cells.row_masks.push_back(m);
    }
    if (cells.cell_count() > 18) continue;
    double p = 0.5 + 0.5 * rng.uniform();
    Graph g = cell_graph(cells);
    double direct = xi_enumerate(g, VecD(g.size(), p - 1.0));
    CHECK(near(xi_grid(cells, p), direct, 1e-12));
  }

  GridCells wide;
  wide.cols = 21;
  wide.row_masks = {0};
  CHECK_THROWS_AS(xi_grid(wide, 0.5), CapExceeded);
}

TEST_CASE("extension form of the fundamental identity") {
  // Q_W^v = 1 - q_v / prod_i Q_{W \ {w_i..w_m}}^{w_i} over the neighbours
  // of v inside W, peeled from the back.
  Rng rng(47);
  int hits = 0;
  for (int trial = 0; trial < 200 && hits < 40; ++trial) {
    int n = 3 + static_cast<int>(rng.uniform() * 5);
    Graph g = random_graph(rng, n, rng.uniform() * 0.8);
    VecD p = random_p(rng, n, 0.8, 1.0);
    if (!membership(g, p).interior()) continue;
    int v = static_cast<int>(rng.uniform() * n);
    VertexSubset w(n);
    for (int i = 0; i < n; ++i)
      if (i != v && rng.uniform() < 0.5) w.set(i);
    ++hits;
    XiCache<double> cache(n);
    double lhs = ovoep(g, w, v, p, cache);
    std::vector<int> inner;
    for (int u : g.neighbors(v))
      if (w.test(u)) inner.push_back(u);
    double denom = 1.0;
    VertexSubset rest = w;
    while (!inner.empty()) {
      int u = inner.back();
      inner.pop_back();
      rest.reset(u);
      denom *= ovoep(g, rest, u, p, cache);
    }
    CHECK(near(lhs, 1.0 - (1.0 - p[v]) / denom, 1e-11));
  }
  CHECK(hits >= 20);
}

TEST_CASE("shared cache under concurrent extension queries") {
  Graph g = kfuzz_window(2, 10);
  VecD p(10, 0.9);
  XiCache<double> serial_cache(10);
  std::vector<double> serial;
  for (int v = 0; v < 10; ++v) {
    VertexSubset w = VertexSubset::full(10);
    w.reset(v);
    serial.push_back(ovoep(g, w, v, p, serial_cache));
  }
  XiCache<double> shared(10);
  std::vector<double> parallel(10);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      for (int v = t; v < 10; v += 4) {
        VertexSubset w = VertexSubset::full(10);
        w.reset(v);
        parallel[v] = ovoep(g, w, v, p, shared);
      }
    });
  for (auto& th : workers) th.join();
  for (int v = 0; v < 10; ++v) CHECK(parallel[v] == serial[v]);
}

TEST_CASE("cache fills every subset once asked") {
  Graph p4 = path_graph(4);
  VecD p(4, 0.8);
  XiCache<double> cache(4);
  xi_fill_all(p4, p, cache);
  CHECK(cache.entries() == 16);
  // Entries satisfy the identity against their own sub-entries at any pivot.
  for (std::uint64_t m = 1; m < 16; ++m) {
    std::uint64_t rest = m;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      double lhs = *cache.find(m);
      double rhs = *cache.find(m & ~(std::uint64_t(1) << v)) -
                   0.2 * *cache.find(m & ~p4.closed_neighbors_mask(v));
      CHECK(near(lhs, rhs, 1e-13));
    }
  }
}

TEST_SUITE_END();

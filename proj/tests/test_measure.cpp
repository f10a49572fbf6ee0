#include "test_util.hpp"

#include <algorithm>
#include <map>

using namespace shearer;
using namespace testutil;

TEST_SUITE_BEGIN("measure");

TEST_CASE("explicit construction at fixed points") {
  Graph k2 = complete_graph(2);
  SUBCASE("boundary parameters") {
    auto m = construct_measure<double>(k2, {0.5, 0.5});
    REQUIRE(m.is_probability());
    CHECK(m.dist.mass[0b00] == 0.0);
    CHECK(m.dist.mass[0b01] == doctest::Approx(0.5));
    CHECK(m.dist.mass[0b10] == doctest::Approx(0.5));
    CHECK(m.dist.mass[0b11] == 0.0);
  }
  SUBCASE("interior parameters, exact") {
    auto m = construct_measure<Rational>(k2, VecQ(2, Rational(3, 4)));
    REQUIRE(m.is_probability());
    CHECK(m.dist.mass[0b00] == 0);
    CHECK(m.dist.mass[0b01] == Rational(1, 4));
    CHECK(m.dist.mass[0b10] == Rational(1, 4));
    CHECK(m.dist.mass[0b11] == Rational(1, 2));
  }
  SUBCASE("edgeless graphs give the product law") {
    Graph e3 = build_graph(3, {});
    VecD p{0.2, 0.5, 0.9};
    auto m = construct_measure(e3, p);
    Dist<double> prod = product_dist(p);
    for (std::uint64_t c = 0; c < 8; ++c)
      CHECK(m.dist.mass[c] == doctest::Approx(prod.mass[c]).epsilon(1e-14));
  }
  SUBCASE("outside the region the signed measure is flagged") {
    auto m = construct_measure<double>(k2, {0.4, 0.4});
    CHECK_FALSE(m.is_probability());
    CHECK(*m.negative_config == 0b11);
    CHECK(m.dist.mass[0b11] == doctest::Approx(-0.2));
  }
}

TEST_CASE("all-ones mass is the critical function") {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng.uniform() * 7);
    Graph g = random_graph(rng, n, rng.uniform());
    VecQ p = random_pq(rng, n, 20);
    auto m = construct_measure(g, p);
    XiCache<Rational> cache(n);
    CHECK(m.dist.mass[full_mask(n)] == xi_dc(g, p, cache));
    CHECK(m.dist.total() == Rational(1));
  }
}

TEST_CASE("characterization: marginals, no adjacent zeros, factorization") {
  Rng rng(67);
  std::vector<Graph> graphs{path_graph(4), cycle_graph(5), complete_graph(3), grid_box(2)};
  for (const Graph& g : graphs) {
    int n = g.size();
    for (double p0 : {0.75, 0.9}) {
      VecD p(n, p0);
      if (!membership(g, p).interior()) continue;
      auto m = construct_measure(g, p);
      REQUIRE(m.is_probability());
      for (int v = 0; v < n; ++v) CHECK(near(m.dist.marginal(v), p0, 1e-12));
      for (auto [u, v] : g.edges())
        for (std::uint64_t c = 0; c < m.dist.configs(); ++c)
          if (!(c >> u & 1) && !(c >> v & 1)) CHECK(m.dist.mass[c] == 0.0);
      // Independence across sets at distance > 1.
      for (int reps = 0; reps < 20; ++reps) {
        std::uint64_t w1 = 0, w2 = 0;
        for (int v = 0; v < n; ++v) {
          double r = rng.uniform();
          if (r < 0.35) w1 |= std::uint64_t(1) << v;
          else if (r < 0.7) w2 |= std::uint64_t(1) << v;
        }
        bool far = true;
        for (int v = 0; v < n && far; ++v)
          if (w1 >> v & 1)
            if ((g.neighbors_mask(v) | (std::uint64_t(1) << v)) & w2) far = false;
        if (!far || !w1 || !w2) continue;
        std::uint64_t s = 0, t = 0;
        for (int v = 0; v < n; ++v) {
          if ((w1 >> v & 1) && rng.uniform() < p0) s |= std::uint64_t(1) << v;
          if ((w2 >> v & 1) && rng.uniform() < p0) t |= std::uint64_t(1) << v;
        }
        auto restricted = [&](std::uint64_t w, std::uint64_t val) {
          double acc = 0;
          for (std::uint64_t c = 0; c < m.dist.configs(); ++c)
            if ((c & w) == val) acc += m.dist.mass[c];
          return acc;
        };
        double joint = restricted(w1 | w2, s | t);
        CHECK(near(joint, restricted(w1, s) * restricted(w2, t), 1e-12));
      }
    }
  }
}

TEST_CASE("minimality against the constructible weak class") {
  // P(Z_W = 1) >= Xi_{G[W]}(p) for Shearer itself, richer products, and
  // thinned boundary laws with marginals above p.
  std::vector<Graph> graphs{complete_graph(2), path_graph(3), cycle_graph(5)};
  for (const Graph& g : graphs) {
    int n = g.size();
    VecD p(n, 0.8);
    if (!membership(g, p).interior()) continue;
    XiCache<double> cache(n);
    xi_fill_all(g, p, cache);
    std::vector<Dist<double>> members;
    members.push_back(construct_measure(g, p).dist);
    members.push_back(product_dist(VecD(n, 0.9)));
    members.push_back(product_dist(VecD(n, 0.8)));
    {
      VecD r(n, 0.9);
      if (membership(g, r).interior()) {
        // marginals 0.9 * x >= 0.8 needs x >= 8/9
        members.push_back(min_composition(construct_measure(g, r).dist, VecD(n, 8.9 / 9.0)));
      }
    }
    for (const auto& member : members) {
      auto ones = member.all_ones_table();
      for (std::uint64_t w = 0; w < member.configs(); ++w)
        CHECK(ones[w] >= *cache.find(w) - 1e-12);
    }
  }
}

TEST_CASE("membership verdicts") {
  Graph k2 = complete_graph(2);
  SUBCASE("outside with the least witness") {
    // q = 0.6 > 1/2, so the edge subset carries 1 - 2q = -0.2.
    auto st = membership<double>(k2, {0.4, 0.4});
    CHECK(st.region == Region::Outside);
    CHECK(*st.witness == 0b11);
    XiCache<double> cache(2);
    xi_fill_all<double>(k2, {0.4, 0.4}, cache);
    CHECK(*cache.find(0b11) == doctest::Approx(-0.2));
    CHECK(membership<double>(k2, {0.6, 0.6}).interior());
  }
  SUBCASE("boundary, float tolerance") {
    auto st = membership<double>(k2, {0.5, 0.5});
    CHECK(st.region == Region::Boundary);
  }
  SUBCASE("boundary, exact") {
    auto st = membership<Rational>(k2, VecQ(2, Rational(1, 2)));
    CHECK(st.region == Region::Boundary);
    CHECK(*st.witness == 0b11);
  }
  SUBCASE("all ones is always interior") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = random_graph(rng, 1 + static_cast<int>(rng.uniform() * 8), rng.uniform());
      CHECK(membership(g, VecD(g.size(), 1.0)).interior());
    }
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(membership(path_graph(21), VecD(21, 0.9)), CapExceeded);
  }
}

TEST_CASE("membership is an up-set") {
  Rng rng(71);
  int hits = 0;
  for (int trial = 0; trial < 200 && hits < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform() * 6);
    Graph g = random_graph(rng, n, rng.uniform());
    VecD p = random_p(rng, n, 0.5, 1.0);
    if (!membership(g, p).interior()) continue;
    ++hits;
    VecD p2 = p;
    for (double& x : p2) x += (1.0 - x) * rng.uniform();
    CHECK(membership(g, p2).interior());
  }
  CHECK(hits >= 20);
}

TEST_CASE("boundary crossing") {
  Graph k2 = complete_graph(2);
  SUBCASE("from outside, float") {
    auto cross = boundary_crossing<double>(k2, {0.4, 0.4});
    CHECK(near(cross.t, 1.0 / 6.0, 1e-9));
    CHECK(near(cross.r[0], 0.5, 1e-9));
    CHECK(membership(k2, cross.r).region == Region::Boundary);
  }
  SUBCASE("from outside, exact backend lands essentially on the root") {
    auto cross = boundary_crossing<Rational>(k2, VecQ(2, Rational(2, 5)));
    Rational err = cross.r[0] - Rational(1, 2);
    CHECK(err >= 0);
    CHECK(err < Rational(BigInt(1), BigInt(1) << 190));
    // Strictly inside: every subset value nonnegative.
    XiCache<Rational> cache(2);
    CHECK(membership(k2, cross.r, cache).region != Region::Outside);
  }
  SUBCASE("already on the boundary") {
    auto cross = boundary_crossing<double>(k2, {0.5, 0.5});
    CHECK(cross.t == 0.0);
    CHECK(cross.r == VecD{0.5, 0.5});
  }
  SUBCASE("interior is rejected") {
    CHECK_THROWS_AS(boundary_crossing<double>(k2, {0.8, 0.8}), PreconditionError);
  }
  SUBCASE("4-cycle crosses where q reaches 1 - 1/sqrt(2)") {
    Graph c4 = cycle_graph(4);
    auto cross = boundary_crossing<double>(c4, VecD(4, 0.6));
    CHECK(near(1.0 - cross.r[0], 1.0 - 1.0 / std::sqrt(2.0), 1e-9));
  }
}

TEST_CASE("escaping orders") {
  SUBCASE("window in a longer path") {
    Graph p5 = path_graph(5);
    VertexSubset w = VertexSubset::from_mask(5, 0b01110);
    VertexSubset ext = VertexSubset::from_mask(5, 0b10001);
    auto order = escaping_order(p5, w, ext);
    REQUIRE(order.size() == 3);
    VertexSubset seen(5);
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto [v, esc] = order[i];
      CHECK(w.test(v));
      CHECK_FALSE(seen.test(esc));      // escape lies outside the prefix
      CHECK(p5.adjacent(v, esc));
      seen.set(v);
    }
    CHECK(seen == w);
  }
  SUBCASE("single vertex with an exterior neighbour") {
    Graph k2 = complete_graph(2);
    auto order = escaping_order(k2, VertexSubset::from_mask(2, 0b01),
                                VertexSubset::from_mask(2, 0b10));
    REQUIRE(order.size() == 1);
    CHECK(order[0] == std::pair<int, int>{0, 1});
  }
  SUBCASE("no exterior, no escape") {
    Graph k2 = complete_graph(2);
    CHECK_THROWS_AS(escaping_order(k2, VertexSubset::full(2), VertexSubset(2)), NoEscape);
  }
  SUBCASE("isolated component without contact") {
    Graph g = build_graph(4, {{0, 1}, {2, 3}});
    VertexSubset w = VertexSubset::from_mask(4, 0b0111);
    VertexSubset ext = VertexSubset::from_mask(4, 0b1000);
    CHECK_THROWS_AS(escaping_order(g, w, ext), NoEscape);
  }
}

TEST_CASE("or composition") {
  Graph k2 = complete_graph(2);
  SUBCASE("zero noise is the identity") {
    auto base = construct_measure<Rational>(k2, VecQ(2, Rational(1, 2))).dist;
    auto composed = or_composition<Rational>(k2, VecQ(2, Rational(1, 2)), VecQ(2, Rational(0)));
    CHECK(base.mass == composed.mass);
  }
  SUBCASE("half noise on the boundary law reaches three quarters") {
    auto composed = or_composition<Rational>(k2, VecQ(2, Rational(1, 2)), VecQ(2, Rational(1, 2)));
    auto target = construct_measure<Rational>(k2, VecQ(2, Rational(3, 4))).dist;
    CHECK(composed.mass == target.mass);
  }
  SUBCASE("full noise is the point mass at ones") {
    auto composed = or_composition<double>(k2, {0.5, 0.5}, {1.0, 1.0});
    CHECK(composed.mass[0b11] == doctest::Approx(1.0));
    CHECK(composed.mass[0b00] == doctest::Approx(0.0));
  }
  SUBCASE("outside parameters are rejected") {
    CHECK_THROWS_AS(or_composition<double>(k2, {0.4, 0.4}, {0.1, 0.1}), OutsideRegion);
  }
  SUBCASE("law matches the reparametrized construction exactly") {
    for (const Graph& g : {complete_graph(2), path_graph(3), cycle_graph(4)}) {
      int n = g.size();
      for (Rational p0 : {Rational(4, 5), Rational(9, 10)})
        for (Rational c0 : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)}) {
          VecQ p(n, p0), c(n, c0), combined(n, p0 + c0 - c0 * p0);
          auto lhs = or_composition(g, p, c);
          auto rhs = construct_measure(g, combined).dist;
          CHECK(lhs.mass == rhs.mass);
        }
    }
  }
}

TEST_CASE("sampling") {
  SUBCASE("point mass") {
    Dist<double> point(2, {0, 0, 0, 1});
    for (auto c : sample(point, 5, 100)) CHECK(c == 0b11);
  }
  SUBCASE("boundary law splits between the two singleton patterns") {
    auto m = construct_measure<double>(complete_graph(2), {0.5, 0.5});
    auto draws = sample(m.dist, 99, 100000);
    std::map<std::uint64_t, int> freq;
    for (auto c : draws) freq[c]++;
    CHECK(freq[0b00] == 0);
    CHECK(freq[0b11] == 0);
    double sigma3 = 3.0 * std::sqrt(0.25 / 100000.0);
    CHECK(near(freq[0b01] / 1e5, 0.5, sigma3));
    CHECK(near(freq[0b10] / 1e5, 0.5, sigma3));
  }
  SUBCASE("product law frequencies") {
    auto d = product_dist<double>({0.5, 0.5});
    auto draws = sample(d, 7, 100000);
    std::map<std::uint64_t, int> freq;
    for (auto c : draws) freq[c]++;
    double sigma3 = 3.0 * std::sqrt(0.25 * 0.75 / 100000.0);
    for (std::uint64_t c = 0; c < 4; ++c) CHECK(near(freq[c] / 1e5, 0.25, sigma3));
  }
  SUBCASE("determinism") {
    auto d = product_dist<double>({0.3, 0.6, 0.9});
    CHECK(sample(d, 1234, 50) == sample(d, 1234, 50));
    CHECK(sample(d, 1234, 50) != sample(d, 1235, 50));
  }
  SUBCASE("invalid law") {
    Dist<double> bad(1, {0.7, 0.7});
    CHECK_THROWS_AS(sample(bad, 1, 1), PreconditionError);
  }
}

TEST_CASE("intrinsic vector") {
  SUBCASE("pendant neighbour bound") {
    Graph star = star_graph(4);
    VecD p(4, 0.85);
    auto iv = intrinsic_vector(star, p, 2);
    for (int v = 0; v < 4; ++v) {
      CHECK(iv.upper[v] <= p[v] + 1e-12);      // the empty window was included
      CHECK(iv.lower[v] == doctest::Approx(0.15));
      CHECK(iv.upper[v] >= iv.lower[v] - 1e-12);
    }
  }
  SUBCASE("radius growth never raises the estimate") {
    Graph p7 = path_graph(7);
    VecD p(7, 0.8);
    auto r2 = intrinsic_vector(p7, p, 2);
    auto r3 = intrinsic_vector(p7, p, 3);
    for (int v = 0; v < 7; ++v) CHECK(r3.upper[v] <= r2.upper[v] + 1e-12);
  }
}

TEST_SUITE_END();

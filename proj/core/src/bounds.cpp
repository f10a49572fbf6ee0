#include "shearer/bounds.hpp"

#include "shearer/xi.hpp"

#include <algorithm>
#include <cmath>

namespace shearer {

const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::LowerBound: return "LowerBound";
    case BoundKind::UpperBound: return "UpperBound";
    case BoundKind::Sufficient: return "Sufficient";
    case BoundKind::Exact: return "Exact";
  }
  return "?";
}

VecD uniformly_dominated_vector(const Graph& g, const VecD& p, const VertexSubset& infinite_markers) {
  int n = g.size();
  if (static_cast<int>(p.size()) != n) throw PreconditionError("parameter size mismatch");
  VecD c(n, 1.0);
  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> comps;
  for (int v = 0; v < n; ++v) {
    if (p[v] >= 1.0 || component[v] >= 0) continue;
    std::vector<int> stack{v}, members;
    component[v] = static_cast<int>(comps.size());
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int w : g.neighbors(u))
        if (p[w] < 1.0 && component[w] < 0) {
          component[w] = component[v];
          stack.push_back(w);
        }
    }
    comps.push_back(std::move(members));
  }
  for (const auto& members : comps) {
    VertexSubset sub(n);
    for (int v : members) sub.set(v);
    InducedGraph ig = induced_subgraph(g, sub);
    VecD sp(ig.graph.size());
    for (int i = 0; i < ig.graph.size(); ++i) sp[i] = p[ig.original_index[i]];
    RegionStatus status = membership(ig.graph, sp);
    if (!status.interior())
      throw OutsideRegion("uniformly_dominated_vector: component not in the interior");
    bool marked = false;
    for (int v : members)
      if (infinite_markers.universe() == n && infinite_markers.test(v)) marked = true;
    if (marked) {
      // Window of an infinite graph: q_v min{q_w : w neighbour inside}.
      for (int v : members) {
        double minq = 2.0;
        for (int w : g.neighbors(v))
          if (p[w] < 1.0 && component[w] == component[v]) minq = std::min(minq, 1.0 - p[w]);
        if (minq > 1.0) {
          // Isolated inside its component; fall back to the finite form.
          c[v] = p[v];
        } else {
          c[v] = (1.0 - p[v]) * minq;
        }
      }
    } else {
      XiCache<double> cache(ig.graph.size());
      double xi = xi_dc(ig.graph, sp, cache);
      double value = 1.0 - std::pow(1.0 - xi, 1.0 / static_cast<double>(members.size()));
      for (int v : members) c[v] = value;
    }
  }
  return c;
}

namespace {

constexpr int kConditionIterations = 1000;
constexpr double kConditionBlowup = 1e6;
constexpr double kConditionConverged = 1e-13;
constexpr double kConditionSlack = 1e-12;

// One update s_v <- q_v * local(v, s); shared by both sufficient conditions.
template <class Local>
ConditionResult condition_search(const Graph& g, const VecD& q, const VecD* user_s, Local local) {
  int n = g.size();
  if (static_cast<int>(q.size()) != n) throw PreconditionError("q size mismatch");
  for (double qv : q)
    if (qv < 0.0 || qv > 1.0) throw PreconditionError("q outside [0,1]");
  auto verify = [&](const VecD& s) {
    for (int v = 0; v < n; ++v)
      if (q[v] * local(v, s) > s[v] + kConditionSlack) return false;
    return true;
  };
  if (user_s) {
    for (double sv : *user_s)
      if (sv < 0.0) throw PreconditionError("supplied s must be nonnegative");
    return {verify(*user_s), *user_s};
  }
  VecD s = q;
  for (int round = 0; round < kConditionIterations; ++round) {
    VecD next(n);
    double change = 0.0, largest = 0.0;
    for (int v = 0; v < n; ++v) {
      next[v] = q[v] * local(v, s);
      change = std::max(change, std::abs(next[v] - s[v]));
      largest = std::max(largest, next[v]);
    }
    s.swap(next);
    if (largest > kConditionBlowup) return {false, s};
    if (change < kConditionConverged) break;
  }
  return {verify(s), s};
}

}  // namespace

ConditionResult lll_check(const Graph& g, const VecD& q, const VecD* user_s) {
  return condition_search(g, q, user_s, [&](int v, const VecD& s) {
    double prod = 1.0 + s[v];
    for (int w : g.neighbors(v)) prod *= 1.0 + s[w];
    return prod;
  });
}

ConditionResult fp_check(const Graph& g, const VecD& q, const VecD* user_s) {
  // Closed neighbourhoods with their index maps, fixed once.
  int n = g.size();
  std::vector<InducedGraph> hoods;
  hoods.reserve(n);
  for (int v = 0; v < n; ++v) {
    VertexSubset sub(n);
    sub.set(v);
    for (int w : g.neighbors(v)) sub.set(w);
    hoods.push_back(induced_subgraph(g, sub));
  }
  return condition_search(g, q, user_s, [&, hoods = std::move(hoods)](int v, const VecD& s) {
    const InducedGraph& h = hoods[v];
    VecD weights(h.graph.size());
    for (int i = 0; i < h.graph.size(); ++i) weights[i] = s[h.original_index[i]];
    return xi_enumerate(h.graph, weights);
  });
}

}  // namespace shearer

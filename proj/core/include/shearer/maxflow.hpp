#pragma once

#include <cstddef>
#include <vector>

namespace shearer {

/// Dinic max flow, templated so exact rational capacities work unchanged.
/// eps is the residual-positivity threshold (0 for exact types).
template <class T>
class MaxFlow {
public:
  explicit MaxFlow(int nodes) : head_(nodes, -1) {}

  int add_edge(int from, int to, T cap) {
    int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(std::move(cap));
    next_.push_back(head_[from]);
    head_[from] = id;
    to_.push_back(from);
    cap_.push_back(T(0));
    next_.push_back(head_[to]);
    head_[to] = id + 1;
    return id;
  }

  /// Flow currently on the forward edge id (cap must be the original).
  T flow_on(int id, const T& original_cap) const { return original_cap - cap_[id]; }

  T run(int s, int t, const T& eps) {
    T total(0);
    while (bfs(s, t, eps)) {
      iter_ = head_;
      while (true) {
        T pushed = dfs(s, t, eps, T(-1));
        if (!(pushed > eps)) break;
        total += pushed;
      }
    }
    return total;
  }

  /// Nodes reachable from s in the residual graph; call after run().
  std::vector<char> source_side(int s, const T& eps) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e = head_[u]; e >= 0; e = next_[e])
        if (cap_[e] > eps && !seen[to_[e]]) {
          seen[to_[e]] = 1;
          stack.push_back(to_[e]);
        }
    }
    return seen;
  }

private:
  bool bfs(int s, int t, const T& eps) {
    level_.assign(head_.size(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int e = head_[u]; e >= 0; e = next_[e])
        if (cap_[e] > eps && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[u] + 1;
          queue.push_back(to_[e]);
        }
    }
    return level_[t] >= 0;
  }

  // limit < 0 means unbounded.
  T dfs(int u, int t, const T& eps, T limit) {
    if (u == t) return limit;
    for (int& e = iter_[u]; e >= 0; e = next_[e]) {
      int v = to_[e];
      if (!(cap_[e] > eps) || level_[v] != level_[u] + 1) continue;
      T sub = limit < T(0) ? cap_[e] : std::min(limit, cap_[e]);
      T pushed = dfs(v, t, eps, sub);
      if (pushed > T(0)) {
        cap_[e] -= pushed;
        cap_[e ^ 1] += pushed;
        return pushed;
      }
    }
    level_[u] = -2;
    return T(0);
  }

  std::vector<int> head_, next_, to_, level_, iter_;
  std::vector<T> cap_;
};

}  // namespace shearer

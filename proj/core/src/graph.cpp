#include "shearer/graph.hpp"

#include "shearer/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>

namespace shearer {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  if (n > kGraphVertexCap) throw CapExceeded("vertex count exceeds bitmask capacity");
  std::vector<std::set<int>> nbr(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw PreconditionError("edge index out of range");
    if (u == v) throw PreconditionError("loop edge");
    nbr[u].insert(v);
    nbr[v].insert(u);
  }
  for (int v = 0; v < n; ++v) adj_[v].assign(nbr[v].begin(), nbr[v].end());
  if (n <= 64) {
    adj_mask_.assign(n, 0);
    for (int v = 0; v < n; ++v)
      for (int w : adj_[v]) adj_mask_[v] |= std::uint64_t(1) << w;
  }
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max<int>(d, static_cast<int>(a.size()));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < n_; ++v)
    for (int w : adj_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

std::uint64_t Graph::neighbors_mask(int v) const {
  if (n_ > 64) throw CapExceeded("neighbour masks need n <= 64");
  return adj_mask_[v];
}

std::uint64_t Graph::closed_neighbors_mask(int v) const {
  return neighbors_mask(v) | (std::uint64_t(1) << v);
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph(n, edges);
}

InducedGraph induced_subgraph(const Graph& g, const VertexSubset& w) {
  std::vector<int> original = w.to_vector();
  std::vector<int> new_index(g.size(), -1);
  for (std::size_t i = 0; i < original.size(); ++i) new_index[original[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int v : original)
    for (int u : g.neighbors(v))
      if (v < u && new_index[u] >= 0) edges.emplace_back(new_index[v], new_index[u]);
  return {Graph(static_cast<int>(original.size()), edges), std::move(original)};
}

Graph path_graph(int n) {
  if (n < 1) throw PreconditionError("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  if (n < 1) throw PreconditionError("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph star_graph(int n) {
  if (n < 1) throw PreconditionError("star needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, e);
}

Graph kfuzz_window(int k, int n) {
  if (k < 1) throw PreconditionError("kfuzz needs k >= 1");
  if (n < 1) throw PreconditionError("kfuzz needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && j - i <= k; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph grid_box(int n) {
  if (n < 1) throw PreconditionError("grid needs N >= 1");
  if (static_cast<long long>(n) * n > kGraphVertexCap)
    throw CapExceeded("grid exceeds bitmask capacity");
  std::vector<std::pair<int, int>> e;
  auto id = [n](int x, int y) { return y * n + x; };
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      if (x + 1 < n) e.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < n) e.emplace_back(id(x, y), id(x, y + 1));
    }
  return Graph(n * n, e);
}

Graph tree_ball(int degree, int radius) {
  if (degree < 2) throw PreconditionError("tree ball needs D >= 2");
  if (radius < 0) throw PreconditionError("tree ball needs r >= 0");
  std::vector<std::pair<int, int>> e;
  std::vector<int> frontier{0};
  int next = 1;
  for (int depth = 0; depth < radius; ++depth) {
    std::vector<int> grown;
    for (int v : frontier) {
      int children = (depth == 0) ? degree : degree - 1;
      for (int c = 0; c < children; ++c) {
        if (next > kGraphVertexCap) throw CapExceeded("tree ball exceeds bitmask capacity");
        e.emplace_back(v, next);
        grown.push_back(next);
        ++next;
      }
    }
    frontier.swap(grown);
  }
  return Graph(next, e);
}

namespace {

std::map<std::string, long> parse_kv(const std::string& args) {
  std::map<std::string, long> kv;
  std::size_t pos = 0;
  while (pos < args.size()) {
    std::size_t comma = args.find(',', pos);
    std::string item = args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("family argument '" + item + "' is not key=value");
    try {
      kv[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("family argument '" + item + "' has a non-integer value");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return kv;
}

long need(const std::map<std::string, long>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ParseError("family spec is missing '" + key + "'");
  return it->second;
}

}  // namespace

Graph make_family(const std::string& spec) {
  std::size_t colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  auto kv = colon == std::string::npos ? std::map<std::string, long>{} : parse_kv(spec.substr(colon + 1));
  if (name == "path") return path_graph(static_cast<int>(need(kv, "n")));
  if (name == "cycle") return cycle_graph(static_cast<int>(need(kv, "n")));
  if (name == "complete") return complete_graph(static_cast<int>(need(kv, "n")));
  if (name == "star") return star_graph(static_cast<int>(need(kv, "n")));
  if (name == "kfuzz")
    return kfuzz_window(static_cast<int>(need(kv, "k")), static_cast<int>(need(kv, "n")));
  if (name == "grid") return grid_box(static_cast<int>(need(kv, "N")));
  if (name == "tree" || name == "tree_ball")
    return tree_ball(static_cast<int>(need(kv, "D")), static_cast<int>(need(kv, "r")));
  throw ParseError("unknown family '" + name + "'");
}

std::vector<std::uint64_t> enumerate_independent_sets(const Graph& g) {
  if (g.size() > kEnumerationCap) throw CapExceeded("independent-set enumeration cap exceeded");
  std::vector<std::uint64_t> out;
  // Backtracking over vertices in index order; output is sorted as a side
  // effect of always branching "skip" before "take".
  std::uint64_t all = g.size() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.size()) - 1;
  struct Frame {
    std::uint64_t chosen, candidates;
  };
  std::vector<Frame> stack{{0, all}};
  while (!stack.empty()) {
    auto [chosen, candidates] = stack.back();
    stack.pop_back();
    out.push_back(chosen);
    while (candidates) {
      int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      stack.push_back({chosen | (std::uint64_t(1) << v), candidates & ~g.neighbors_mask(v)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

int pivot_vertex(const Graph& g, std::uint64_t mask) {
  int best = -1, best_deg = -1;
  std::uint64_t rest = mask;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    int d = std::popcount(g.neighbors_mask(v) & mask);
    if (d > best_deg) {
      best_deg = d;
      best = v;
    }
  }
  return best;
}

}  // namespace detail

}  // namespace shearer

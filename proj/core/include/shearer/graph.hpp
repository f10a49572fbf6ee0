#pragma once

#include "shearer/subset.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace shearer {

// Caps for the subset-exponential operations. Generators allow graphs up to
// kGraphVertexCap vertices; anything that walks 2^n objects enforces the
// tighter caps below.
inline constexpr int kGraphVertexCap = 128;
inline constexpr int kEnumerationCap = 24;   // independent-set walks
inline constexpr int kMeasureCap = 20;       // dense laws on 2^n configurations
inline constexpr int kComposeCap = 16;       // pairwise law compositions
inline constexpr int kCounterexampleCap = 14;
inline constexpr int kFlowCap = 12;          // Strassen max-flow oracle
inline constexpr int kUpSetCap = 4;          // exhaustive up-set oracle
inline constexpr int kGridColumnCap = 20;    // transfer-matrix state width

/// Finite simple undirected graph with dense vertex indices 0..n-1.
class Graph {
public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  std::vector<std::pair<int, int>> edges() const;

  /// Neighbour set as a single-word mask; requires n <= 64.
  std::uint64_t neighbors_mask(int v) const;
  /// N(v) together with v itself.
  std::uint64_t closed_neighbors_mask(int v) const;

private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> adj_mask_;  // populated while n <= 64
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// Induced subgraph together with the old-index-per-new-index map, so
/// per-vertex parameters can be transferred.
struct InducedGraph {
  Graph graph;
  std::vector<int> original_index;
};
InducedGraph induced_subgraph(const Graph& g, const VertexSubset& w);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);
/// Vertices 0..n-1, edge iff |i-j| <= k.
Graph kfuzz_window(int k, int n);
/// N x N box of the square lattice, row-major indices y*N + x.
Graph grid_box(int n);
/// Ball of radius r in the D-regular tree, BFS indexing from the root.
Graph tree_ball(int degree, int radius);

/// Parses family specs like "path:n=3", "kfuzz:k=2,n=9", "grid:N=4",
/// "tree:D=3,r=2".
Graph make_family(const std::string& spec);

/// All independent sets of g, the empty set included, as 64-bit masks.
std::vector<std::uint64_t> enumerate_independent_sets(const Graph& g);

namespace detail {
/// Deterministic pivot: highest degree inside mask, ties to lowest index.
int pivot_vertex(const Graph& g, std::uint64_t mask);
}  // namespace detail

}  // namespace shearer

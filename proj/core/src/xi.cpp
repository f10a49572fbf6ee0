#include "shearer/xi.hpp"

#include <map>

namespace shearer {

Graph cell_graph(const GridCells& cells) {
  std::map<std::pair<int, int>, int> index;
  for (int y = 0; y < cells.rows(); ++y)
    for (int x = 0; x < cells.cols; ++x)
      if (cells.test(x, y)) index[{y, x}] = static_cast<int>(index.size());
  std::vector<std::pair<int, int>> edges;
  for (auto& [yx, i] : index) {
    auto [y, x] = yx;
    if (auto it = index.find({y, x + 1}); it != index.end()) edges.emplace_back(i, it->second);
    if (auto it = index.find({y + 1, x}); it != index.end()) edges.emplace_back(i, it->second);
  }
  return Graph(static_cast<int>(index.size()), edges);
}

}  // namespace shearer

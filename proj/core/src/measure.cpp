#include "shearer/measure.hpp"

namespace shearer {

const char* region_name(Region r) {
  switch (r) {
    case Region::Interior: return "Interior";
    case Region::Boundary: return "Boundary";
    case Region::Outside: return "Outside";
  }
  return "?";
}

std::vector<std::pair<int, int>> escaping_order(const Graph& g, const VertexSubset& w,
                                                const VertexSubset& exterior) {
  if (w.intersects(exterior)) throw PreconditionError("escaping_order: window meets exterior");
  std::vector<std::pair<int, int>> reversed;
  VertexSubset remaining = w;
  VertexSubset escaped_to = exterior;
  int total = w.count();
  for (int step = 0; step < total; ++step) {
    int pick = -1, escape = -1;
    for (int v = 0; v < g.size() && pick < 0; ++v) {
      if (!remaining.test(v)) continue;
      for (int u : g.neighbors(v))
        if (escaped_to.test(u)) {
          pick = v;
          escape = u;
          break;
        }
    }
    if (pick < 0)
      throw NoEscape("escaping_order: a component of the window has no exterior neighbour");
    reversed.emplace_back(pick, escape);
    remaining.reset(pick);
    escaped_to.set(pick);
  }
  return {reversed.rbegin(), reversed.rend()};
}

}  // namespace shearer

#include "shearer/grid.hpp"

#include "shearer/errors.hpp"

namespace shearer {

std::vector<std::pair<int, int>> spiral_order(int n) {
  if (n < 1) throw PreconditionError("spiral_order needs N >= 1");
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  int x = n / 2, y = n / 2;
  auto emit = [&](int a, int b) {
    if (a >= 0 && a < n && b >= 0 && b < n) out.emplace_back(a, b);
  };
  emit(x, y);
  // Anti-clockwise from a first step west: W, S, E, N.
  constexpr int dx[4] = {-1, 0, 1, 0};
  constexpr int dy[4] = {0, -1, 0, 1};
  int dir = 0, len = 1;
  const std::size_t want = static_cast<std::size_t>(n) * n;
  while (out.size() < want) {
    for (int rep = 0; rep < 2 && out.size() < want; ++rep) {
      for (int i = 0; i < len && out.size() < want; ++i) {
        x += dx[dir];
        y += dy[dir];
        emit(x, y);
      }
      dir = (dir + 1) % 4;
    }
    ++len;
  }
  return out;
}

}  // namespace shearer

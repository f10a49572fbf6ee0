#pragma once

#include "shearer/xi.hpp"

#include <array>
#include <cmath>
#include <utility>
#include <vector>

namespace shearer {

/// The staircase window: an n x (k+l) box plus the first k cells of the next
/// column, extending to the target cell (n, k).
struct GridShape {
  int n = 0, k = 0, l = 0;

  std::pair<int, int> target() const { return {n, k}; }

  GridCells cells() const {
    GridCells c;
    c.cols = n + 1;
    c.row_masks.assign(std::max(k + l, k + 1), 0);
    for (int y = 0; y < k + l; ++y)
      for (int x = 0; x < n; ++x) c.set(x, y);
    for (int y = 0; y < k; ++y) c.set(n, y);
    return c;
  }

  GridCells cells_with_target() const {
    GridCells c = cells();
    c.set(n, k);
    return c;
  }
};

/// Open-extension probability of the target given the window all open,
/// as a ratio of two transfer-matrix evaluations.
template <class T>
T shape_ovoep(const GridShape& shape, const T& p) {
  T denom = xi_grid(shape.cells(), p);
  if (!(denom > T(0))) throw OutsideRegion("shape_ovoep: window outside the admissible region");
  return xi_grid(shape.cells_with_target(), p) / denom;
}

template <class T>
struct AEstimate {
  T value;
  std::array<int, 3> argmin{0, 0, 0};
  T lower_bound;  // q; the truncated infimum never goes below it
  std::array<int, 3> caps{0, 0, 0};
};

/// Truncated infimum of the shape family's extension probabilities. An upper
/// bound on the true limit value, non-increasing in the caps.
template <class T>
AEstimate<T> a_estimate(const T& p, int n_max, int k_max, int l_max) {
  AEstimate<T> out{p, {0, 0, 0}, T(1) - p, {n_max, k_max, l_max}};
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= k_max; ++k)
      for (int l = 0; l <= l_max; ++l) {
        T q = shape_ovoep(GridShape{n, k, l}, p);
        if (q < out.value) {
          out.value = q;
          out.argmin = {n, k, l};
        }
      }
  return out;
}

/// Cells of the N x N box starting at the centre, first step to the left,
/// spiralling outwards anti-clockwise; cells leaving the box are skipped.
std::vector<std::pair<int, int>> spiral_order(int n);

/// Critical-function value of every spiral prefix, the empty prefix first.
template <class T>
std::vector<T> spiral_prefix_xi(int n, const T& p) {
  auto order = spiral_order(n);
  GridCells cells;
  cells.cols = n;
  cells.row_masks.assign(n, 0);
  std::vector<T> out;
  out.reserve(order.size() + 1);
  out.push_back(T(1));
  for (auto [x, y] : order) {
    cells.set(x, y);
    out.push_back(xi_grid(cells, p));
  }
  return out;
}

/// log Xi(G_N) / N^2 over the full box.
template <class T>
double xi_log_density(int n, const T& p) {
  if (n < 1 || n > 12) throw CapExceeded("xi_log_density needs 1 <= N <= 12");
  GridCells cells;
  cells.cols = n;
  cells.row_masks.assign(n, ~std::uint32_t(0) >> (32 - n));
  T xi = xi_grid(cells, p);
  if (!(xi > T(0))) throw OutsideRegion("xi_log_density: box outside the admissible region");
  return std::log(to_double(xi)) / (static_cast<double>(n) * n);
}

}  // namespace shearer

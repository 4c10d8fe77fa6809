#pragma once

#include <utility>
#include <vector>

namespace cosserat_plate::detail {

using Stencil = std::vector<std::pair<int, double>>;  // (offset, weight)

// Second-order first derivative: central inside, one-sided at the ends.
inline Stencil first_derivative(int i, int n, double d) {
  if (i == 0) return {{0, -1.5 / d}, {1, 2.0 / d}, {2, -0.5 / d}};
  if (i == n - 1) return {{0, 1.5 / d}, {-1, -2.0 / d}, {-2, 0.5 / d}};
  return {{-1, -0.5 / d}, {1, 0.5 / d}};
}

}  // namespace cosserat_plate::detail

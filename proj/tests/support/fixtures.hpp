#pragma once

#include <cstddef>
#include <vector>

#include "walkiso/graph.hpp"

namespace walkiso::testing {

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, e);
}

inline Graph empty(std::size_t n) { return Graph(n, {}); }

/// Two disjoint triangles {0,1,2} and {3,4,5}.
inline Graph two_triangles() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

/// Standard Petersen labeling: outer 5-cycle 0..4, spokes i–i+5, inner pentagram.
inline Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

}  // namespace walkiso::testing

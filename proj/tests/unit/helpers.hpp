#pragma once

#include <vector>

#include "oddcolor/coloring.hpp"
#include "oddcolor/generators.hpp"

namespace th {

using namespace oddcolor;

inline Graph cycle(int n) { return make({Family::Cycle, n, {}}).graph; }
inline Graph path(int n) { return make({Family::Path, n, {}}).graph; }
inline Graph complete(int n) { return make({Family::Complete, n, {}}).graph; }
inline Graph kite() { return make({Family::Kite, 0, {}}).graph; }
inline PlaneGraph plane(Family f, int n = 0) { return *make({f, n, {}}).plane; }
inline PlaneGraph icosahedron() { return plane(Family::Icosahedron); }

inline Graph edges(int n, std::vector<Edge> e) { return Graph::from_edges(n, e); }

inline Coloring colors(std::vector<Color> c) {
  int k = 0;
  for (Color x : c) k = std::max(k, x);
  return Coloring(k, std::move(c));
}

inline std::vector<int> raw(const Coloring& c) { return c.raw(); }

}  // namespace th

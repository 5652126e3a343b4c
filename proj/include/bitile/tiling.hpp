#ifndef BITILE_TILING_HPP
#define BITILE_TILING_HPP

#include <string>
#include <vector>

namespace bitile {

// One embedded component piece. Vertex lists are host-side indices.
// swapped = true means the component's larger color class W sits on the
// host's X side (the natural orientation puts W in Y).
struct PlacedComponent {
  int component = 0;
  bool swapped = false;
  std::vector<int> x_vertices;
  std::vector<int> y_vertices;
};

struct PlacedCopy {
  std::vector<PlacedComponent> pieces;
};

struct TilingAssignment {
  std::vector<PlacedCopy> copies;
  std::vector<int> leftover_x;
  std::vector<int> leftover_y;
};

struct ValidationReport {
  bool ok = true;
  std::string violation;  // empty when ok; otherwise names the first failure
};

}  // namespace bitile

#endif

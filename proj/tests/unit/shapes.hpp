#pragma once

#include "freezetag/geometry.hpp"

namespace freezetag::testing {

inline Ring unit_square() { return {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; }

inline Ring lshape() { return {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}; }

/// Clockwise axis-aligned square.
inline Ring square_hole(double x0, double y0, double x1, double y1) {
  return {{x0, y0}, {x0, y1}, {x1, y1}, {x1, y0}};
}

}  // namespace freezetag::testing

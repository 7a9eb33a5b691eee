#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rootradii {

// Point of the Newton polygon; an empty ordinate stands for -infinity.
template <class T>
struct HullPoint {
  long x;
  std::optional<T> y;
};

// Indices of the vertices of the upper convex hull, left to right.
// Abscissae must be strictly increasing. Points at -infinity are never
// vertices, and collinear interior points are dropped.
template <class T>
std::vector<std::size_t> upper_convex_hull(const std::vector<HullPoint<T>>& pts) {
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && pts[i].x <= pts[i - 1].x) throw std::invalid_argument("upper_convex_hull: abscissae not increasing");
    if (!pts[i].y) continue;
    while (h.size() >= 2) {
      const auto& o = pts[h[h.size() - 2]];
      const auto& a = pts[h.back()];
      const auto& b = pts[i];
      // Cross product of (a - o) and (b - o); >= 0 means a is not strictly above ob.
      T cross = T(a.x - o.x) * (*b.y - *o.y) - (*a.y - *o.y) * T(b.x - o.x);
      if (cross >= 0) {
        h.pop_back();
      } else {
        break;
      }
    }
    h.push_back(i);
  }
  if (h.empty()) throw std::invalid_argument("upper_convex_hull: no finite point");
  return h;
}

}  // namespace rootradii

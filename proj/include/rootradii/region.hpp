#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "rootradii/dyadic.hpp"
#include "rootradii/interval.hpp"

namespace rootradii {

// Closed disc D(c, r) with dyadic center and radius.
struct Disc {
  Dyadic re;
  Dyadic im;
  Dyadic radius;
};

// Axis-aligned square box in C or closed segment of R, with dyadic center and width.
struct Region {
  enum class Kind { segment, box };

  Kind kind = Kind::segment;
  Dyadic re;
  Dyadic im;  // always 0 for segments
  Dyadic width;
  int depth = 0;

  static Region segment(Dyadic c, Dyadic w, int depth = 0) { return {Kind::segment, std::move(c), Dyadic(), std::move(w), depth}; }
  static Region box(Dyadic re, Dyadic im, Dyadic w, int depth = 0) {
    return {Kind::box, std::move(re), std::move(im), std::move(w), depth};
  }

  bool is_box() const { return kind == Kind::box; }

  Dyadic left() const { return re - width.mul_2exp(-1); }
  Dyadic right() const { return re + width.mul_2exp(-1); }
  Dyadic bottom() const { return is_box() ? im - width.mul_2exp(-1) : Dyadic(); }
  Dyadic top() const { return is_box() ? im + width.mul_2exp(-1) : Dyadic(); }

  // Radius of the covering disc: 3w/4 for boxes, w/2 for segments.
  Dyadic cover_radius() const { return is_box() ? (width + width.mul_2exp(1)).mul_2exp(-2) : width.mul_2exp(-1); }
  Disc covering_disc() const { return {re, im, cover_radius()}; }

  // kB: same center, width scaled by k (a power of two).
  Region dilate_pow2(int k) const { return {kind, re, im, width.mul_2exp(k), depth}; }

  std::vector<Region> children() const {
    const Dyadic q = width.mul_2exp(-2), h = width.mul_2exp(-1);
    if (!is_box()) return {segment(re - q, h, depth + 1), segment(re + q, h, depth + 1)};
    return {box(re - q, im - q, h, depth + 1), box(re + q, im - q, h, depth + 1), box(re - q, im + q, h, depth + 1),
            box(re + q, im + q, h, depth + 1)};
  }

  // Closed region contains the real point x.
  bool contains_real(const Dyadic& x) const {
    if (is_box() && (bottom() > Dyadic() || top() < Dyadic())) return false;
    return left() <= x && x <= right();
  }

  Interval re_interval() const { return {Interval::from_dyadic(left()).lo, Interval::from_dyadic(right()).hi}; }
  Interval im_interval() const {
    if (!is_box()) return Interval::point(0.0);
    return {Interval::from_dyadic(bottom()).lo, Interval::from_dyadic(top()).hi};
  }
};

// Squared distance from (x, y) to the rectangle [x1,x2] x [y1,y2], exactly.
inline Dyadic dist2_to_rect(const Dyadic& x, const Dyadic& y, const Dyadic& x1, const Dyadic& x2, const Dyadic& y1,
                            const Dyadic& y2) {
  Dyadic dx = x < x1 ? x1 - x : (x > x2 ? x - x2 : Dyadic());
  Dyadic dy = y < y1 ? y1 - y : (y > y2 ? y - y2 : Dyadic());
  return dx * dx + dy * dy;
}

// Closed axis-aligned rectangle [x1, x2] x [y1, y2].
struct Rect {
  Dyadic x1, x2, y1, y2;

  static Rect of(const Region& r) { return {r.left(), r.right(), r.bottom(), r.top()}; }
  void extend(const Rect& o) {
    if (o.x1 < x1) x1 = o.x1;
    if (o.x2 > x2) x2 = o.x2;
    if (o.y1 < y1) y1 = o.y1;
    if (o.y2 > y2) y2 = o.y2;
  }
};

// Closed disc meets the closed rectangle.
inline bool disc_meets_rect(const Disc& d, const Rect& r) {
  // Certain answers in double precision first.
  const Interval cx = Interval::from_dyadic(d.re), cy = Interval::from_dyadic(d.im);
  const Interval rad = Interval::from_dyadic(d.radius);
  const Interval rx{Interval::from_dyadic(r.x1).lo, Interval::from_dyadic(r.x2).hi};
  const Interval ry{Interval::from_dyadic(r.y1).lo, Interval::from_dyadic(r.y2).hi};
  // Lower bound of the gap between a center interval and a range.
  auto gap = [](const Interval& c, const Interval& s) {
    return std::max({0.0, Interval::down(s.lo - c.hi), Interval::down(c.lo - s.hi)});
  };
  const double gx = gap(cx, rx), gy = gap(cy, ry);
  if (gx > 0 || gy > 0) {
    const double lo2 = Interval::down(Interval::down(gx * gx) + Interval::down(gy * gy));
    if (lo2 > Interval::up(rad.hi * rad.hi)) return false;
  }
  return dist2_to_rect(d.re, d.im, r.x1, r.x2, r.y1, r.y2) <= d.radius * d.radius;
}

inline bool disc_meets_region(const Disc& d, const Region& r) { return disc_meets_rect(d, Rect::of(r)); }

// Closed discs intersect.
inline bool discs_meet(const Disc& a, const Disc& b) {
  const Dyadic dx = a.re - b.re, dy = a.im - b.im, rs = a.radius + b.radius;
  return dx * dx + dy * dy <= rs * rs;
}

// Disc a lies inside disc b.
inline bool disc_inside(const Disc& a, const Disc& b) {
  if (a.radius > b.radius) return false;
  const Dyadic dx = a.re - b.re, dy = a.im - b.im, gap = b.radius - a.radius;
  return dx * dx + dy * dy <= gap * gap;
}

}  // namespace rootradii

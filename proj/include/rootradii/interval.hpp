#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "rootradii/dyadic.hpp"

namespace rootradii {

// Closed real interval [lo, hi] in double precision. Every operation rounds
// outward by one ulp on each side, which dominates the round-to-nearest error.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
  static double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

  static Interval point(double x) { return {x, x}; }
  static Interval outward(double lo, double hi) { return {down(lo), up(hi)}; }
  static Interval from_dyadic(const Dyadic& x) {
    double d = x.to_double();
    if (Dyadic::from_double(d) == x) return point(d);
    return outward(d, d);
  }

  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return contains(0.0); }

  friend Interval operator+(const Interval& a, const Interval& b) { return outward(a.lo + b.lo, a.hi + b.hi); }
  friend Interval operator-(const Interval& a, const Interval& b) { return outward(a.lo - b.hi, a.hi - b.lo); }
  Interval operator-() const { return {-hi, -lo}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return outward(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
  }
  Interval half() const { return {lo / 2, hi / 2}; }
};

inline Interval sqr(const Interval& a) {
  double l = a.lo * a.lo, h = a.hi * a.hi;
  if (a.contains_zero()) return {0.0, Interval::up(std::max(l, h))};
  return Interval::outward(std::min(l, h), std::max(l, h));
}

// Interval of sqrt over the nonnegative part of a.
inline Interval sqrt(const Interval& a) {
  double l = std::max(a.lo, 0.0), h = std::max(a.hi, 0.0);
  return {std::max(0.0, Interval::down(std::sqrt(l))), Interval::up(std::sqrt(h))};
}

// Possibly-overlapping test: true unless the intervals are certainly disjoint.
inline bool may_intersect(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

// Certain inclusion of a in b.
inline bool certainly_subset(const Interval& a, const Interval& b) { return b.lo <= a.lo && a.hi <= b.hi; }

}  // namespace rootradii

#pragma once

#include <algorithm>
#include <cmath>

namespace wanderlab {

// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double a, double b) : lo(a), hi(b) {}
  static Interval sorted(double a, double b) { return a <= b ? Interval{a, b} : Interval{b, a}; }

  double length() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool valid() const { return lo <= hi; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool strictly_contains(const Interval& o) const { return lo < o.lo && o.hi < hi; }

  Interval intersect(const Interval& o) const {
    return {std::max(lo, o.lo), std::min(hi, o.hi)};
  }
  bool overlaps_interior(const Interval& o) const {
    return std::max(lo, o.lo) < std::min(hi, o.hi);
  }
  Interval operator+(double c) const { return {lo + c, hi + c}; }
};

// Axis-aligned box with outward-rounded arithmetic, used as a sound
// enclosure for orbits of piecewise affine/quadratic maps.  All growth
// steps go through bloat()/hull(); rounding is directed via nextafter.
struct EncBox {
  double xlo = 0, xhi = 0, ylo = 0, yhi = 0;

  static double down(double v) { return std::nextafter(v, -INFINITY); }
  static double up(double v) { return std::nextafter(v, INFINITY); }

  void widen() {
    xlo = down(xlo);
    xhi = up(xhi);
    ylo = down(ylo);
    yhi = up(yhi);
  }
  bool disjoint(const EncBox& o) const {
    return xhi < o.xlo || o.xhi < xlo || yhi < o.ylo || o.yhi < ylo;
  }
  double diam() const { return std::max(xhi - xlo, yhi - ylo); }
};

}  // namespace wanderlab

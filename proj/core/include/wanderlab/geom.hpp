#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <utility>

namespace wanderlab {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  double norm() const { return std::hypot(x, y); }
  double norm_inf() const { return std::max(std::fabs(x), std::fabs(y)); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) {
  return os << "(" << v.x << ", " << v.y << ")";
}

// 2x2 real matrix, row major.
struct Mat2 {
  double a = 0, b = 0, c = 0, d = 0;  // [[a b],[c d]]

  Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2 operator*(const Mat2& m) const {
    return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
  }
  Mat2 operator-(const Mat2& m) const { return {a - m.a, b - m.b, c - m.c, d - m.d}; }
  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  Mat2 inverse() const {
    const double dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
  }
  // spectral norm of a 2x2 matrix
  double norm() const {
    const double s = a * a + b * b + c * c + d * d;
    const double dt = det();
    const double disc = std::max(0.0, s * s - 4.0 * dt * dt);
    return std::sqrt(0.5 * (s + std::sqrt(disc)));
  }
  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 rotation(double angle) {
    const double cs = std::cos(angle), sn = std::sin(angle);
    return {cs, -sn, sn, cs};
  }
};

// Real eigen-decomposition of a 2x2 matrix; valid only when the
// discriminant is non-negative.
struct Eigen2 {
  bool real = false;
  double lambda1 = 0, lambda2 = 0;  // |lambda1| <= |lambda2|
  Vec2 v1, v2;                      // unit eigenvectors
};

inline Eigen2 eigen_real(const Mat2& m) {
  Eigen2 e;
  const double tr = m.trace();
  const double disc = tr * tr - 4.0 * m.det();
  if (disc < 0.0) return e;
  e.real = true;
  const double s = std::sqrt(disc);
  double l1 = (tr - s) / 2.0;
  double l2 = (tr + s) / 2.0;
  if (std::fabs(l1) > std::fabs(l2)) std::swap(l1, l2);
  e.lambda1 = l1;
  e.lambda2 = l2;
  auto unit_eigvec = [&m](double lambda) {
    // (A - lambda I) v = 0; pick the larger row for stability.
    Vec2 v1{-m.b, m.a - lambda};
    Vec2 v2{m.d - lambda, -m.c};
    Vec2 v = v1.norm() >= v2.norm() ? v1 : v2;
    const double n = v.norm();
    return n > 0 ? Vec2{v.x / n, v.y / n} : Vec2{1, 0};
  };
  e.v1 = unit_eigvec(l1);
  e.v2 = unit_eigvec(l2);
  return e;
}

struct Box2 {
  Vec2 lo{0, 0}, hi{0, 0};

  bool contains(const Vec2& p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
  bool contains(const Box2& b) const { return contains(b.lo) && contains(b.hi); }
  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  Vec2 center() const { return {(lo.x + hi.x) / 2, (lo.y + hi.y) / 2}; }
};

}  // namespace wanderlab

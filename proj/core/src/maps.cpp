#include "wanderlab/maps.hpp"

#include <cmath>
#include <numbers>

#include "wanderlab/errors.hpp"

namespace wanderlab::maps {

Vec2 henon_eval(double a, double b, const Vec2& p) {
  return {1.0 - a * p.x * p.x + p.y, b * p.x};
}

PlanarMap henon_family(double a, double b) {
  PlanarMap m;
  m.name = "henon";
  m.params = {{"a", a}, {"b", b}};
  m.eval = [a, b](const Vec2& p) { return henon_eval(a, b, p); };
  m.jacobian = [a, b](const Vec2& p) {
    return Mat2{-2.0 * a * p.x, 1.0, b, 0.0};
  };
  if (b != 0.0) {
    m.inverse = [a, b](const Vec2& q) {
      const double x = q.y / b;
      return Vec2{x, q.x - 1.0 + a * x * x};
    };
  }
  return m;
}

Vec2 henon_like_eval(double mu, double nu, const Vec2& p) {
  return {p.y, mu + nu * p.x + p.y * p.y};
}

PlanarMap henon_like_family(double mu, double nu) {
  PlanarMap m;
  m.name = "henon_like";
  m.params = {{"mu", mu}, {"nu", nu}};
  m.eval = [mu, nu](const Vec2& p) { return henon_like_eval(mu, nu, p); };
  m.jacobian = [nu](const Vec2& p) {
    return Mat2{0.0, 1.0, nu, 2.0 * p.y};
  };
  if (nu != 0.0) {
    m.inverse = [mu, nu](const Vec2& q) {
      const double y = q.x;
      return Vec2{(q.y - mu - y * y) / nu, y};
    };
  }
  return m;
}

double quad_eval(double mu, double x) { return x * x + mu; }

ScalarMap quad_family(double mu) {
  ScalarMap m;
  m.name = "quadratic";
  m.params = {{"mu", mu}};
  m.eval = [mu](double x) { return quad_eval(mu, x); };
  m.derivative = [](double x) { return 2.0 * x; };
  return m;
}

double tent_eval(double x) { return 1.0 - std::fabs(2.0 * x - 1.0); }

double conjugacy_g(double x) { return 2.0 * std::cos(std::numbers::pi * x); }

double conjugacy_defect(double x) {
  require(x >= 0.0 && x <= 1.0, "conjugacy_defect: x outside [0,1]");
  const double lhs = quad_eval(-2.0, conjugacy_g(x));
  const double rhs = conjugacy_g(tent_eval(x));
  return std::fabs(lhs - rhs);
}

Orbit iterate(const PlanarMap& map, const Vec2& p0, int n, const Box2& escape_box) {
  require(n >= 0, "iterate: n must be >= 0");
  Orbit orb;
  orb.points.reserve(static_cast<std::size_t>(n) + 1);
  Vec2 p = p0;
  orb.points.push_back(p);
  for (int i = 1; i <= n; ++i) {
    p = map.eval(p);
    orb.points.push_back(p);
    if (!p.finite() || !escape_box.contains(p)) {
      orb.escaped = true;
      orb.escape_index = i;
      break;
    }
  }
  return orb;
}

ScalarOrbit iterate(const ScalarMap& map, double x0, int n, const Interval& escape) {
  require(n >= 0, "iterate: n must be >= 0");
  ScalarOrbit orb;
  orb.points.reserve(static_cast<std::size_t>(n) + 1);
  double x = x0;
  orb.points.push_back(x);
  for (int i = 1; i <= n; ++i) {
    x = map.eval(x);
    orb.points.push_back(x);
    if (!std::isfinite(x) || !escape.contains(x)) {
      orb.escaped = true;
      orb.escape_index = i;
      break;
    }
  }
  return orb;
}

Mat2 fd_jacobian(const PlanarMap& map, const Vec2& p, double h) {
  const Vec2 fxp = map.eval({p.x + h, p.y});
  const Vec2 fxm = map.eval({p.x - h, p.y});
  const Vec2 fyp = map.eval({p.x, p.y + h});
  const Vec2 fym = map.eval({p.x, p.y - h});
  return {(fxp.x - fxm.x) / (2 * h), (fyp.x - fym.x) / (2 * h),
          (fxp.y - fxm.y) / (2 * h), (fyp.y - fym.y) / (2 * h)};
}

double fd_derivative(const ScalarMap& map, double x, double h) {
  return (map.eval(x + h) - map.eval(x - h)) / (2 * h);
}

}  // namespace wanderlab::maps

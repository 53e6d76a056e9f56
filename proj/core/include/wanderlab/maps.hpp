#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wanderlab/geom.hpp"
#include "wanderlab/interval.hpp"

namespace wanderlab::maps {

// An evaluable smooth planar map with analytic Jacobian and, when the
// map is a diffeomorphism, an inverse.  Immutable after construction.
struct PlanarMap {
  std::function<Vec2(const Vec2&)> eval;
  std::function<Mat2(const Vec2&)> jacobian;
  std::function<Vec2(const Vec2&)> inverse;  // may be empty
  std::map<std::string, double> params;
  std::string name;

  bool has_inverse() const { return static_cast<bool>(inverse); }
  Vec2 operator()(const Vec2& p) const { return eval(p); }
};

struct ScalarMap {
  std::function<double(double)> eval;
  std::function<double(double)> derivative;
  std::map<std::string, double> params;
  std::string name;

  double operator()(double x) const { return eval(x); }
};

struct Orbit {
  std::vector<Vec2> points;
  int start_index = 0;
  bool escaped = false;
  int escape_index = -1;  // first index outside the bounding box
};

struct ScalarOrbit {
  std::vector<double> points;
  bool escaped = false;
  int escape_index = -1;
};

// f_{a,b}(x,y) = (1 - a x^2 + y, b x)
Vec2 henon_eval(double a, double b, const Vec2& p);
PlanarMap henon_family(double a, double b);

// phi_{mu,nu}(x,y) = (y, mu + nu x + y^2)
Vec2 henon_like_eval(double mu, double nu, const Vec2& p);
PlanarMap henon_like_family(double mu, double nu);

// F_mu(x) = x^2 + mu
double quad_eval(double mu, double x);
ScalarMap quad_family(double mu);

// Tent map T(x) = 1 - |2x - 1| on [0,1] and the conjugacy g(x) = 2 cos(pi x),
// which satisfy F_{-2} o g = g o T on [0,1].
double tent_eval(double x);
double conjugacy_g(double x);
// |F_{-2}(g(x)) - g(T(x))|; requires x in [0,1].
double conjugacy_defect(double x);

Orbit iterate(const PlanarMap& map, const Vec2& p0, int n,
              const Box2& escape_box = Box2{{-10, -10}, {10, 10}});
ScalarOrbit iterate(const ScalarMap& map, double x0, int n,
                    const Interval& escape = Interval{-10, 10});

// Central finite-difference Jacobian, for the analytic-Jacobian invariant.
Mat2 fd_jacobian(const PlanarMap& map, const Vec2& p, double h = 1e-6);
double fd_derivative(const ScalarMap& map, double x, double h = 1e-6);

}  // namespace wanderlab::maps

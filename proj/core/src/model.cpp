#include "wanderlab/model.hpp"

#include <cmath>

#include "wanderlab/errors.hpp"

namespace wanderlab::model {

Vec2 model_eval(const ModelDiffeo& m, const Vec2& p) {
  if (m.in_fold_window(p)) return m.fold_eval(p);
  if (m.in_square(p)) return {m.lambda * p.x, m.sigma * p.y};
  throw precondition_error("model_eval: point outside all charts");
}

maps::PlanarMap model_planar_map(const ModelDiffeo& m) {
  maps::PlanarMap pm;
  pm.name = "model";
  pm.params = {{"lambda", m.lambda}, {"sigma", m.sigma}, {"mu", m.mu}};
  pm.eval = [m](const Vec2& p) { return model_eval(m, p); };
  pm.jacobian = [m](const Vec2& p) {
    if (m.in_fold_window(p)) {
      const double v = p.y - 1.0;
      return Mat2{m.alpha, m.gamma, m.delta, 2.0 * m.beta * v + 3.0 * m.cubic * v * v};
    }
    if (m.in_square(p)) return Mat2{m.lambda, 0.0, 0.0, m.sigma};
    throw precondition_error("model jacobian: point outside all charts");
  };
  return pm;
}

namespace {

// n-th return map near q: n linear steps followed by the fold.
Vec2 return_map(const ModelDiffeo& m, int n, const Vec2& p) {
  const double ln = std::pow(m.lambda, n);
  const double sn = std::pow(m.sigma, n);
  const Vec2 w{ln * p.x, sn * p.y};
  require(m.in_fold_window(w), "renorm: return window empty (point misses the fold window)");
  return m.fold_eval(w);
}

}  // namespace

RenormFit fit_renormalization(const ModelDiffeo& m, int n, double probe_halfwidth, int grid) {
  require(n >= 1, "fit_renormalization: n >= 1");
  const double sn = std::pow(m.sigma, n);
  // The return window is centered on heights Y with sigma^n Y near 1.
  double Yc = 1.0 / sn;

  auto second = [&](double Y) { return return_map(m, n, {m.q.x, Y}).y; };
  auto first = [&](double Y) { return return_map(m, n, {m.q.x, Y}).x; };

  // Critical height: dR2/dY = 0, solved by Newton with derivative-scaled
  // finite differences.
  const double hy = 0.05 / (sn * m.sigma);  // well inside the window
  for (int it = 0; it < 60; ++it) {
    const double d1 = (second(Yc + hy) - second(Yc - hy)) / (2 * hy);
    const double d2 = (second(Yc + hy) - 2 * second(Yc) + second(Yc - hy)) / (hy * hy);
    if (d2 == 0.0) break;
    const double step = d1 / d2;
    Yc -= step;
    if (std::fabs(step) < 1e-18 * std::fabs(Yc)) break;
  }

  RenormFit fit;
  fit.n = n;
  fit.mu_model = m.mu;
  fit.Yc = Yc;
  const double A2 = (second(Yc + hy) - 2 * second(Yc) + second(Yc - hy)) / (hy * hy) / 2.0;
  require(std::fabs(A2) > 0, "fit_renormalization: quadratic coefficient vanished");
  fit.sy = 1.0 / A2;
  const double g1 = (first(Yc + hy) - first(Yc - hy)) / (2 * hy);
  fit.sx = g1 * fit.sy;
  fit.mu_hat = (second(Yc) - Yc) / fit.sy;

  // sup-defect of the normalized return map against (x,y) -> (y, y^2 + mu_hat)
  double defect = 0.0;
  const double w = probe_halfwidth;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double xb = -w + 2 * w * i / (grid - 1);
      const double yb = -w + 2 * w * j / (grid - 1);
      const Vec2 P{m.q.x + fit.sx * xb, fit.Yc + fit.sy * yb};
      const Vec2 R = return_map(m, n, P);
      const double xn = (R.x - m.q.x) / fit.sx;
      const double yn = (R.y - fit.Yc) / fit.sy;
      defect = std::max(defect, std::fabs(xn - yb));
      defect = std::max(defect, std::fabs(yn - (yb * yb + fit.mu_hat)));
    }
  }
  fit.defect = defect;
  return fit;
}

RenormDefect renorm_defect(const ModelDiffeo& m, int n, double mu_bar) {
  // mu_hat is affine in the model's mu, so a two-point secant solve is exact.
  ModelDiffeo probe = m;
  const double sn = std::pow(m.sigma, n);
  const double mu0 = 1.0 / sn;
  const double mu1 = mu0 + 1.0 / (sn * sn);

  probe.mu = mu0;
  const double f0 = fit_renormalization(probe, n).mu_hat;
  probe.mu = mu1;
  const double f1 = fit_renormalization(probe, n).mu_hat;
  require(f1 != f0, "renorm_defect: degenerate parameter response");
  const double slope = (f1 - f0) / (mu1 - mu0);
  probe.mu = mu0 + (mu_bar - f0) / slope;

  RenormDefect out;
  out.theta_n = probe.mu;
  out.fit = fit_renormalization(probe, n);
  out.defect = out.fit.defect;
  return out;
}

}  // namespace wanderlab::model

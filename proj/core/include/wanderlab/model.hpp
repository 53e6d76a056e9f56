#pragma once

#include "wanderlab/geom.hpp"
#include "wanderlab/maps.hpp"

namespace wanderlab::model {

// Idealized linear-horseshoe-plus-fold diffeomorphism.
//
// Charts:
//   * S = [0,2]^2 with f(x,y) = (lambda x, sigma y); p = (0,0),
//     W^s_loc(p) = [0,2] x {0}, W^u_loc(p) = {0} x [0,2].
//   * a fold window around (0,1) in W^u_loc(p), mapped by the homoclinic
//     excursion onto a neighborhood of the tangency point q = (1,0):
//         (x, 1+v) -> q + (gamma v + alpha x,  mu + beta v^2 + cubic v^3 + delta x)
//     The window takes precedence over S where they overlap.
//
// With alpha = delta = cubic = 0 the n-th return map Fold o Linear^n
// renormalizes exactly to (x,y) -> (y, y^2 + mu_bar); nonzero values give
// the perturbed model whose renormalization defect decays in n.
struct ModelDiffeo {
  double lambda = 0.25;
  double sigma = 2.0;

  // fold coefficients
  double gamma = 1.0;
  double beta = 1.0;
  double alpha = 0.0;
  double delta = 0.0;
  double cubic = 0.0;
  double mu = 0.0;  // unfolding parameter; tangency at mu = 0

  Vec2 q{1.0, 0.0};
  double fold_half_width_x = 0.05;
  double fold_half_width_y = 0.05;

  // iterate-count bookkeeping between regions (see the chain machinery)
  int N0 = 2, N1 = 2, N2 = 2, Nstar = 2, nstar = 4;

  bool dissipative() const { return lambda * sigma < 1.0; }
  Vec2 fold_critical_point() const { return {0.0, 1.0}; }
  bool in_square(const Vec2& p) const {
    return p.x >= 0 && p.x <= 2 && p.y >= 0 && p.y <= 2;
  }
  bool in_fold_window(const Vec2& p) const {
    return std::fabs(p.x) <= fold_half_width_x &&
           std::fabs(p.y - 1.0) <= fold_half_width_y;
  }
  Vec2 fold_eval(const Vec2& p) const {
    const double v = p.y - 1.0;
    return {q.x + gamma * v + alpha * p.x,
            q.y + mu + beta * v * v + cubic * v * v * v + delta * p.x};
  }
};

// One application of the model; fold window takes precedence over S.
// Throws precondition_error when p lies outside all charts.
Vec2 model_eval(const ModelDiffeo& m, const Vec2& p);

// PlanarMap view (eval + Jacobian over the charted domain).
maps::PlanarMap model_planar_map(const ModelDiffeo& m);

// Result of fitting the affine-quadratic renormalization of the n-th
// return map near the tangency.
struct RenormFit {
  int n = 0;
  double mu_model = 0;   // model parameter used (the fitted Theta_n(mu_bar))
  double mu_hat = 0;     // constant term of the normalized return map
  double Yc = 0;         // critical height of the return window
  double sx = 0, sy = 0; // phase-space scalings of Phi_n
  double defect = 0;     // sup distance to (x,y) -> (y, y^2 + mu_hat)
};

// Fit the renormalization of the n-th return map with the model's own mu.
RenormFit fit_renormalization(const ModelDiffeo& m, int n, double probe_halfwidth = 1.0,
                              int grid = 21);

// Sup-distance between the affinely renormalized n-th return map and the
// quadratic endomorphism, with the model parameter solved so the fitted
// constant term equals mu_bar.  Also reports the solved Theta_n(mu_bar).
struct RenormDefect {
  double defect = 0;
  double theta_n = 0;  // model mu realizing mu_bar
  RenormFit fit;
};
RenormDefect renorm_defect(const ModelDiffeo& m, int n, double mu_bar);

}  // namespace wanderlab::model

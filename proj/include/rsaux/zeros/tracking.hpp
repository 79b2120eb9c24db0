#ifndef RSAUX_ZEROS_TRACKING_HPP
#define RSAUX_ZEROS_TRACKING_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rsaux/numerics/complex.hpp"
#include "rsaux/rfunc/rfunc.hpp"
#include "rsaux/zeros/types.hpp"

namespace rsaux::zeros {

struct lost_curve_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct runaway_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TrackOptions {
  double sigma_start = -100.0;
  double initial_step = 0.1;
  double max_step = 2.0;
  double handoff = 0.3;          // stop once |R/R'| < handoff
  double corrector_tol = 1e-9;   // |Re R| / |R'| accepted as "on the curve"
  double sigma_limit = 3.0;
  int max_halvings = 20;
  long max_steps = 100000;

  /// Settings used when a first pass produced colliding zeros.
  TrackOptions tightened() const {
    TrackOptions o = *this;
    o.initial_step /= 4;
    o.max_step /= 8;
    o.handoff /= 3;
    o.corrector_tol /= 100;
    return o;
  }
};

struct TrackResult {
  ComplexPoint handoff;
  long steps = 0;
  double newton_distance = 0;  // |R/R'| at the handoff point
};

namespace detail {

struct CurvePoint {
  double sigma = 0;
  double t = 0;
  rfunc::REval<double> r;
};

// Newton on Re R along its gradient, (Re R', -Im R'), back onto Re R = 0.
inline bool correct(CurvePoint& p, double tol) {
  for (int it = 0; it < 8; ++it) {
    p.r = rfunc::evaluateFast(ComplexD(p.sigma, p.t), true);
    const ComplexD& g = p.r.derivative;
    const double g2 = norm(g);
    if (!(g2 > 0) || !std::isfinite(g2)) return false;
    const double f = p.r.value.re;
    if (std::abs(f) / std::sqrt(g2) < tol) return true;
    p.sigma -= f * g.re / g2;
    p.t += f * g.im / g2;
  }
  return false;
}

}  // namespace detail

/// Follow the curve Re R = 0 from (sigma_start, seed.t) toward increasing
/// sigma until |R/R'| drops below the handoff threshold, and return that
/// point. Predictor: unit tangent (Im R', Re R') oriented along the previous
/// step. Corrector: Newton on Re R along the gradient.
///
/// A step is rejected and halved if the corrector fails, lands far from the
/// prediction, or Im R changes sign without reaching the handoff region
/// (that would mean jumping to a neighbouring curve or over a zero).
inline TrackResult trackCurve(const Seed& seed, const TrackOptions& opt = {}) {
  detail::CurvePoint cur{opt.sigma_start, seed.t, {}};
  if (!detail::correct(cur, opt.corrector_tol))
    throw lost_curve_error("trackCurve: seed " + std::to_string(seed.ordinal) + " is not on Re R = 0");

  double dir_s = 1, dir_t = 0;  // previous tangent, initially toward +sigma
  double h = opt.initial_step;
  int halvings = 0;
  for (long step = 0; step < opt.max_steps; ++step) {
    const double dist = abs(cur.r.value) / abs(cur.r.derivative);
    if (dist < opt.handoff) return TrackResult{ComplexPoint(cur.sigma, cur.t), step, dist};
    if (cur.sigma > opt.sigma_limit)
      throw runaway_error("trackCurve: seed " + std::to_string(seed.ordinal) + " passed sigma=" +
                          std::to_string(opt.sigma_limit) + " without reaching a zero");

    const ComplexD& g = cur.r.derivative;
    const double gn = abs(g);
    double ts = g.im / gn, tt = g.re / gn;
    if (ts * dir_s + tt * dir_t < 0) {
      ts = -ts;
      tt = -tt;
    }
    const double hs = std::min({h, opt.max_step, 0.5 * dist});

    detail::CurvePoint next{cur.sigma + hs * ts, cur.t + hs * tt, {}};
    const double ps = next.sigma, pt = next.t;
    bool ok = detail::correct(next, opt.corrector_tol);
    if (ok) ok = std::hypot(next.sigma - ps, next.t - pt) < 0.5 * hs;
    if (ok) {
      const bool flipped = (next.r.value.im < 0) != (cur.r.value.im < 0);
      const double next_dist = abs(next.r.value) / abs(next.r.derivative);
      if (flipped && next_dist >= opt.handoff) ok = false;
    }
    if (!ok) {
      h = hs / 2;
      if (++halvings > opt.max_halvings)
        throw lost_curve_error("trackCurve: lost the curve from seed " + std::to_string(seed.ordinal) +
                               " near sigma=" + std::to_string(cur.sigma) + ", t=" + std::to_string(cur.t));
      continue;
    }
    halvings = 0;
    dir_s = ts;
    dir_t = tt;
    cur = next;
    h = std::min(hs * 1.5, opt.max_step);
  }
  throw lost_curve_error("trackCurve: step budget exhausted for seed " + std::to_string(seed.ordinal));
}

}  // namespace rsaux::zeros

#endif  // RSAUX_ZEROS_TRACKING_HPP

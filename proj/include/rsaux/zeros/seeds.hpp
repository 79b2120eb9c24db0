#ifndef RSAUX_ZEROS_SEEDS_HPP
#define RSAUX_ZEROS_SEEDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "rsaux/numerics/complex.hpp"
#include "rsaux/rfunc/rfunc.hpp"
#include "rsaux/zeros/newton.hpp"
#include "rsaux/zeros/tracking.hpp"
#include "rsaux/zeros/types.hpp"

namespace rsaux::zeros {

inline constexpr double kDefaultSeedLine = -100.0;

struct ScanOptions {
  double sigma = kDefaultSeedLine;
  double tolerance = 1e-7;  // bracket width for the polished seed height
  bool exclude_trivial = true;
};

struct ScanResult {
  std::vector<Seed> seeds;
  std::vector<Seed> trivial;  // candidates whose curve ends at a trivial zero -2n
  std::vector<std::string> warnings;
};

/// Nominal scan step at height t: below half the mean zero spacing.
inline double scanStep(double t) {
  return std::min(1.0, M_PI / std::log(std::max(t, 0.0) / (2 * M_PI) + 2));
}

/// True when the curve Re R = 0 through (sigma, seed.t) ends at a zero on
/// the real axis.
inline bool leadsToTrivialZero(const Seed& seed, double sigma) {
  TrackOptions topt;
  topt.sigma_start = sigma;
  const auto hand = trackCurve(seed, topt);
  const ComplexD rho = refineNewtonFast(ComplexD(hand.handoff.sigma, hand.handoff.t));
  return std::abs(rho.im) < 1e-8;
}

/// Every height t in [t_lo, t_hi] where R(sigma + i t) is purely imaginary
/// with negative imaginary part, in increasing order.
///
/// Re R is sampled with the nominal step, shortened wherever |R/R'| says the
/// phase of R turns faster than the step can resolve; each sign change is
/// polished by TOMS 748 bracketing.
///
/// The lowest such heights belong to curves that end at trivial zeros. With
/// `exclude_trivial` the candidates are followed in order until the first
/// one that reaches a non-real zero; the ones before it are dropped. Only
/// a leading run is examined.
inline ScanResult scanSeeds(double t_lo, double t_hi, const ScanOptions& opt = {}) {
  if (!(t_lo > 0) || !(t_hi > t_lo)) throw std::invalid_argument("scanSeeds: need 0 < t_lo < t_hi");
  ScanResult out;
  auto re_r = [&](double t) { return rfunc::evaluateFast(ComplexD(opt.sigma, t), false).value.re; };

  double t = t_lo;
  auto cur = rfunc::evaluateFast(ComplexD(opt.sigma, t), true);
  while (t < t_hi) {
    const double speed = abs(cur.derivative) / std::max(abs(cur.value), 1e-300);
    double step = std::min(scanStep(t), 0.4 * M_PI / std::max(speed, 1e-12));
    if (step < 0.5 * scanStep(t)) {
      out.warnings.push_back("scan step halved locally near t=" + std::to_string(t));
    }
    const double t_next = std::min(t + step, t_hi);
    const auto next = rfunc::evaluateFast(ComplexD(opt.sigma, t_next), true);
    const double a = cur.value.re;
    const double b = next.value.re;
    if (a == 0 || (a < 0) != (b < 0)) {
      double root = t;
      if (a != 0) {
        std::uintmax_t iters = 100;
        auto tol = [&](double x, double y) { return std::abs(x - y) <= opt.tolerance; };
        const auto bracket = boost::math::tools::toms748_solve(re_r, t, t_next, a, b, tol, iters);
        root = 0.5 * (bracket.first + bracket.second);
      }
      const auto at_root = rfunc::evaluateFast(ComplexD(opt.sigma, root), false);
      if (at_root.value.im < 0) out.seeds.push_back(Seed{0, root});
    }
    t = t_next;
    cur = next;
  }
  if (opt.exclude_trivial) {
    std::size_t first = 0;
    while (first < out.seeds.size() && leadsToTrivialZero(out.seeds[first], opt.sigma)) ++first;
    out.trivial.assign(out.seeds.begin(), out.seeds.begin() + static_cast<long>(first));
    out.seeds.erase(out.seeds.begin(), out.seeds.begin() + static_cast<long>(first));
  }
  for (std::size_t i = 0; i < out.seeds.size(); ++i) out.seeds[i].ordinal = static_cast<int>(i + 1);
  return out;
}

}  // namespace rsaux::zeros

#endif  // RSAUX_ZEROS_SEEDS_HPP

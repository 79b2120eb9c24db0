#ifndef RSAUX_ZEROS_NEWTON_HPP
#define RSAUX_ZEROS_NEWTON_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "rsaux/numerics/complex.hpp"
#include "rsaux/numerics/precision.hpp"
#include "rsaux/rfunc/rfunc.hpp"
#include "rsaux/zeros/types.hpp"

namespace rsaux::zeros {

struct divergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct basin_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Double-precision Newton polish, used to classify where a curve ends.
inline ComplexD refineNewtonFast(ComplexD s, int max_iter = 30) {
  for (int it = 0; it < max_iter; ++it) {
    const auto r = rfunc::evaluateFast(s, true);
    const ComplexD delta = r.value / r.derivative;
    s -= delta;
    if (abs(delta) < 1e-12 * (1 + abs(s))) return s;
  }
  throw divergence_error("refineNewtonFast: no convergence");
}

/// Multiprecision zero together with its Newton history.
struct RefinedZero {
  ComplexMP rho;
  int digits = 0;
  int iterations = 0;
  double last_step = 0;
};

/// Extra fractional digits carried in a Zero's decimal text beyond its
/// certified digits.
inline constexpr int kExtraPlaces = 5;

/// Newton iteration s <- s - R(s)/R'(s) at the working precision of ctx
/// (raised for large |sigma|) until the step is below 10^-(digits+2).
inline RefinedZero refineNewtonMP(const ComplexPoint& s0, int digits, const PrecisionContext& ctx) {
  PrecisionContext base = ctx;
  base.target_digits = std::max(ctx.target_digits, digits);
  const PrecisionContext work = rfunc::contextFor(s0.sigma, s0.t, base);
  ScopedPrecision guard(work);
  const int quad_digits = std::max(digits + 2, ctx.target_digits);
  const mp_real stop = numerics::epsilon_for_digits<mp_real>(digits + 2);

  ComplexMP s = s0.as<mp_real>();
  RefinedZero out;
  double previous = 0;
  int growing = 0;
  for (int it = 0; it < 60; ++it) {
    const auto r = rfunc::evaluateMP(s, quad_digits, true);
    const ComplexMP delta = r.value / r.derivative;
    const mp_real size = abs(delta);
    const double size_d = to_double(size);
    if (it == 0 && !(size_d < 0.5))
      throw basin_error("refineNewton: start point outside the Newton basin (|R/R'| = " + std::to_string(size_d) +
                        ")");
    s -= delta;
    out.iterations = it + 1;
    out.last_step = size_d;
    if (size < stop) {
      out.rho = s;
      out.digits = digits;
      return out;
    }
    growing = (it > 0 && size_d > previous) ? growing + 1 : 0;
    if (growing >= 3) throw divergence_error("refineNewton: step grew three times in a row");
    previous = size_d;
  }
  throw divergence_error("refineNewton: no convergence in 60 iterations");
}

/// Refined zero as a Zero record (ordinal and seed left for the caller).
inline Zero refineNewton(const ComplexPoint& s0, int digits, const PrecisionContext& ctx) {
  const RefinedZero r = refineNewtonMP(s0, digits, ctx);
  ScopedPrecision guard(digits + kExtraPlaces + 10);
  Zero z;
  z.beta = Decimal::truncate(r.rho.re, digits + kExtraPlaces);
  z.gamma = Decimal::truncate(r.rho.im, digits + kExtraPlaces);
  z.digits = digits;
  return z;
}

}  // namespace rsaux::zeros

#endif  // RSAUX_ZEROS_NEWTON_HPP

#ifndef RSAUX_NUMERICS_GAMMA_HPP
#define RSAUX_NUMERICS_GAMMA_HPP

#include <cmath>
#include <string>

#include "rsaux/numerics/bernoulli.hpp"
#include "rsaux/numerics/complex.hpp"
#include "rsaux/numerics/precision.hpp"

namespace rsaux::numerics {

template <typename Real>
Real epsilon_for_digits(int digits) {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::pow(Real(10), -Real(digits));
  } else {
    return Real("1e-" + std::to_string(digits));
  }
}

template <typename Real>
bool is_nonpositive_integer(const Complex<Real>& z) {
  using std::floor;
  return z.im == 0 && z.re <= 0 && floor(z.re) == z.re;
}

/// Round a multiprecision value to `digits` significant decimal digits.
inline mp_real round_to_digits(const mp_real& x, int digits) {
  return mp_real(x, static_cast<unsigned>(digits));
}

inline ComplexMP round_to_digits(const ComplexMP& z, int digits) {
  return {round_to_digits(z.re, digits), round_to_digits(z.im, digits)};
}

/// Principal branch of log Gamma(z) at the working precision of `Real`.
///
/// The argument is shifted right until |z+N| is large enough for the Stirling
/// series to reach full precision, and the shift is undone with a sum of
/// principal logarithms, which keeps the branch continuous off (-inf, 0].
template <typename Real>
Complex<Real> logGamma(const Complex<Real>& z) {
  using std::ceil;
  using std::log;
  if (is_nonpositive_integer(z)) throw pole_error("logGamma: pole at non-positive integer");

  const int digits = effective_digits<Real>() + 2;
  const Real eps = epsilon_for_digits<Real>(digits);
  const double r0 = 0.5 * digits + 6;

  Complex<Real> w = z;
  Complex<Real> shift_log;
  long shift = 0;
  if (to_double(w.re) < 0) shift = static_cast<long>(std::ceil(-to_double(w.re))) + 1;
  {
    const double re = to_double(w.re) + static_cast<double>(shift);
    const double im = to_double(w.im);
    if (std::hypot(re, im) < r0) shift += static_cast<long>(std::ceil(r0 - re));
  }
  for (long j = 0; j < shift; ++j) {
    shift_log += log(Complex<Real>(w.re + Real(j), w.im));
  }
  w.re += Real(shift);

  const Real two_pi = 2 * pi_v<Real>();
  Complex<Real> lw = log(w);
  Complex<Real> result = (w - Complex<Real>(Real(0.5))) * lw - w + Complex<Real>(log(two_pi) / 2);
  const Complex<Real> inv_w = Complex<Real>(Real(1)) / w;
  const Complex<Real> inv_w2 = inv_w * inv_w;
  Complex<Real> power = inv_w;
  const Real scale = abs(result);
  for (std::size_t k = 1; k < 400; ++k) {
    Real coef = bernoulli_b2n<Real>(k) / Real(static_cast<double>((2 * k) * (2 * k - 1)));
    Complex<Real> term = power * coef;
    result += term;
    if (abs(term) <= eps * scale) break;
    power *= inv_w2;
  }
  return result - shift_log;
}

/// Riemann-Siegel phase: Im logGamma(1/4 + i t/2) - (t/2) log pi.
template <typename Real>
Real theta(const Real& t) {
  using std::log;
  if (t < 0) return -theta<Real>(-t);
  Complex<Real> z(Real(1) / 4, t / 2);
  return logGamma(z).im - t / 2 * log(pi_v<Real>());
}

/// Functional-equation factor pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2).
template <typename Real>
Complex<Real> chi(const Complex<Real>& s) {
  using std::log;
  const Complex<Real> half_s = s * Real(0.5);
  const Complex<Real> half_1ms = (Complex<Real>(Real(1)) - s) * Real(0.5);
  if (is_nonpositive_integer(half_s) || is_nonpositive_integer(half_1ms))
    throw pole_error("chi: Gamma factor pole");
  const Complex<Real> exponent = (s - Complex<Real>(Real(0.5))) * log(pi_v<Real>()) + logGamma(half_1ms) -
                                 logGamma(half_s);
  return exp(exponent);
}

// Public entry points at a given precision context. Results are rounded to
// the target digits.

inline ComplexMP logGamma(const ComplexPoint& s, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx);
  return round_to_digits(logGamma(s.as<mp_real>()), ctx.target_digits);
}

inline mp_real theta(double t, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx);
  return round_to_digits(theta(mp_real(t)), ctx.target_digits);
}

inline ComplexMP chi(const ComplexPoint& s, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx);
  return round_to_digits(chi(s.as<mp_real>()), ctx.target_digits);
}

}  // namespace rsaux::numerics

#endif  // RSAUX_NUMERICS_GAMMA_HPP

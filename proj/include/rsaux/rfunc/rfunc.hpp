#ifndef RSAUX_RFUNC_RFUNC_HPP
#define RSAUX_RFUNC_RFUNC_HPP

#include <algorithm>
#include <cmath>
#include <optional>

#include "rsaux/numerics/complex.hpp"
#include "rsaux/numerics/gamma.hpp"
#include "rsaux/numerics/precision.hpp"
#include "rsaux/numerics/zeta.hpp"
#include "rsaux/rfunc/quadrature.hpp"

namespace rsaux::rfunc {

/// R(s) together with R'(s) and bookkeeping.
template <typename Real>
struct REval {
  Complex<Real> value;
  Complex<Real> derivative;
  double err_estimate = 0;  // quadrature disagreement relative to the integrand mass
  int main_terms = 0;       // number of terms n^{-s} in the main sum
};

/// Public result of evalR.
struct RValue {
  ComplexMP value;
  double err_estimate = 0;
  int main_terms = 0;
};

/// Number of main-sum terms m for s. The integration line crosses the real
/// axis at m + 1/2, the half-integer nearest the foot of the 45 degree line
/// through the saddle point x0 = sqrt(s / 2 pi i) of x^{-s} e^{pi i x^2}.
/// On the critical line this is floor(sqrt(t / 2 pi)).
inline int mainTerms(double sigma, double t) {
  if (t < 0) return 0;
  const ComplexD w = ComplexD(t, -sigma) / (2 * M_PI);  // s / (2 pi i)
  const ComplexD x0 = sqrt(w);
  const double foot = x0.re - x0.im;
  return foot <= 0 ? 0 : static_cast<int>(std::floor(foot));
}

/// Extra guard digits needed to keep relative accuracy when |sigma| is large.
inline double extraGuardDigits(double sigma, int m) {
  return 0.35 * std::abs(sigma) * std::log10(m + 1.0);
}

struct EvalOptions {
  int digits = 25;                   // target accuracy of the quadrature
  bool with_derivative = false;
  std::optional<int> forced_terms;   // override m (crossing moves to m + 1/2)
};

/// R(s) = sum_{n<=m} n^{-s} + integral over the line crossing at m + 1/2.
template <typename Real>
REval<Real> evaluate(const Complex<Real>& s, const EvalOptions& opt) {
  using std::log;
  const double sigma = to_double(s.re);
  const double t = to_double(s.im);
  const int m = opt.forced_terms.value_or(mainTerms(sigma, t));
  if (m < 0) throw std::invalid_argument("main sum length must be non-negative");

  REval<Real> out;
  out.main_terms = m;
  for (int n = 2; n <= m; ++n) {
    const Real ln = log(Real(n));
    const Complex<Real> term = exp(-s * ln);
    out.value += term;
    if (opt.with_derivative) out.derivative -= term * ln;
  }
  if (m >= 1) out.value += Complex<Real>(Real(1));

  const auto q = QuadratureParams::defaults(m + 0.5, opt.digits);
  const auto path = evalPathIntegral(s, q, opt.digits, opt.with_derivative);
  out.value += path.value;
  out.derivative += path.derivative;
  out.err_estimate = path.l1 > 0 ? path.err / path.l1 : path.err;
  return out;
}

/// Double-precision evaluation for scanning, tracking and plotting.
inline REval<double> evaluateFast(const ComplexD& s, bool with_derivative = true, int digits = 13) {
  return evaluate(s, EvalOptions{digits, with_derivative, {}});
}

/// Working-precision context for evaluating R near s.
inline PrecisionContext contextFor(double sigma, double t, const PrecisionContext& ctx) {
  return ctx.with_extra_guard(extraGuardDigits(sigma, mainTerms(sigma, t)));
}

/// Multiprecision evaluation of R (and R') at a point already in mp form.
/// Runs at the working precision of the caller's ScopedPrecision.
inline REval<mp_real> evaluateMP(const ComplexMP& s, int digits, bool with_derivative) {
  return evaluate(s, EvalOptions{digits, with_derivative, {}});
}

inline RValue evalR(const ComplexPoint& s, const PrecisionContext& ctx, std::optional<int> forced_terms = {}) {
  const PrecisionContext work = contextFor(s.sigma, s.t, ctx);
  ScopedPrecision guard(work);
  const auto r = evaluate(s.as<mp_real>(), EvalOptions{ctx.target_digits, false, forced_terms});
  return {numerics::round_to_digits(r.value, ctx.target_digits), r.err_estimate, r.main_terms};
}

inline ComplexMP evalRprime(const ComplexPoint& s, const PrecisionContext& ctx) {
  const PrecisionContext work = contextFor(s.sigma, s.t, ctx);
  ScopedPrecision guard(work);
  const auto r = evaluate(s.as<mp_real>(), EvalOptions{ctx.target_digits, true, {}});
  return numerics::round_to_digits(r.derivative, ctx.target_digits);
}

namespace detail {

// chi(s), with the zeros of 1/Gamma(s/2) returned as exact zeros instead of
// being reported as poles.
template <typename Real>
Complex<Real> chiOrZero(const Complex<Real>& s) {
  if (numerics::is_nonpositive_integer(Complex<Real>(s.re / 2, s.im / 2))) return {};
  return numerics::chi(s);
}

}  // namespace detail

/// |zeta(s) - R(s) - chi(s) conj(R(1 - conj(s)))| at the caller's precision.
template <typename Real>
Real identityResidual(const Complex<Real>& s, int digits) {
  const Complex<Real> reflected(Real(1) - s.re, s.im);
  const auto r = evaluate(s, EvalOptions{digits, false, {}});
  const auto r_reflected = evaluate(reflected, EvalOptions{digits, false, {}});
  const auto zeta = numerics::zetaEM(s, digits);
  return abs(zeta - r.value - detail::chiOrZero(s) * conj(r_reflected.value));
}

inline mp_real identityResidual(const ComplexPoint& s, const PrecisionContext& ctx) {
  const double reach = std::max(std::abs(s.sigma), std::abs(1 - s.sigma));
  const PrecisionContext work =
      ctx.with_extra_guard(extraGuardDigits(reach, std::max(mainTerms(s.sigma, s.t), mainTerms(1 - s.sigma, s.t))));
  ScopedPrecision guard(work);
  return numerics::round_to_digits(identityResidual(s.as<mp_real>(), ctx.target_digits), ctx.target_digits);
}

/// pi^{-s/2} Gamma(s/2) R(s). On the critical line its real part is
/// -Xi(t) / (1/4 + t^2).
template <typename Real>
Complex<Real> xiWeighted(const Complex<Real>& s, int digits) {
  using std::log;
  const Complex<Real> half_s(s.re / 2, s.im / 2);
  if (numerics::is_nonpositive_integer(half_s)) throw pole_error("xiWeighted: Gamma(s/2) pole");
  const Complex<Real> factor = exp(-half_s * log(pi_v<Real>()) + numerics::logGamma(half_s));
  return factor * evaluate(s, EvalOptions{digits, false, {}}).value;
}

inline ComplexMP xiWeighted(const ComplexPoint& s, const PrecisionContext& ctx) {
  ScopedPrecision guard(contextFor(s.sigma, s.t, ctx));
  return numerics::round_to_digits(xiWeighted(s.as<mp_real>(), ctx.target_digits), ctx.target_digits);
}

/// Z(t) reconstructed from R: 2 Re(e^{i theta(t)} R(1/2 + i t)).
template <typename Real>
Real hardyZ(const Real& t, int digits) {
  using std::cos;
  using std::sin;
  const Real th = numerics::theta(t);
  const auto r = evaluate(Complex<Real>(Real(0.5), t), EvalOptions{digits, false, {}}).value;
  return 2 * (cos(th) * r.re - sin(th) * r.im);
}

/// Z(t) from the Euler-Maclaurin zeta: Re(zeta(1/2 + i t) e^{i theta(t)}).
template <typename Real>
Real hardyZFromZeta(const Real& t, int digits) {
  using std::cos;
  using std::sin;
  const Real th = numerics::theta(t);
  const auto z = numerics::zetaEM(Complex<Real>(Real(0.5), t), digits);
  return cos(th) * z.re - sin(th) * z.im;
}

}  // namespace rsaux::rfunc

#endif  // RSAUX_RFUNC_RFUNC_HPP

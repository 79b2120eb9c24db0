#ifndef RSAUX_RFUNC_QUADRATURE_HPP
#define RSAUX_RFUNC_QUADRATURE_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsaux/numerics/complex.hpp"
#include "rsaux/numerics/gamma.hpp"
#include "rsaux/numerics/precision.hpp"

namespace rsaux::rfunc {

/// Straight integration line x = crossing + u e^{i pi/4}, |u| <= halfwidth
/// (extended automatically while the integrand is still significant),
/// sampled by the trapezoid rule with spacing `step`, halved at most
/// `max_refinements` times.
struct QuadratureParams {
  double crossing = 0.5;
  double step = 0.5;
  double halfwidth = 4.0;
  int max_refinements = 12;

  static double min_halfwidth(int digits) {
    return std::sqrt((digits + 5) * std::log(10.0) / std::acos(-1.0));
  }

  static QuadratureParams defaults(double crossing, int digits) {
    QuadratureParams q;
    q.crossing = crossing;
    q.halfwidth = min_halfwidth(digits);
    return q;
  }

  void validate(int digits) const {
    const double frac = crossing - std::floor(crossing);
    if (frac < 0.25 || frac > 0.75)
      throw pole_error("integration line crosses the real axis within 0.25 of a pole");
    if (!(step > 0)) throw std::invalid_argument("quadrature step must be positive");
    if (max_refinements < 1) throw std::invalid_argument("max_refinements must be positive");
    if (halfwidth < min_halfwidth(digits) - 1e-12)
      throw std::invalid_argument("quadrature halfwidth too small for the requested digits");
  }
};

/// Global sign of the integral relative to integration in the direction of
/// increasing u. The path runs from upper right to lower left; the sign is
/// pinned by the critical-line identity Z(t) = 2 Re(e^{i theta} R(1/2+it)).
inline constexpr int kOrientation = -1;

template <typename Real>
struct PathIntegral {
  Complex<Real> value;
  Complex<Real> derivative;  // integral with the extra factor -log x
  double l1 = 0;             // trapezoid estimate of the integral of |integrand|
  double err = 0;            // |difference of the last two refinements|
  int refinements = 0;
};

namespace detail {

// log |x^{-s} e^{pi i x^2} / (e^{pi i x} - e^{-pi i x})| up to an additive
// O(1), in double precision. Used only to locate the significant range.
inline double log_magnitude(double sigma, double t, double p, double u) {
  const double c = std::sqrt(0.5);
  const double a = p + u * c;
  const double b = u * c;
  return -sigma * 0.5 * std::log(a * a + b * b) + t * std::atan2(b, a) - 2 * M_PI * a * b -
         M_PI * std::abs(b);
}

// Walk outward from u = 0 until the integrand has dropped `cutoff` below
// the largest value seen.
inline double tail_extent(double sigma, double t, double p, double direction, double minimum, double cutoff) {
  const double du = 0.125;
  double peak = log_magnitude(sigma, t, p, 0);
  double u = 0;
  for (int i = 0; i < 4000; ++i) {
    u += du;
    const double lm = log_magnitude(sigma, t, p, direction * u);
    if (lm > peak) peak = lm;
    if (u >= minimum && lm < peak - cutoff) return u;
  }
  throw convergence_error("path integral: integrand does not decay along the line");
}

}  // namespace detail

/// Trapezoid approximation of the integral of
///   x^{-s} e^{pi i x^2} / (e^{pi i x} - e^{-pi i x})
/// along the line of `q`, oriented as in Siegel's definition. Refines the
/// step until two successive results agree to 10^-(digits+2) relative to
/// the L1 mass of the integrand.
template <typename Real>
PathIntegral<Real> evalPathIntegral(const Complex<Real>& s, const QuadratureParams& q, int digits,
                                    bool with_derivative) {
  q.validate(digits);
  using std::log;
  using std::sqrt;
  const double sigma_d = to_double(s.re);
  const double t_d = to_double(s.im);
  const double p_d = q.crossing;
  const double cutoff = (digits + 4) * std::log(10.0) + 4;
  const double u_lo = std::max(q.halfwidth, detail::tail_extent(sigma_d, t_d, p_d, -1, q.halfwidth, cutoff));
  const double u_hi = std::max(q.halfwidth, detail::tail_extent(sigma_d, t_d, p_d, +1, q.halfwidth, cutoff));
  const long j_lo = -static_cast<long>(std::ceil(u_lo / q.step));
  const long j_hi = static_cast<long>(std::ceil(u_hi / q.step));

  const Real pi = pi_v<Real>();
  const Real c = sqrt(Real(0.5));
  const Real p(q.crossing);
  const Complex<Real> one(Real(1));
  const Complex<Real> i_pi(Real(0), pi);

  // Integrand (and derivative integrand) at u = k * h0 / 2^level.
  auto sample = [&](const Real& u, Complex<Real>& f, Complex<Real>& df) {
    const Complex<Real> x(p + u * c, u * c);
    const Complex<Real> lx = log(x);
    const bool upper = u >= 0;
    // The dominant exponential of the denominator is folded into the
    // exponent so nothing overflows for large |s|.
    Complex<Real> e = -s * lx + i_pi * x * x;
    e += upper ? i_pi * x : -(i_pi * x);
    const Complex<Real> qx = exp(upper ? Complex<Real>(Real(2)) * i_pi * x : Complex<Real>(Real(-2)) * i_pi * x);
    f = exp(e) / (one - qx);
    if (upper) f = -f;
    if (with_derivative) df = -(f * lx);
  };

  const Real h0(q.step);
  Complex<Real> sum, dsum;
  Real abs_sum(0);
  Complex<Real> f, df;
  for (long j = j_lo; j <= j_hi; ++j) {
    sample(Real(static_cast<double>(j)) * h0, f, df);
    sum += f;
    dsum += df;
    abs_sum += abs(f);
  }
  Real h = h0;
  const Complex<Real> omega(c, c);
  Complex<Real> value = omega * sum * h;
  Complex<Real> deriv = omega * dsum * h;

  // Never ask for more than the real type can resolve in a sum of this size.
  const double tol = std::max(std::pow(10.0, -(digits + 2)), 64 * std::pow(10.0, -effective_digits<Real>()));
  PathIntegral<Real> out;
  long count = j_hi - j_lo;  // intervals at the current level
  for (int level = 1; level <= q.max_refinements; ++level) {
    const Real h_new = h / 2;
    const Real start = Real(static_cast<double>(j_lo)) * h0 + h_new;
    for (long k = 0; k < count; ++k) {
      sample(start + Real(static_cast<double>(2 * k)) * h_new, f, df);
      sum += f;
      dsum += df;
      abs_sum += abs(f);
    }
    count *= 2;
    h = h_new;
    const Complex<Real> next = omega * sum * h;
    const Complex<Real> dnext = omega * dsum * h;
    const double l1 = to_double(Real(abs_sum * h));
    double diff = to_double(abs(next - value));
    if (with_derivative) diff = std::max(diff, to_double(abs(dnext - deriv)) / (1 + std::log(1 + std::abs(p_d) + u_hi)));
    value = next;
    deriv = dnext;
    if (level >= 2 && diff <= tol * l1) {
      out.value = value * Real(kOrientation);
      out.derivative = deriv * Real(kOrientation);
      out.l1 = l1;
      out.err = diff;
      out.refinements = level;
      return out;
    }
  }
  throw convergence_error("path integral: no convergence after " + std::to_string(q.max_refinements) +
                          " refinements");
}

}  // namespace rsaux::rfunc

#endif  // RSAUX_RFUNC_QUADRATURE_HPP

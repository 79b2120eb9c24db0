#ifndef RSAUX_NUMERICS_ZETA_HPP
#define RSAUX_NUMERICS_ZETA_HPP

#include <algorithm>
#include <cmath>
#include <optional>

#include "rsaux/numerics/bernoulli.hpp"
#include "rsaux/numerics/complex.hpp"
#include "rsaux/numerics/gamma.hpp"

namespace rsaux::numerics {

/// Default Euler-Maclaurin cut-off for zeta at s with `digits` target digits.
inline long zetaTruncation(const ComplexPoint& s, int digits) {
  return std::max<long>(10, static_cast<long>(std::ceil(std::abs(s.t) / 2)) + digits);
}

/// zeta(s) by Euler-Maclaurin summation with cut-off N.
///
/// Bernoulli corrections are added until they fall below `eps` relative to
/// the size of the tail. If the asymptotic corrections start to grow before
/// that, N is doubled and the sum restarted.
template <typename Real>
Complex<Real> zetaEM(const Complex<Real>& s, long n_cut, const Real& eps) {
  using std::log;
  if (s.re == 1 && s.im == 0) throw pole_error("zetaEM: pole at s = 1");
  const Complex<Real> one(Real(1));

  for (int attempt = 0; attempt < 8; ++attempt, n_cut *= 2) {
    Complex<Real> sum;
    for (long n = 1; n < n_cut; ++n) sum += exp(-s * log(Real(n)));

    const Real log_n = log(Real(n_cut));
    const Complex<Real> n_pow = exp(-s * log_n);  // N^{-s}
    sum += n_pow * Real(n_cut) / (s - one);
    sum += n_pow * Real(0.5);

    // term_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    const Real inv_n2 = Real(1) / (Real(n_cut) * Real(n_cut));
    Complex<Real> rising = s;
    Complex<Real> power = n_pow / Real(n_cut);
    Real factorial = 2;
    const Real scale = std::max(abs(sum), abs(n_pow));
    Real previous = -1;
    bool converged = false;
    for (std::size_t k = 1; k < 500; ++k) {
      Complex<Real> term = rising * power * (bernoulli_b2n<Real>(k) / factorial);
      const Real size = abs(term);
      if (previous >= 0 && size > previous && size > eps * scale) break;
      sum += term;
      if (size <= eps * scale) {
        converged = true;
        break;
      }
      previous = size;
      const Real a = Real(static_cast<double>(2 * k - 1));
      rising *= (s + Complex<Real>(a)) * (s + Complex<Real>(a + 1));
      power *= inv_n2;
      factorial *= Real(static_cast<double>((2 * k + 1) * (2 * k + 2)));
    }
    if (converged) return sum;
  }
  throw convergence_error("zetaEM: Euler-Maclaurin corrections did not converge");
}

/// zeta(s) at the working precision of `Real`, default cut-off.
template <typename Real>
Complex<Real> zetaEM(const Complex<Real>& s, int target_digits) {
  const ComplexPoint p(to_double(s.re), to_double(s.im));
  return zetaEM(s, zetaTruncation(p, target_digits), epsilon_for_digits<Real>(target_digits + 5));
}

inline ComplexMP zetaEM(const ComplexPoint& s, const PrecisionContext& ctx, std::optional<long> n_cut = {}) {
  ScopedPrecision guard(ctx);
  const long n = n_cut.value_or(zetaTruncation(s, ctx.target_digits));
  return round_to_digits(zetaEM(s.as<mp_real>(), n, epsilon_for_digits<mp_real>(ctx.target_digits + 5)),
                         ctx.target_digits);
}

}  // namespace rsaux::numerics

#endif  // RSAUX_NUMERICS_ZETA_HPP

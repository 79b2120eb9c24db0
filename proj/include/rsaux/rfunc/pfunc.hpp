#ifndef RSAUX_RFUNC_PFUNC_HPP
#define RSAUX_RFUNC_PFUNC_HPP

#include <cmath>
#include <stdexcept>

#include "rsaux/numerics/bernoulli.hpp"

namespace rsaux::rfunc {

/// Clausen function Cl_2(theta) = sum_{n>=1} sin(n theta) / n^2.
///
/// After reduction to [-pi, pi] uses
///   Cl_2(theta) = theta - theta log|theta| + sum_k |B_2k| theta^{2k+1} / (2k (2k+1)!)
/// whose terms shrink at least like 4^-k.
inline double clausen2(double theta, double tol = 1e-16) {
  const double two_pi = 2 * M_PI;
  theta -= two_pi * std::round(theta / two_pi);
  if (theta == 0) return 0;
  const double a = std::abs(theta);
  double sum = a - a * std::log(a);
  const double a2 = a * a;
  double power = a * a2;  // a^{2k+1}
  double factorial = 6;   // (2k+1)!
  for (std::size_t k = 1; k < 200; ++k) {
    const double term = std::abs(numerics::bernoulli_b2n<double>(k)) * power / (2.0 * k * factorial);
    sum += term;
    if (term < tol) break;
    power *= a2;
    factorial *= (2.0 * k + 2) * (2.0 * k + 3);
  }
  return theta < 0 ? -sum : sum;
}

/// P(x) = sum 2 sin(2 pi n x)/n^2 - sum (-1)^n sin(4 pi n x)/n^2
///      = 2 Cl_2(2 pi x) - Cl_2(4 pi x + pi),
/// accurate to `tol`. Odd and 1-periodic; |P| <= 3 zeta(2).
inline double Pfunc(double x, double tol = 1e-12) {
  if (!(tol > 0)) throw std::invalid_argument("Pfunc: tolerance must be positive");
  const double frac = x - std::floor(x);
  const double series_tol = std::min(tol, 1e-8) * 1e-3;
  return 2 * clausen2(2 * M_PI * frac, series_tol) - clausen2(4 * M_PI * frac + M_PI, series_tol);
}

}  // namespace rsaux::rfunc

#endif  // RSAUX_RFUNC_PFUNC_HPP

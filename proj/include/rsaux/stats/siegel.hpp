#ifndef RSAUX_STATS_SIEGEL_HPP
#define RSAUX_STATS_SIEGEL_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "rsaux/rfunc/pfunc.hpp"
#include "rsaux/zeros/types.hpp"

namespace rsaux::stats {

struct horizon_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Siegel's sum h(T) = -sum of beta over zeros with 0 < gamma <= T, added
/// exactly from the decimal strings (so h(T2) - h(T1) is exactly the sum
/// over (T1, T2]) and returned as a Decimal.
inline Decimal siegelSumExact(const ZeroSet& zs, double T) {
  using boost::multiprecision::mpz_int;
  if (T > zs.t_max) throw horizon_error("siegelSum: T=" + std::to_string(T) + " beyond the horizon " + std::to_string(zs.t_max));
  int places = 1;
  for (const auto& z : zs.zeros) places = std::max(places, z.beta.places());
  mpz_int total = 0;
  for (const auto& z : zs.zeros) {
    const double g = z.g();
    if (!(g > 0 && g <= T)) continue;
    std::string digits = z.beta.text();
    const bool neg = digits[0] == '-';
    if (neg) digits.erase(0, 1);
    digits.erase(digits.find('.'), 1);
    digits.append(static_cast<std::size_t>(places - z.beta.places()), '0');
    // Leading zeros would make GMP read the string as octal.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    const mpz_int v(digits);
    if (neg) total += v;
    else total -= v;
  }
  const bool negative = total < 0;
  std::string body = (negative ? mpz_int(-total) : total).str();
  if (body.size() <= static_cast<std::size_t>(places)) body.insert(0, places + 1 - body.size(), '0');
  body.insert(body.size() - places, ".");
  return Decimal((negative ? "-" : "") + body);
}

inline double siegelSum(const ZeroSet& zs, double T) { return siegelSumExact(zs, T).value(); }

/// Tolerance used for P inside the conjectured correction.
inline constexpr double kHConjPTol = 1e-8;

/// h(T) - T/4pi log 2 - (1/4 + P(sqrt(T/2pi))/2pi) sqrt(T/2pi).
///
/// The correction is subtracted: with this sign the P-term absorbs the
/// per-section oscillation of h on computed zeros, with the opposite sign
/// it doubles it.
inline double hConjResidual(const ZeroSet& zs, double T) {
  const double x = std::sqrt(T / (2 * M_PI));
  return siegelSum(zs, T) - T / (4 * M_PI) * std::log(2.0) - (0.25 + rfunc::Pfunc(x, kHConjPTol) / (2 * M_PI)) * x;
}

/// The same residual with the periodic P-term dropped:
/// h(T) - T/4pi log 2 - sqrt(T/2pi)/4.
inline double hResidualWithoutP(const ZeroSet& zs, double T) {
  const double x = std::sqrt(T / (2 * M_PI));
  return siegelSum(zs, T) - T / (4 * M_PI) * std::log(2.0) - 0.25 * x;
}

}  // namespace rsaux::stats

#endif  // RSAUX_STATS_SIEGEL_HPP

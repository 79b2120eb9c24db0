#ifndef RSAUX_STATS_COUNTING_HPP
#define RSAUX_STATS_COUNTING_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace rsaux::stats {

/// Smooth part of the zero-counting function without the domain check,
/// T/4pi log(T/2pi) - T/4pi - 1/2 sqrt(T/2pi) + 3/2.
inline double countingMain(double T) {
  const double x = T / (2 * M_PI);
  return T / (4 * M_PI) * std::log(x) - T / (4 * M_PI) - 0.5 * std::sqrt(x) + 1.5;
}

/// Conjectured number of zeros of R with 0 < gamma <= T. Requires T > 2 pi.
inline double predictedN(double T) {
  if (!(T > 2 * M_PI)) throw std::domain_error("predictedN: T must exceed 2*pi, got " + std::to_string(T));
  return countingMain(T);
}

/// r = predictedN(gamma) - n for the zero of ordinal n.
inline double countingResidual(double gamma, long n) { return countingMain(gamma) - static_cast<double>(n); }

}  // namespace rsaux::stats

#endif  // RSAUX_STATS_COUNTING_HPP

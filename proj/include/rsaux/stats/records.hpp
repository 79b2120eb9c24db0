#ifndef RSAUX_STATS_RECORDS_HPP
#define RSAUX_STATS_RECORDS_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsaux/zeros/types.hpp"

namespace rsaux::stats {

/// A zero whose -beta exceeds that of every zero with smaller ordinal.
struct RecordEntry {
  int k = 0;    // record rank, from 1
  int n_k = 0;  // ordinal of the zero
  double beta = 0;
  double gamma = 0;
  double delta = 0;               // sqrt(gamma/2pi) - (k+1)
  bool nearest_integer = true;    // k+1 is the integer closest to sqrt(gamma/2pi)
  bool sign_jump = false;         // delta turned from positive to negative at this record
};

/// Records of -beta scanned in ordinal order.
inline std::vector<RecordEntry> records(const ZeroSet& zs) {
  std::vector<RecordEntry> out;
  double best = -INFINITY;
  for (const auto& z : zs.zeros) {
    if (z.outside_horizon) continue;
    const double b = z.b();
    if (!(-b > best)) continue;
    best = -b;
    RecordEntry e;
    e.k = static_cast<int>(out.size() + 1);
    e.n_k = z.ordinal;
    e.beta = b;
    e.gamma = z.g();
    e.delta = std::sqrt(e.gamma / (2 * M_PI)) - (e.k + 1);
    e.nearest_integer = std::abs(e.delta) < 0.5;
    e.sign_jump = !out.empty() && out.back().delta > 0 && e.delta < 0;
    out.push_back(e);
  }
  return out;
}

/// Residuals of the extremal law -beta ~ 2.2430 (gamma/2pi)^{1/3}.
struct ExtremalReport {
  std::vector<double> residuals;  // -beta - 2.2430 (gamma/2pi)^{1/3}, one per record
  std::vector<int> flagged;       // record ranks k whose residual is outside (lo, hi)
  double lo = -2.0;
  double hi = 2.5;

  bool ok() const { return flagged.empty(); }
};

inline constexpr double kExtremalCoefficient = 2.2430;

inline double extremalResidual(double beta, double gamma) {
  return -beta - kExtremalCoefficient * std::cbrt(gamma / (2 * M_PI));
}

inline ExtremalReport extremalFitCheck(const std::vector<RecordEntry>& recs) {
  if (recs.size() < 3)
    throw std::invalid_argument("extremalFitCheck: need at least 3 records, got " + std::to_string(recs.size()));
  ExtremalReport rep;
  for (const auto& r : recs) {
    const double res = extremalResidual(r.beta, r.gamma);
    rep.residuals.push_back(res);
    if (!(res > rep.lo && res < rep.hi)) rep.flagged.push_back(r.k);
  }
  return rep;
}

}  // namespace rsaux::stats

#endif  // RSAUX_STATS_RECORDS_HPP

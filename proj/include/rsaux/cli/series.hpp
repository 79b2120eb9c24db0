#ifndef RSAUX_CLI_SERIES_HPP
#define RSAUX_CLI_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rsaux/rfunc/pfunc.hpp"
#include "rsaux/stats.hpp"
#include "rsaux/store/csv.hpp"
#include "rsaux/zeros/types.hpp"

namespace rsaux::cli {

/// Spacing of the fixed grid added to per-zero samples in the h series.
inline constexpr double kHGridStep = 0.5;

/// ordinal, gamma, predicted count, residual r_n.
inline store::Series countingSeries(const ZeroSet& zs) {
  store::Series s{{"ordinal", "gamma", "predicted", "residual"}, {}};
  for (const auto& z : zs.zeros) {
    const double g = z.g();
    const double p = stats::countingMain(g);
    s.rows.push_back({double(z.ordinal), g, p, p - z.ordinal});
  }
  return s;
}

inline store::Series fitSeries(const stats::FitResult& f, double sigma_cut) {
  return {{"sigma", "A", "B", "C", "m", "n", "mu"}, {{sigma_cut, f.A, f.B, f.C, f.m, double(f.n), f.mu}}};
}

inline store::Series recordsSeries(const std::vector<stats::RecordEntry>& recs) {
  store::Series s{{"k", "ordinal", "beta", "gamma", "delta", "extremal_residual", "nearest_integer", "sign_jump"}, {}};
  for (const auto& r : recs)
    s.rows.push_back({double(r.k), double(r.n_k), r.beta, r.gamma, r.delta, stats::extremalResidual(r.beta, r.gamma),
                      r.nearest_integer ? 1.0 : 0.0, r.sign_jump ? 1.0 : 0.0});
  return s;
}

/// h(T) and both residuals, sampled at every zero height and on a 0.5 grid
/// up to the horizon. h is accumulated in one pass over the zeros sorted by
/// height.
inline store::Series hSeries(const ZeroSet& zs) {
  std::vector<std::pair<double, double>> jumps;  // (gamma, -beta)
  for (const auto& z : zs.zeros)
    if (!z.outside_horizon && z.g() > 0 && z.g() <= zs.t_max) jumps.emplace_back(z.g(), -z.b());
  std::sort(jumps.begin(), jumps.end());

  std::vector<double> ts;
  for (const auto& j : jumps) ts.push_back(j.first);
  for (double t = kHGridStep; t <= zs.t_max; t += kHGridStep) ts.push_back(t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  store::Series s{{"t", "h", "residual", "residual_without_p"}, {}};
  double h = 0;
  std::size_t k = 0;
  for (double t : ts) {
    while (k < jumps.size() && jumps[k].first <= t) h += jumps[k++].second;
    const double x = std::sqrt(t / (2 * M_PI));
    const double base = h - t / (4 * M_PI) * std::log(2.0);
    s.rows.push_back({t, h, base - (0.25 + rfunc::Pfunc(x, stats::kHConjPTol) / (2 * M_PI)) * x, base - 0.25 * x});
  }
  return s;
}

inline store::Series histogramSeries(const std::vector<stats::HistogramBin>& bins) {
  store::Series s{{"k", "lo", "hi", "count", "density"}, {}};
  for (const auto& b : bins) s.rows.push_back({double(b.k), b.lo, b.hi, double(b.count), b.density});
  return s;
}

inline store::Series densitySeries(const std::vector<stats::DensityPoint>& pts) {
  store::Series s{{"t", "below_half", "total", "delta"}, {}};
  for (const auto& p : pts) s.rows.push_back({p.t, double(p.below), double(p.total), p.delta});
  return s;
}

inline store::Series annulusSeries(const std::vector<stats::AnnulusRow>& rows) {
  store::Series s{{"n", "c_right", "c_left", "c_mid", "c_neg"}, {}};
  for (const auto& r : rows)
    s.rows.push_back({double(r.n), double(r.c_right), double(r.c_left), double(r.c_mid), double(r.c_neg)});
  return s;
}

}  // namespace rsaux::cli

#endif  // RSAUX_CLI_SERIES_HPP

#ifndef RSAUX_STATS_DISTRIBUTION_HPP
#define RSAUX_STATS_DISTRIBUTION_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "rsaux/zeros/types.hpp"

namespace rsaux::stats {

namespace detail {

// Zeros that count for the horizontal statistics: 0 < gamma <= t_max.
inline std::vector<const Zero*> counted(const ZeroSet& zs) {
  std::vector<const Zero*> out;
  for (const auto& z : zs.zeros)
    if (!z.outside_horizon && z.g() > 0) out.push_back(&z);
  return out;
}

}  // namespace detail

/// One histogram bin [k/M, (k+1)/M) of beta values.
struct HistogramBin {
  long k = 0;
  double lo = 0;
  double hi = 0;
  long count = 0;
  double density = 0;  // count * M / Z
};

/// Histogram of beta with M bins per unit; bins run over every k between
/// the lowest and highest occupied one, so empty interior bins appear.
inline std::vector<HistogramBin> histogram(const ZeroSet& zs, int M) {
  if (M < 1) throw std::invalid_argument("histogram: M must be at least 1");
  const auto zeros = detail::counted(zs);
  std::map<long, long> counts;
  for (const Zero* z : zeros) {
    // Exact bin index from the decimal text would need arbitrary precision;
    // floor on the double value is exact except within 1e-16 of an edge.
    ++counts[static_cast<long>(std::floor(z->b() * M))];
  }
  std::vector<HistogramBin> out;
  if (counts.empty()) return out;
  const double Z = static_cast<double>(zeros.size());
  for (long k = counts.begin()->first; k <= counts.rbegin()->first; ++k) {
    HistogramBin b;
    b.k = k;
    b.lo = static_cast<double>(k) / M;
    b.hi = static_cast<double>(k + 1) / M;
    auto it = counts.find(k);
    b.count = it == counts.end() ? 0 : it->second;
    b.density = static_cast<double>(b.count) * M / Z;
    out.push_back(b);
  }
  return out;
}

/// delta(t): fraction of zeros up to height t with beta < 1/2.
struct DensityPoint {
  double t = 0;
  long below = 0;  // zeros with beta < 1/2
  long total = 0;
  double delta = 0;
};

/// Running density sampled at each zero in increasing gamma.
inline std::vector<DensityPoint> densityEvolution(const ZeroSet& zs) {
  auto zeros = detail::counted(zs);
  std::stable_sort(zeros.begin(), zeros.end(), [](const Zero* a, const Zero* b) { return a->g() < b->g(); });
  std::vector<DensityPoint> out;
  long below = 0;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (zeros[i]->b() < 0.5) ++below;
    const long total = static_cast<long>(i + 1);
    out.push_back({zeros[i]->g(), below, total, static_cast<double>(below) / static_cast<double>(total)});
  }
  return out;
}

/// Zero counts in the section 2pi(n-1)^2 <= gamma < 2pi n^2 by beta class.
struct AnnulusRow {
  int n = 0;
  long c_right = 0;  // beta in [1/2, 1)
  long c_left = 0;   // beta < 1/2
  long c_mid = 0;    // beta in [0, 1/2)
  long c_neg = 0;    // beta < 0
};

/// Rows n = 1, 2, ... for every section lying below the horizon.
inline std::vector<AnnulusRow> annulusTable(const ZeroSet& zs) {
  const double two_pi = 2 * M_PI;
  const int rows = static_cast<int>(std::floor(std::sqrt(zs.t_max / two_pi) + 1e-9));
  std::vector<AnnulusRow> out(static_cast<std::size_t>(std::max(rows, 0)));
  for (int n = 1; n <= rows; ++n) out[static_cast<std::size_t>(n - 1)].n = n;
  for (const Zero* z : detail::counted(zs)) {
    const double g = z->g();
    const int n = static_cast<int>(std::floor(std::sqrt(g / two_pi))) + 1;
    if (n < 1 || n > rows) continue;
    // Guard the floor against rounding right at a section edge.
    int idx = n;
    if (g < two_pi * (idx - 1) * (idx - 1)) --idx;
    else if (g >= two_pi * idx * idx) ++idx;
    if (idx < 1 || idx > rows) continue;
    auto& row = out[static_cast<std::size_t>(idx - 1)];
    const double b = z->b();
    if (b >= 0.5) {
      ++row.c_right;
    } else {
      ++row.c_left;
      if (b >= 0) ++row.c_mid;
      else ++row.c_neg;
    }
  }
  return out;
}

}  // namespace rsaux::stats

#endif  // RSAUX_STATS_DISTRIBUTION_HPP

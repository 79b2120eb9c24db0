#ifndef RSAUX_STORE_XRAY_HPP
#define RSAUX_STORE_XRAY_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsaux/numerics/parallel.hpp"
#include "rsaux/rfunc/rfunc.hpp"
#include "rsaux/store/csv.hpp"

namespace rsaux::store {

struct Region {
  double sigma_lo = 0, sigma_hi = 0;
  double t_lo = 0, t_hi = 0;
};

/// Signs of Re f and Im f on a regular grid, f = R or pi^{-s/2} Gamma(s/2) R.
/// Points are stored row by row: index = j * resolution + i for sigma_i, t_j.
struct XrayGrid {
  Region region;
  int resolution = 0;
  bool weighted = false;
  std::vector<signed char> sign_re;
  std::vector<signed char> sign_im;
  std::vector<bool> pole;  // grid point sits on a Gamma(s/2) pole; signs are 0 there

  double sigma(int i) const { return region.sigma_lo + (region.sigma_hi - region.sigma_lo) * i / (resolution - 1); }
  double t(int j) const { return region.t_lo + (region.t_hi - region.t_lo) * j / (resolution - 1); }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * resolution + i; }
};

/// Digits requested from R for sign plots.
inline constexpr int kXrayDigits = 10;

inline int signOf(double x) { return (x > 0) - (x < 0); }

inline XrayGrid xrayGrid(const Region& region, int resolution, bool weighted, unsigned threads = 0) {
  if (resolution < 2) throw std::invalid_argument("xrayGrid: resolution must be at least 2");
  for (double v : {region.sigma_lo, region.sigma_hi, region.t_lo, region.t_hi})
    if (!std::isfinite(v)) throw std::invalid_argument("xrayGrid: region must be finite");
  if (!(region.sigma_lo < region.sigma_hi && region.t_lo < region.t_hi))
    throw std::invalid_argument("xrayGrid: region bounds must be increasing");

  XrayGrid g;
  g.region = region;
  g.resolution = resolution;
  g.weighted = weighted;
  const std::size_t n = static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution);
  g.sign_re.assign(n, 0);
  g.sign_im.assign(n, 0);
  std::vector<char> pole(n, 0);
  parallel_for(n, threads, [&](std::size_t k) {
    const int i = static_cast<int>(k % static_cast<std::size_t>(resolution));
    const int j = static_cast<int>(k / static_cast<std::size_t>(resolution));
    const ComplexD s(g.sigma(i), g.t(j));
    ComplexD v;
    try {
      v = weighted ? rfunc::xiWeighted(s, kXrayDigits) : rfunc::evaluateFast(s, false, kXrayDigits).value;
    } catch (const pole_error&) {
      pole[k] = 1;
      return;
    } catch (const std::exception&) {
      return;  // leaves signs 0: evaluation failed at this point
    }
    if (!std::isfinite(v.re) || !std::isfinite(v.im)) {
      pole[k] = weighted ? 1 : 0;
      return;
    }
    g.sign_re[k] = static_cast<signed char>(signOf(v.re));
    g.sign_im[k] = static_cast<signed char>(signOf(v.im));
  });
  g.pole.assign(pole.begin(), pole.end());
  return g;
}

/// CSV columns sigma, t, sign_re, sign_im, pole.
inline Series xraySeries(const XrayGrid& g) {
  Series s{{"sigma", "t", "sign_re", "sign_im", "pole"}, {}};
  for (int j = 0; j < g.resolution; ++j)
    for (int i = 0; i < g.resolution; ++i) {
      const auto k = g.index(i, j);
      s.rows.push_back({g.sigma(i), g.t(j), double(g.sign_re[k]), double(g.sign_im[k]), g.pole[k] ? 1.0 : 0.0});
    }
  return s;
}

}  // namespace rsaux::store

#endif  // RSAUX_STORE_XRAY_HPP

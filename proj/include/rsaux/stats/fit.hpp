#ifndef RSAUX_STATS_FIT_HPP
#define RSAUX_STATS_FIT_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "rsaux/zeros/types.hpp"

namespace rsaux::stats {

struct rank_deficiency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Least-squares fit of n ~ A (T/4pi log(T/2pi) - T/4pi) + B sqrt(T/2pi) + C
/// at T = gamma_n. `m` is the attained minimum of the sum of squares and
/// mu = m / n its mean.
struct FitResult {
  double A = 0;
  double B = 0;
  double C = 0;
  double m = 0;
  long n = 0;
  double mu = 0;
};

/// One observation of the fit: height and ordinal.
struct FitSample {
  double gamma = 0;
  long ordinal = 0;
};

/// Fits the samples directly. Accumulation and the 3x3 solve run in 60
/// significant digits so that large sets (10^5 zeros, sums near 10^16)
/// loses nothing to cancellation.
inline FitResult fitSamples(const std::vector<FitSample>& samples) {
  using Big = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<60>,
                                            boost::multiprecision::et_off>;
  if (samples.size() < 3) throw std::invalid_argument("fitABC: need at least 3 zeros, got " + std::to_string(samples.size()));

  const Big two_pi = 2 * acos(Big(-1));
  std::vector<std::array<Big, 3>> rows;
  rows.reserve(samples.size());
  std::array<std::array<Big, 3>, 3> M{};
  std::array<Big, 3> v{};
  for (const auto& s : samples) {
    const Big T(s.gamma);
    const Big x = T / two_pi;
    const std::array<Big, 3> f{T / (2 * two_pi) * log(x) - T / (2 * two_pi), sqrt(x), Big(1)};
    const Big y(s.ordinal);
    for (int i = 0; i < 3; ++i) {
      v[i] += f[i] * y;
      for (int j = 0; j < 3; ++j) M[i][j] += f[i] * f[j];
    }
    rows.push_back(f);
  }

  // Gaussian elimination with partial pivoting; a pivot that is tiny against
  // the column scale means the features are linearly dependent on this data.
  std::array<Big, 3> scale;
  for (int i = 0; i < 3; ++i) scale[i] = sqrt(M[i][i]);
  const Big threshold("1e-40");
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (abs(M[r][c]) > abs(M[piv][c])) piv = r;
    std::swap(M[c], M[piv]);
    std::swap(v[c], v[piv]);
    if (scale[c] == 0 || abs(M[c][c]) <= threshold * scale[c] * scale[c])
      throw rank_deficiency_error("fitABC: design matrix is singular for these zeros");
    for (int r = c + 1; r < 3; ++r) {
      const Big f = M[r][c] / M[c][c];
      for (int k = c; k < 3; ++k) M[r][k] -= f * M[c][k];
      v[r] -= f * v[c];
    }
  }
  std::array<Big, 3> coef;
  for (int c = 2; c >= 0; --c) {
    Big acc = v[c];
    for (int k = c + 1; k < 3; ++k) acc -= M[c][k] * coef[k];
    coef[c] = acc / M[c][c];
  }

  Big m = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Big r = coef[0] * rows[i][0] + coef[1] * rows[i][1] + coef[2] - Big(samples[i].ordinal);
    m += r * r;
  }
  FitResult out;
  out.A = coef[0].convert_to<double>();
  out.B = coef[1].convert_to<double>();
  out.C = coef[2].convert_to<double>();
  out.m = m.convert_to<double>();
  out.n = static_cast<long>(samples.size());
  out.mu = out.m / static_cast<double>(out.n);
  return out;
}

/// Fit over the zeros with beta < sigma_cut and 0 < gamma <= t_max, using
/// each zero's ordinal as n.
inline FitResult fitABC(const ZeroSet& zs, double sigma_cut) {
  std::vector<FitSample> samples;
  for (const auto& z : zs.zeros)
    if (!z.outside_horizon && z.g() > 0 && z.b() < sigma_cut) samples.push_back({z.g(), z.ordinal});
  return fitSamples(samples);
}

}  // namespace rsaux::stats

#endif  // RSAUX_STATS_FIT_HPP

#ifndef RSAUX_ZEROS_VERIFY_HPP
#define RSAUX_ZEROS_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "rsaux/stats/counting.hpp"
#include "rsaux/zeros/types.hpp"

namespace rsaux::zeros {

/// A stretch of ordinals where the counting residual looks wrong.
struct CompletenessFlag {
  enum class Kind { Bound, Step };
  Kind kind = Kind::Bound;
  int first_ordinal = 0;
  int last_ordinal = 0;
  int peak_ordinal = 0;  // where `value` was attained
  double value = 0;  // worst residual (Bound) or worst step (Step) in the stretch
  std::string message;
};

struct VerifyOptions {
  double bound = 3.0;          // |r_n| above this is flagged
  int window = 8;              // zeros averaged on each side of a step
  double step_missing = 0.5;   // mean(r after) - mean(r before) above this: zero missing
  double step_spurious = -0.6; // below this: extra (duplicated) zero
};

struct CompletenessReport {
  std::vector<double> residuals;  // r_n for n = 1..size
  double min_residual = 0;
  double max_residual = 0;
  int max_swap = 0;  // max |rank by gamma - ordinal|
  std::vector<CompletenessFlag> flags;

  bool ok() const { return flags.empty(); }
};

namespace detail {

inline void mergeFlags(std::vector<CompletenessFlag>& flags, CompletenessFlag f) {
  if (!flags.empty()) {
    auto& last = flags.back();
    if (last.kind == f.kind && f.first_ordinal <= last.last_ordinal + 1 && (last.value > 0) == (f.value > 0)) {
      last.last_ordinal = std::max(last.last_ordinal, f.last_ordinal);
      if (std::abs(f.value) > std::abs(last.value)) {
        last.value = f.value;
        last.peak_ordinal = f.peak_ordinal;
        last.message = f.message;
      }
      return;
    }
  }
  flags.push_back(std::move(f));
}

}  // namespace detail

/// Checks a zero set against the smooth counting law.
///
/// For each n, r_n = predictedN(gamma_n) - n. Two kinds of flag are raised:
///   - Bound: |r_n| > opt.bound.
///   - Step: the mean of r over the `window` zeros starting at n minus the
///     mean over the `window` zeros before n leaves
///     [step_spurious, step_missing]. A lost zero shifts every later r_n up
///     by one, a duplicated zero shifts them down by one; the residual noise
///     itself is far smaller than that over a window, so this catches single
///     defects long before |r_n| drifts past the bound.
/// Defects within `window` zeros of either end of the set are not
/// detectable by the step test.
inline CompletenessReport verifyCompleteness(const ZeroSet& zs, const VerifyOptions& opt = {}) {
  CompletenessReport rep;
  const std::size_t n = zs.size();
  if (n == 0) return rep;
  rep.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    rep.residuals[i] = stats::countingResidual(zs.zeros[i].g(), static_cast<long>(i + 1));
  rep.min_residual = *std::min_element(rep.residuals.begin(), rep.residuals.end());
  rep.max_residual = *std::max_element(rep.residuals.begin(), rep.residuals.end());

  std::vector<std::size_t> by_gamma(n);
  std::iota(by_gamma.begin(), by_gamma.end(), 0);
  std::stable_sort(by_gamma.begin(), by_gamma.end(),
                   [&](std::size_t a, std::size_t b) { return zs.zeros[a].g() < zs.zeros[b].g(); });
  for (std::size_t rank = 0; rank < n; ++rank)
    rep.max_swap = std::max(rep.max_swap, std::abs(static_cast<int>(rank) - static_cast<int>(by_gamma[rank])));

  for (std::size_t i = 0; i < n; ++i) {
    const double r = rep.residuals[i];
    if (std::abs(r) > opt.bound) {
      const int ord = static_cast<int>(i + 1);
      detail::mergeFlags(rep.flags, {CompletenessFlag::Kind::Bound, ord, ord, ord, r,
                                     "counting residual " + std::to_string(r) + " outside +-" +
                                         std::to_string(opt.bound)});
    }
  }

  const std::size_t L = static_cast<std::size_t>(std::max(1, opt.window));
  if (n >= 2 * L) {
    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + rep.residuals[i];
    for (std::size_t i = L; i + L <= n; ++i) {
      const double before = (prefix[i] - prefix[i - L]) / static_cast<double>(L);
      const double after = (prefix[i + L] - prefix[i]) / static_cast<double>(L);
      const double step = after - before;
      const int ord = static_cast<int>(i + 1);
      if (step > opt.step_missing)
        detail::mergeFlags(rep.flags, {CompletenessFlag::Kind::Step, ord - 1, ord, ord, step,
                                       "residual step " + std::to_string(step) + ": zero missing near gamma " +
                                           std::to_string(zs.zeros[i].g())});
      else if (step < opt.step_spurious)
        detail::mergeFlags(rep.flags, {CompletenessFlag::Kind::Step, ord - 1, ord, ord, step,
                                       "residual step " + std::to_string(step) + ": spurious zero near gamma " +
                                           std::to_string(zs.zeros[i].g())});
    }
  }
  return rep;
}

}  // namespace rsaux::zeros

#endif  // RSAUX_ZEROS_VERIFY_HPP

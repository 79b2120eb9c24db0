#ifndef RSAUX_ZEROS_COMPUTE_HPP
#define RSAUX_ZEROS_COMPUTE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsaux/numerics/parallel.hpp"
#include "rsaux/numerics/precision.hpp"
#include "rsaux/zeros/newton.hpp"
#include "rsaux/zeros/seeds.hpp"
#include "rsaux/zeros/tracking.hpp"
#include "rsaux/zeros/types.hpp"

namespace rsaux::zeros {

/// Raised when some seeds could not be resolved to a zero. Carries one
/// message per failing seed.
struct computation_error : std::runtime_error {
  std::vector<std::string> failures;
  explicit computation_error(std::vector<std::string> f)
      : std::runtime_error("computeZeros: " + std::to_string(f.size()) + " seed(s) failed: " + f.front()),
        failures(std::move(f)) {}
};

struct ComputeOptions {
  double sigma_scan = kDefaultSeedLine;
  unsigned threads = 0;  // 0: hardware concurrency
  int guard_digits = 30;
  double margin = 40;    // initial scan reach above t_max
  TrackOptions track;
  std::function<void(const std::string&)> progress;
};

namespace detail {

struct SeedOutcome {
  std::optional<Zero> zero;
  std::string error;
};

// Track every seed (in parallel, double precision) and refine each handoff
// point (sequentially, multiprecision: MPFR precision is process global).
inline std::vector<SeedOutcome> resolveSeeds(const std::vector<Seed>& seeds, int digits, const PrecisionContext& ctx,
                                             const ComputeOptions& opt, const TrackOptions& track) {
  std::vector<std::optional<TrackResult>> handoffs(seeds.size());
  std::vector<SeedOutcome> out(seeds.size());
  parallel_for(seeds.size(), opt.threads, [&](std::size_t i) {
    try {
      handoffs[i] = trackCurve(seeds[i], track);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  });
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (!handoffs[i]) continue;
    try {
      Zero z = refineNewton(handoffs[i]->handoff, digits, ctx);
      z.seed_t = seeds[i].t;
      out[i].zero = std::move(z);
    } catch (const std::exception& e) {
      out[i].error = "seed " + std::to_string(seeds[i].ordinal) + " (t=" + std::to_string(seeds[i].t) + "): " + e.what();
    }
  }
  return out;
}

// Groups of indices whose zeros coincide to within `radius`.
inline std::vector<std::vector<std::size_t>> collisions(const std::vector<SeedOutcome>& res, double radius) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < res.size(); ++i)
    if (res[i].zero) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return res[a].zero->g() < res[b].zero->g(); });
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    std::vector<std::size_t> group{idx[k]};
    for (std::size_t j = k + 1; j < idx.size(); ++j) {
      const Zero& a = *res[idx[k]].zero;
      const Zero& b = *res[idx[j]].zero;
      if (b.g() - a.g() > radius) break;
      if (std::hypot(b.b() - a.b(), b.g() - a.g()) < radius) group.push_back(idx[j]);
    }
    if (group.size() > 1) {
      groups.push_back(group);
      k += group.size() - 1;
    }
  }
  return groups;
}

}  // namespace detail

/// All zeros of R with 0 < gamma <= t_max, numbered by their seeds on the
/// line sigma = sigma_scan, refined to `digits` decimals.
///
/// Seeds are scanned beyond t_max until the five highest seeds all lead to
/// zeros above the horizon. Colliding zeros (two seeds giving the same zero)
/// are re-tracked with tighter settings. The set keeps every ordinal up to
/// the largest one whose zero lies below t_max; zeros above the horizon
/// inside that range are flagged `outside_horizon`.
inline ZeroSet computeZeros(double t_max, int digits, const ComputeOptions& opt = {}) {
  if (!(t_max > 0)) throw std::invalid_argument("computeZeros: t_max must be positive");
  const PrecisionContext ctx(digits, opt.guard_digits);
  auto say = [&](const std::string& msg) {
    if (opt.progress) opt.progress(msg);
  };
  TrackOptions track = opt.track;
  track.sigma_start = opt.sigma_scan;
  ScanOptions scan_opt;
  scan_opt.sigma = opt.sigma_scan;

  ZeroSet zs;
  zs.t_max = t_max;
  zs.sigma_scan = opt.sigma_scan;

  std::vector<Seed> seeds;
  std::vector<detail::SeedOutcome> results;
  double reach = t_max + opt.margin;
  double scanned = 0.01;
  while (true) {
    auto scan = scanSeeds(scanned, reach, scan_opt);
    for (auto& s : scan.seeds) {
      if (!seeds.empty() && s.t <= seeds.back().t + 1e-9) continue;
      s.ordinal = static_cast<int>(seeds.size() + 1);
      seeds.push_back(s);
    }
    say("seeds scanned to t=" + std::to_string(reach) + ": " + std::to_string(seeds.size()));
    const std::vector<Seed> pending(seeds.begin() + static_cast<long>(results.size()), seeds.end());
    auto fresh = detail::resolveSeeds(pending, digits, ctx, opt, track);
    results.insert(results.end(), fresh.begin(), fresh.end());
    say("zeros resolved: " + std::to_string(results.size()));

    bool done = results.size() >= 5;
    for (std::size_t k = 0; done && k < 5; ++k) {
      const auto& r = results[results.size() - 1 - k];
      if (!r.zero || r.zero->g() <= t_max) done = false;
    }
    if (done) break;
    scanned = reach;
    reach += opt.margin;
    scan_opt.exclude_trivial = seeds.empty();
  }

  // Collision protocol.
  const double radius = std::pow(10.0, -digits / 2.0);
  TrackOptions tight = track;
  for (int round = 0; round < 3; ++round) {
    const auto groups = detail::collisions(results, radius);
    if (groups.empty()) break;
    tight = tight.tightened();
    for (const auto& g : groups) {
      std::vector<Seed> again;
      for (std::size_t i : g) again.push_back(seeds[i]);
      say("re-tracking " + std::to_string(again.size()) + " seeds near gamma=" +
          std::to_string(results[g.front()].zero->g()));
      auto redo = detail::resolveSeeds(again, digits, ctx, opt, tight);
      for (std::size_t k = 0; k < g.size(); ++k) results[g[k]] = redo[k];
    }
    if (round == 2 && !detail::collisions(results, radius).empty())
      throw computation_error({"colliding zeros persist after re-tracking"});
  }

  std::vector<std::string> failures;
  int last_inside = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].zero) {
      failures.push_back(results[i].error);
      continue;
    }
    if (results[i].zero->g() <= 0) failures.push_back("seed " + std::to_string(i + 1) + " reached a zero with gamma <= 0");
    if (results[i].zero->g() <= t_max) last_inside = static_cast<int>(i + 1);
  }
  if (!failures.empty()) throw computation_error(failures);

  for (int i = 0; i < last_inside; ++i) {
    Zero z = *results[static_cast<std::size_t>(i)].zero;
    z.ordinal = i + 1;
    z.outside_horizon = z.g() > t_max;
    zs.zeros.push_back(std::move(z));
  }
  return zs;
}

}  // namespace rsaux::zeros

#endif  // RSAUX_ZEROS_COMPUTE_HPP

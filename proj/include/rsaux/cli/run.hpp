#ifndef RSAUX_CLI_RUN_HPP
#define RSAUX_CLI_RUN_HPP

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsaux/cli/series.hpp"
#include "rsaux/numerics.hpp"
#include "rsaux/rfunc.hpp"
#include "rsaux/stats.hpp"
#include "rsaux/store.hpp"
#include "rsaux/zeros.hpp"

namespace rsaux::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFlags = 1;
inline constexpr int kExitError = 2;

/// Environment variable that overrides the default number of digits.
inline constexpr const char* kDigitsEnv = "RSAUX_DIGITS";
inline constexpr int kMinDigits = 15;
inline constexpr int kMaxDigits = 50;

struct RunConfig {
  std::string command;
  std::string stats_kind;
  std::vector<double> s;  // sigma, t
  double t_max = 0;
  int digits = 25;
  double sigma_cut = 1.0;
  int bins = 26;
  std::vector<double> region;  // sigma1 sigma2 t1 t2
  int resolution = 0;
  bool weighted = false;
  bool allow_uncertified = false;
  std::string in;
  std::string out;
  unsigned threads = 0;
  double seed_line = zeros::kDefaultSeedLine;
};

/// Default digits: 25 unless overridden by RSAUX_DIGITS.
inline int defaultDigits() {
  const char* env = std::getenv(kDigitsEnv);
  if (!env || !*env) return 25;
  std::size_t used = 0;
  int d = 0;
  try {
    d = std::stoi(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(env).size() || d < kMinDigits || d > kMaxDigits)
    throw std::invalid_argument(std::string(kDigitsEnv) + " must be an integer in [15, 50], got '" + env + "'");
  return d;
}

namespace detail {

inline std::string fmt(const mp_real& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::scientific << x;
  return os.str();
}

inline std::string fmt(const ComplexMP& z, int digits) {
  return fmt(z.re, digits) + (z.im < 0 ? " - " : " + ") + fmt(abs(z.im), digits) + " i";
}

inline int runEval(const RunConfig& cfg, std::ostream& out) {
  const PrecisionContext ctx(cfg.digits);
  const ComplexPoint s(cfg.s.at(0), cfg.s.at(1));
  const auto r = rfunc::evalR(s, ctx);
  const auto rp = rfunc::evalRprime(s, ctx);
  out << "s          = " << cfg.s[0] << " + " << cfg.s[1] << " i\n";
  out << "main terms = " << r.main_terms << "\n";
  out << "R(s)       = " << fmt(r.value, cfg.digits) << "\n";
  out << "R'(s)      = " << fmt(rp, cfg.digits) << "\n";
  try {
    out << "identity residual = " << fmt(rfunc::identityResidual(s, ctx), 3) << "\n";
  } catch (const pole_error& e) {
    out << "identity residual = undefined (" << e.what() << ")\n";
  }
  return kExitOk;
}

inline int runZeros(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  zeros::ComputeOptions opt;
  opt.threads = cfg.threads;
  opt.sigma_scan = cfg.seed_line;
  opt.progress = [&](const std::string& msg) { err << msg << "\n"; };
  const ZeroSet zs = zeros::computeZeros(cfg.t_max, cfg.digits, opt);
  store::WriteOptions wopt;
  wopt.allow_uncertified = cfg.allow_uncertified;
  store::writeZeros(zs, cfg.out, wopt);
  long outside = 0;
  for (const auto& z : zs.zeros) outside += z.outside_horizon;
  out << "wrote " << zs.size() << " zeros to " << cfg.out;
  if (outside) out << " (" << outside << " above t_max, kept for ordinal continuity)";
  out << "\n";
  return kExitOk;
}

inline int runVerify(const RunConfig& cfg, std::ostream& out) {
  const ZeroSet zs = store::readZeros(cfg.in);
  if (zs.empty()) throw std::invalid_argument("verify: no zeros in " + cfg.in);
  const auto rep = zeros::verifyCompleteness(zs);
  out << "zeros: " << zs.size() << "\n";
  out << "counting residual range: [" << rep.min_residual << ", " << rep.max_residual << "]\n";
  out << "max ordinal/height swap: " << rep.max_swap << "\n";
  if (rep.ok()) {
    out << "no flags\n";
    return kExitOk;
  }
  for (const auto& f : rep.flags)
    out << "FLAG ordinals " << f.first_ordinal << ".." << f.last_ordinal << " (worst at " << f.peak_ordinal
        << "): " << f.message << "\n";
  return kExitFlags;
}

inline int runStats(const RunConfig& cfg, std::ostream& out) {
  const ZeroSet zs = store::readZeros(cfg.in);
  const std::string& k = cfg.stats_kind;
  store::Series series;
  if (k == "nt") {
    series = countingSeries(zs);
  } else if (k == "fit") {
    const auto f = stats::fitABC(zs, cfg.sigma_cut);
    out << std::setprecision(12) << "sigma=" << cfg.sigma_cut << " A=" << f.A << " B=" << f.B << " C=" << f.C
        << " m=" << f.m << " n=" << f.n << " mu=" << f.mu << "\n";
    series = fitSeries(f, cfg.sigma_cut);
  } else if (k == "records") {
    const auto recs = stats::records(zs);
    series = recordsSeries(recs);
    for (const auto& r : recs)
      if (!r.nearest_integer)
        out << "warning: record " << r.k << " (zero " << r.n_k << "): k+1 is not the integer nearest sqrt(gamma/2pi)\n";
  } else if (k == "hsum") {
    series = hSeries(zs);
  } else if (k == "hist") {
    series = histogramSeries(stats::histogram(zs, cfg.bins));
  } else if (k == "density") {
    const auto d = stats::densityEvolution(zs);
    if (!d.empty())
      out << "delta = " << d.back().below << "/" << d.back().total << " = " << std::setprecision(6) << std::fixed
          << d.back().delta << "\n";
    series = densitySeries(d);
  } else if (k == "annuli") {
    const auto rows = stats::annulusTable(zs);
    for (const auto& r : rows)
      out << "n=" << r.n << " " << r.c_right << " " << r.c_left << " " << r.c_mid << " " << r.c_neg << "\n";
    series = annulusSeries(rows);
  }
  store::emitSeries(series, cfg.out);
  return kExitOk;
}

inline int runXray(const RunConfig& cfg, std::ostream& out) {
  const store::Region region{cfg.region.at(0), cfg.region.at(1), cfg.region.at(2), cfg.region.at(3)};
  const auto grid = store::xrayGrid(region, cfg.resolution, cfg.weighted, cfg.threads);
  store::emitSeries(store::xraySeries(grid), cfg.out);
  out << "wrote " << cfg.resolution << "x" << cfg.resolution << " grid to " << cfg.out << "\n";
  return kExitOk;
}

}  // namespace detail

/// Entry point of the command-line tool. Returns 0 on success, 1 when
/// verification raised flags and 2 on usage or runtime errors.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Zeros and statistics of Riemann's auxiliary function R(s)", "rsaux"};
  app.require_subcommand(1);

  try {
    cfg.digits = defaultDigits();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  const auto digitsRange = CLI::Range(kMinDigits, kMaxDigits);

  auto* eval = app.add_subcommand("eval", "Evaluate R(s), R'(s) and the zeta identity residual");
  eval->add_option("--s", cfg.s, "sigma t")->expected(2)->required()->allow_extra_args(false);
  eval->add_option("--digits", cfg.digits, "decimal digits")->check(digitsRange);

  auto* zs = app.add_subcommand("zeros", "Compute all zeros with 0 < gamma <= tmax");
  zs->add_option("--tmax", cfg.t_max, "height horizon")->required()->check(CLI::PositiveNumber);
  zs->add_option("--digits", cfg.digits, "decimal digits")->check(digitsRange);
  zs->add_option("--out", cfg.out, "zeros file to write")->required();
  zs->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
  zs->add_option("--seed-line", cfg.seed_line, "abscissa of the seed line");
  zs->add_flag("--allow-uncertified", cfg.allow_uncertified,
               "write zeros with fewer than 25 digits, zero padded");

  auto* verify = app.add_subcommand("verify", "Check a zeros file for missing or spurious zeros");
  verify->add_option("--in", cfg.in, "zeros file")->required()->check(CLI::ExistingFile);

  auto* st = app.add_subcommand("stats", "Statistics of a zeros file as CSV");
  st->add_option("kind", cfg.stats_kind, "nt|fit|records|hsum|hist|density|annuli")
      ->required()
      ->check(CLI::IsMember({"nt", "fit", "records", "hsum", "hist", "density", "annuli"}));
  st->add_option("--in", cfg.in, "zeros file")->required()->check(CLI::ExistingFile);
  st->add_option("--sigma", cfg.sigma_cut, "fit uses zeros with beta < sigma");
  st->add_option("--bins", cfg.bins, "histogram bins per unit of beta")->check(CLI::PositiveNumber);
  st->add_option("--out", cfg.out, "CSV file to write")->required();

  auto* xr = app.add_subcommand("xray", "Sign grid of Re and Im of R (or the weighted function)");
  xr->add_option("--region", cfg.region, "sigma1 sigma2 t1 t2")->expected(4)->required()->allow_extra_args(false);
  xr->add_option("--res", cfg.resolution, "points per axis")->required()->check(CLI::Range(2, 100000));
  xr->add_flag("--weighted", cfg.weighted, "use pi^{-s/2} Gamma(s/2) R(s)");
  xr->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
  xr->add_option("--out", cfg.out, "CSV file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*eval) return detail::runEval(cfg, out);
    if (*zs) return detail::runZeros(cfg, out, err);
    if (*verify) return detail::runVerify(cfg, out);
    if (*st) return detail::runStats(cfg, out);
    if (*xr) return detail::runXray(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace rsaux::cli

#endif  // RSAUX_CLI_RUN_HPP

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// The desk set (all zeros up to 2 pi * 100, 25 digits) is computed once and
// shared by criteria 4 to 7 and 9 to 11.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "rsaux/cli/series.hpp"
#include "rsaux/rsaux.hpp"

namespace {

using namespace rsaux;

constexpr int kDigits = 25;
const double kDeskHorizon = 2 * M_PI * 100;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& check) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  " << title << ": " << o.detail << "  ["
            << std::fixed << std::setprecision(1) << secs << " s]" << std::endl;
  std::cout.unsetf(std::ios::floatfield);
}

std::string sci(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

const ZeroSet& deskSet() {
  static const ZeroSet zs = [] {
    zeros::ComputeOptions opt;
    opt.progress = [](const std::string& msg) { std::cerr << "  " << msg << "\n"; };
    return zeros::computeZeros(kDeskHorizon, kDigits, opt);
  }();
  return zs;
}

// Appendix census for the first ten height bands: beta in [1/2, 1), beta < 1/2,
// beta in [0, 1/2), beta < 0.
const long kAnnuli[10][4] = {{0, 0, 0, 0},  {0, 1, 0, 1},  {0, 4, 2, 2},   {2, 6, 3, 3},   {4, 9, 4, 5},
                             {7, 12, 5, 7}, {8, 16, 8, 8}, {5, 23, 15, 8}, {11, 25, 16, 9}, {14, 29, 18, 11}};

// Catalan's constant G = sum_{k>=0} (-1)^k / (2k+1)^2, accelerated by
// repeatedly averaging neighbouring partial sums.
double catalanOracle() {
  const int N = 64;
  std::vector<long double> partial(N);
  long double s = 0;
  for (int k = 0; k < N; ++k) {
    s += (k % 2 ? -1.0L : 1.0L) / ((2.0L * k + 1) * (2.0L * k + 1));
    partial[k] = s;
  }
  for (int len = N; len > 1; --len)
    for (int k = 0; k + 1 < len; ++k) partial[k] = (partial[k] + partial[k + 1]) / 2;
  return static_cast<double>(partial[0]);
}

// Record ordinals below 2 pi * 100.
const std::vector<int> kRecordOrdinals = {1, 5, 13, 26, 45, 69, 99, 135};

// Published fit table: sigma, A, B, C, m, n, mu as printed.
struct PrintedFit {
  double sigma;
  const char* A;
  const char* B;
  const char* C;
  const char* m;
  long n;
  const char* mu;
};
const PrintedFit kPublishedFits[] = {
    {1.0, "1.00000001605", "-0.500005726", "1.43690417259", "34963.92", 162215, "0.2155"},
    {0.5, "0.99999998564", "-0.499934194", "1.44317835999", "22777.01", 103674, "0.2196"},
    {0.0, "0.99999950736", "-0.499053472", "1.52818665442", "4462.05", 22983, "0.1941"},
    {-1.0, "0.99999956381", "-0.499312171", "1.60544788526", "1421.67", 8565, "0.1659"},
};

// True when `x` rounded to as many decimals as `printed` shows equals it.
bool matchesPrinted(double x, const std::string& printed) {
  const auto dot = printed.find('.');
  const int places = dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
  std::ostringstream os;
  os << std::fixed << std::setprecision(places) << x;
  return os.str() == printed;
}

double variance(const std::vector<double>& v) {
  double mean = 0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double var = 0;
  for (double x : v) var += (x - mean) * (x - mean);
  return var / static_cast<double>(v.size());
}

Outcome trivialZeros() {
  const PrecisionContext ctx(kDigits);
  double worst = 0;
  for (int n : {2, 4, 6}) {
    const auto r = rfunc::evalR(ComplexPoint(-n, 0), ctx);
    worst = std::max(worst, static_cast<double>(abs(r.value)));
  }
  return {worst < 1e-20, "max |R(-2n)|, n=1..3 = " + sci(worst)};
}

Outcome identitySuite() {
  const PrecisionContext ctx(kDigits);
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> sig(-3, 3), tee(0, 500);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const ComplexPoint s(sig(rng), tee(rng));
    worst = std::max(worst, static_cast<double>(rfunc::identityResidual(s, ctx)));
  }
  return {worst < 1e-20, "max residual over 100 random points = " + sci(worst)};
}

Outcome firstSeed() {
  const auto scan = zeros::scanSeeds(0.01, 100);
  if (scan.seeds.empty()) return {false, "no seed below t = 100"};
  const double t1 = scan.seeds.front().t;
  // Confirm in multiprecision with extra guard digits: R(-100 + i t1) is
  // (nearly) purely imaginary with negative imaginary part.
  const PrecisionContext ctx = PrecisionContext(kDigits).with_extra_guard(20);
  const auto r = rfunc::evalR(ComplexPoint(zeros::kDefaultSeedLine, t1), ctx).value;
  const double ratio = static_cast<double>(abs(r.re) / abs(r));
  const bool ok = std::abs(t1 - 60.969) < 0.01 && r.im < 0 && ratio < 1e-5;
  std::ostringstream os;
  os << "t1 = " << std::setprecision(10) << t1 << ", |Re R|/|R| = " << sci(ratio)
     << ", Im R " << (r.im < 0 ? "< 0" : ">= 0");
  return {ok, os.str()};
}

Outcome census() {
  const auto& zs = deskSet();
  long inside = 0;
  for (const auto& z : zs.zeros) inside += !z.outside_horizon;
  const auto rows = stats::annulusTable(zs);
  bool ok = inside == 176 && rows.size() >= 10;
  std::string bad;
  for (int n = 0; n < 10 && n < static_cast<int>(rows.size()); ++n) {
    const auto& r = rows[n];
    const long got[4] = {r.c_right, r.c_left, r.c_mid, r.c_neg};
    for (int j = 0; j < 4; ++j)
      if (got[j] != kAnnuli[n][j]) {
        ok = false;
        bad += " row " + std::to_string(n + 1);
        break;
      }
  }
  return {ok, std::to_string(inside) + " zeros, " + std::to_string(rows.size()) + " bands" +
                  (bad.empty() ? ", rows 1..10 match" : ", mismatch in" + bad)};
}

Outcome countingResidual() {
  const auto& zs = deskSet();
  double lo = INFINITY, hi = -INFINITY;
  long n = 0;
  for (const auto& z : zs.zeros) {
    if (z.outside_horizon) continue;
    const double r = stats::predictedN(z.g()) - z.ordinal;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    ++n;
  }
  std::ostringstream os;
  os << n << " residuals in [" << std::setprecision(6) << lo << ", " << hi << "]";
  return {n > 0 && lo > -2.6 && hi < 2.6, os.str()};
}

Outcome recordZeros() {
  const auto recs = stats::records(deskSet());
  std::vector<int> ords;
  bool nearest = true;
  for (const auto& r : recs) {
    ords.push_back(r.n_k);
    nearest = nearest && r.nearest_integer;
  }
  std::string list;
  for (int o : ords) list += (list.empty() ? "" : ",") + std::to_string(o);
  return {ords == kRecordOrdinals && nearest,
          "ordinals " + list + (nearest ? ", all nearest-integer" : ", nearest-integer rule broken")};
}

Outcome fitSanity() {
  const auto f = stats::fitABC(deskSet(), 1.0);
  const bool desk = std::abs(f.A - 1) < 0.05 && std::abs(f.B + 0.5) < 0.3 && f.C > 0 && f.C < 3 && f.mu < 0.5;

  // Exact-model heights: gamma_n solves model(gamma) = n for (A, B, C) = (1, -1/2, 3/2).
  auto model = [](long double T) {
    const long double x = T / (2 * M_PIl);
    return T / (4 * M_PIl) * std::log(x) - T / (4 * M_PIl) - 0.5L * std::sqrt(x) + 1.5L;
  };
  std::vector<stats::FitSample> samples;
  for (long n = 1; n <= 300; ++n) {
    long double lo = 2 * M_PIl * 1.0001L, hi = 1e7L;
    for (int i = 0; i < 200; ++i) {
      const long double mid = (lo + hi) / 2;
      (model(mid) < n ? lo : hi) = mid;
    }
    samples.push_back({static_cast<double>((lo + hi) / 2), n});
  }
  const auto g = stats::fitSamples(samples);
  const bool synthetic = std::abs(g.A - 1) < 1e-10 && std::abs(g.B + 0.5) < 1e-10 && std::abs(g.C - 1.5) < 1e-10;

  std::ostringstream os;
  os << std::setprecision(6) << "desk A=" << f.A << " B=" << f.B << " C=" << f.C << " mu=" << f.mu
     << "; synthetic error " << sci(std::max({std::abs(g.A - 1), std::abs(g.B + 0.5), std::abs(g.C - 1.5)}));
  return {desk && synthetic, os.str()};
}

Outcome pFunction() {
  const double tol = 1e-10;
  const double G = catalanOracle();
  double worst_special = std::max(std::abs(rfunc::Pfunc(0.0, tol)), std::abs(rfunc::Pfunc(0.5, tol)));
  const double catalan_err = std::abs(rfunc::Pfunc(0.25, tol) - 2 * G);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(-5, 5);
  std::uniform_int_distribution<int> shift(-20, 20);
  double worst_sym = 0;
  for (int i = 0; i < 100; ++i) {
    const double x = ux(rng);
    const double p = rfunc::Pfunc(x, tol);
    worst_sym = std::max(worst_sym, std::abs(rfunc::Pfunc(x + shift(rng), tol) - p));
    worst_sym = std::max(worst_sym, std::abs(rfunc::Pfunc(-x, tol) + p));
  }
  const bool ok = worst_special < tol && catalan_err < 1e-8 && worst_sym < 1e-8;
  return {ok, "|P(0)|,|P(1/2)| <= " + sci(worst_special) + ", |P(1/4) - 2G| = " + sci(catalan_err) +
                  ", periodicity/oddness error " + sci(worst_sym)};
}

Outcome hShape() {
  const auto series = cli::hSeries(deskSet());
  const double lo = 2 * M_PI * 25, hi = 2 * M_PI * 100;
  std::vector<double> with_p, without_p;
  for (const auto& row : series.rows)
    if (row[0] >= lo && row[0] <= hi) {
      with_p.push_back(row[2]);
      without_p.push_back(row[3]);
    }
  if (with_p.size() < 10) return {false, "too few samples in the window"};
  const double a = variance(with_p), b = variance(without_p);
  return {a < b, std::to_string(with_p.size()) + " samples, var with P = " + sci(a) + ", without P = " + sci(b)};
}

Outcome density() {
  const auto pts = stats::densityEvolution(deskSet());
  if (pts.empty()) return {false, "no zeros"};
  const auto& last = pts.back();
  bool ok = last.below == 125 && last.total == 176;
  std::string detail = "delta = " + std::to_string(last.below) + "/" + std::to_string(last.total);

  const char* published = std::getenv("RSAUX_PUBLISHED_ZEROS");
  if (!published || !*published) return {ok, detail + "; published zeros file not supplied, full-scale rows skipped"};

  const ZeroSet full = store::readZeros(published);
  const auto fp = stats::densityEvolution(full);
  bool full_ok = !fp.empty() && fp.back().below == 103674 && fp.back().total == 162215 &&
                 matchesPrinted(fp.back().delta, "0.639115") &&
                 matchesPrinted(1 - fp.back().delta, "0.360885");
  for (const auto& row : kPublishedFits) {
    const auto f = stats::fitABC(full, row.sigma);
    full_ok = full_ok && matchesPrinted(f.A, row.A) && matchesPrinted(f.B, row.B) && matchesPrinted(f.C, row.C) &&
              matchesPrinted(f.m, row.m) && f.n == row.n && matchesPrinted(f.mu, row.mu);
  }
  return {ok && full_ok, detail + "; published file: " + (full_ok ? "fit rows and densities match" : "mismatch")};
}

Outcome roundTrip() {
  const auto& zs = deskSet();
  const auto dir = std::filesystem::temp_directory_path() / ("rsaux_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto path = dir / "desk.zeros";
  store::writeZeros(zs, path);
  std::ifstream in(path, std::ios::binary);
  const std::string on_disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const ZeroSet back = store::readZeros(path);
  const auto second = dir / "again.zeros";
  store::writeZeros(back, second);
  std::ifstream in2(second, std::ios::binary);
  const std::string again((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
  std::filesystem::remove_all(dir);
  const bool ok = !on_disk.empty() && on_disk == again && back.size() == zs.size();
  return {ok, std::to_string(back.size()) + " zeros, " + std::to_string(on_disk.size()) + " bytes, " +
                  (on_disk == again ? "identical" : "different")};
}

}  // namespace

int main() {
  report(1, "trivial zeros", trivialZeros);
  report(2, "identity suite", identitySuite);
  report(3, "first seed", firstSeed);
  report(4, "zero census to 2pi*100", census);
  report(5, "counting residual", countingResidual);
  report(6, "record zeros", recordZeros);
  report(7, "fit sanity", fitSanity);
  report(8, "P function", pFunction);
  report(9, "h residual shape", hShape);
  report(10, "density", density);
  report(11, "file round trip", roundTrip);
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failures ? 1 : 0;
}

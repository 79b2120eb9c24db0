#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "rsaux/rfunc.hpp"
#include "rsaux/stats/distribution.hpp"
#include "rsaux/zeros.hpp"

using namespace rsaux;

namespace {

// Zeros up to 2 pi 5^2 at 15 digits, computed once for the whole binary.
const ZeroSet& deskSet() {
  static const ZeroSet zs = zeros::computeZeros(2 * M_PI * 25, 15);
  return zs;
}

ZeroSet withoutOrdinal(const ZeroSet& zs, int ordinal) {
  ZeroSet out = zs;
  out.zeros.erase(out.zeros.begin() + (ordinal - 1));
  for (std::size_t i = 0; i < out.zeros.size(); ++i) out.zeros[i].ordinal = static_cast<int>(i + 1);
  return out;
}

ZeroSet withDuplicate(const ZeroSet& zs, int ordinal) {
  ZeroSet out = zs;
  out.zeros.insert(out.zeros.begin() + ordinal, out.zeros[static_cast<std::size_t>(ordinal - 1)]);
  for (std::size_t i = 0; i < out.zeros.size(); ++i) out.zeros[i].ordinal = static_cast<int>(i + 1);
  return out;
}

}  // namespace

TEST(Decimal, TruncatesTowardZero) {
  ScopedPrecision guard(40);
  EXPECT_EQ(Decimal::truncate(mp_real("1.23456789"), 4).text(), "1.2345");
  EXPECT_EQ(Decimal::truncate(mp_real("-1.23456789"), 4).text(), "-1.2345");
  EXPECT_EQ(Decimal::truncate(mp_real("-0.00001"), 3).text(), "0.000");
  EXPECT_EQ(Decimal::truncate(mp_real("0.05"), 5).text(), "0.05000");
  EXPECT_EQ(Decimal("-2.5000").truncated_to(2).text(), "-2.50");
  EXPECT_EQ(Decimal("-0.0009").truncated_to(2).text(), "0.00");
}

TEST(Decimal, Validation) {
  EXPECT_TRUE(Decimal::valid("-12.5"));
  EXPECT_FALSE(Decimal::valid("12"));
  EXPECT_FALSE(Decimal::valid("1.2e3"));
  EXPECT_FALSE(Decimal::valid("+1.0"));
  EXPECT_FALSE(Decimal::valid(".5"));
  EXPECT_THROW(Decimal("abc"), std::invalid_argument);
}

TEST(ZeroSet, OrdinalsMustBeContiguous) {
  ZeroSet zs;
  zs.zeros.resize(3);
  zs.zeros[0].ordinal = 1;
  zs.zeros[1].ordinal = 2;
  zs.zeros[2].ordinal = 4;
  EXPECT_THROW(zs.check_ordinals(), std::logic_error);
  zs.zeros[2].ordinal = 3;
  EXPECT_NO_THROW(zs.check_ordinals());
}

TEST(Seeds, ScanStepFormula) {
  EXPECT_DOUBLE_EQ(zeros::scanStep(10), std::min(1.0, M_PI / std::log(10 / (2 * M_PI) + 2)));
  EXPECT_LT(zeros::scanStep(1e5), 0.5);
}

TEST(Seeds, FirstSeed) {
  const auto scan = zeros::scanSeeds(0.01, 100);
  ASSERT_FALSE(scan.seeds.empty());
  EXPECT_NEAR(scan.seeds.front().t, 60.969, 0.01);
  EXPECT_EQ(scan.seeds.front().ordinal, 1);
  // The dropped candidates below it all end on the real axis.
  EXPECT_FALSE(scan.trivial.empty());
  for (const auto& s : scan.trivial) EXPECT_LT(s.t, scan.seeds.front().t);
}

TEST(Seeds, SeedsSatisfyDefinition) {
  const auto scan = zeros::scanSeeds(60, 160);
  ASSERT_GT(scan.seeds.size(), 3u);
  for (std::size_t i = 0; i < scan.seeds.size(); ++i) {
    const auto r = rfunc::evaluateFast(ComplexD(-100, scan.seeds[i].t), true);
    EXPECT_LT(std::abs(r.value.re) / abs(r.derivative), 1e-6);
    EXPECT_LT(r.value.im, 0);
    if (i) EXPECT_GT(scan.seeds[i].t, scan.seeds[i - 1].t);
  }
}

TEST(Seeds, NoSignChangeGivesNothing) {
  ASSERT_FALSE(zeros::scanSeeds(0.01, 100).seeds.empty());
  zeros::ScanOptions opt;
  opt.exclude_trivial = false;
  const auto first = zeros::scanSeeds(0.01, 100, opt).seeds.front().t;
  EXPECT_TRUE(zeros::scanSeeds(0.001, first * 0.5, opt).seeds.empty() ||
              zeros::scanSeeds(0.001, first * 0.5, opt).seeds.front().t < first);
  // Between two consecutive candidates there is no further candidate.
  const auto all = zeros::scanSeeds(0.01, 100, opt).seeds;
  ASSERT_GE(all.size(), 2u);
  EXPECT_TRUE(zeros::scanSeeds(all[0].t + 1e-3, all[1].t - 1e-3, opt).seeds.empty());
}

TEST(Seeds, InvalidRange) { EXPECT_THROW(zeros::scanSeeds(5, 5), std::invalid_argument); }

TEST(Tracking, FirstSeedLandsNearFirstZero) {
  const auto seed = zeros::scanSeeds(50, 70).seeds.front();
  const auto hand = zeros::trackCurve(seed);
  const auto rho = zeros::refineNewton(hand.handoff, 15, PrecisionContext(15));
  EXPECT_LT(std::hypot(hand.handoff.sigma - rho.b(), hand.handoff.t - rho.g()), 0.5);
  EXPECT_NEAR(rho.b(), -1.5728670009776, 1e-12);
  EXPECT_NEAR(rho.g(), 22.4228923893298, 1e-12);
  const auto r = rfunc::evaluateFast(ComplexD(hand.handoff.sigma, hand.handoff.t), true);
  EXPECT_LT(std::abs(r.value.re) / abs(r.derivative), zeros::TrackOptions{}.corrector_tol * 10);
}

TEST(Tracking, TightenedOptionsAreStricter) {
  const zeros::TrackOptions a;
  const auto b = a.tightened();
  EXPECT_LT(b.max_step, a.max_step);
  EXPECT_LT(b.handoff, a.handoff);
  EXPECT_LT(b.corrector_tol, a.corrector_tol);
}

TEST(Newton, QuadraticConvergence) {
  const int digits = 25;
  const ComplexPoint start(-1.5728670009776 + 7e-4, 22.4228923893298 - 7e-4);
  const auto r = zeros::refineNewtonMP(start, digits, PrecisionContext(digits));
  EXPECT_LE(r.iterations, 1 + static_cast<int>(std::ceil(std::log2(digits / 3.0))));
}

TEST(Newton, TrivialZeroNeighbourhood) {
  const int digits = 20;
  const auto r = zeros::refineNewtonMP(ComplexPoint(-2, 0.01), digits, PrecisionContext(digits));
  ScopedPrecision guard(60);
  EXPECT_LT(abs(r.rho - ComplexMP(mp_real(-2))), mp_real("1e-20"));
}

TEST(Newton, BasinCheck) {
  EXPECT_THROW(zeros::refineNewtonMP(ComplexPoint(-50, 40), 15, PrecisionContext(15)), zeros::basin_error);
}

TEST(Newton, ZeroRecordCarriesExtraPlaces) {
  const auto z = zeros::refineNewton(ComplexPoint(-1.5729, 22.4229), 20, PrecisionContext(20));
  EXPECT_EQ(z.digits, 20);
  EXPECT_EQ(z.beta.places(), 20 + zeros::kExtraPlaces);
  EXPECT_EQ(z.gamma.text().substr(0, 16), "22.4228923893297");
}

TEST(Compute, EmptyBelowFirstZero) {
  const auto zs = zeros::computeZeros(5, 15);
  EXPECT_TRUE(zs.empty());
  EXPECT_DOUBLE_EQ(zs.t_max, 5);
}

TEST(Compute, DeskSetToSection5) {
  const auto& zs = deskSet();
  ASSERT_EQ(zs.size(), 26u);
  zs.check_ordinals();
  const auto rows = stats::annulusTable(zs);
  ASSERT_EQ(rows.size(), 5u);
  const long expect[5][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 4, 2, 2}, {2, 6, 3, 3}, {4, 9, 4, 5}};
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(rows[i].c_right, expect[i][0]) << "row " << i + 1;
    EXPECT_EQ(rows[i].c_left, expect[i][1]) << "row " << i + 1;
    EXPECT_EQ(rows[i].c_mid, expect[i][2]) << "row " << i + 1;
    EXPECT_EQ(rows[i].c_neg, expect[i][3]) << "row " << i + 1;
  }
}

TEST(Compute, ZeroInvariants) {
  const auto& zs = deskSet();
  for (const auto& z : zs.zeros) {
    EXPECT_GT(z.g(), 0);
    EXPECT_LT(z.b(), 1);
    EXPECT_GT(z.b(), -100);
    EXPECT_EQ(z.digits, 15);
  }
  // Certificate re-evaluated at higher precision on a few zeros.
  const PrecisionContext fine(30);
  for (std::size_t i : {std::size_t(0), std::size_t(12), zs.size() - 1}) {
    const auto& z = zs.zeros[i];
    ScopedPrecision guard(rfunc::contextFor(z.b(), z.g(), fine));
    const ComplexMP rho(z.beta.to_mp(), z.gamma.to_mp());
    const auto r = rfunc::evaluateMP(rho, 30, true);
    EXPECT_LT(abs(r.value) / abs(r.derivative), mp_real("1e-15")) << "zero " << z.ordinal;
  }
}

TEST(Compute, HandoffPointsDistinct) {
  const auto& zs = deskSet();
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      EXPECT_GT(std::hypot(zs.zeros[i].b() - zs.zeros[j].b(), zs.zeros[i].g() - zs.zeros[j].g()), 1e-3);
}

TEST(Compute, ThirdSectionHorizon) {
  // Rows 1-3 hold 0 + 1 + 4 zeros; two of the row-3 zeros have beta in
  // [0, 1/2), two have beta < 0, plus the row-2 zero with beta < 0.
  const auto zs = zeros::computeZeros(2 * M_PI * 9, 15);
  ASSERT_EQ(zs.size(), 5u);
  long mid = 0, neg = 0;
  for (const auto& z : zs.zeros) (z.b() < 0 ? neg : mid) += z.b() < 0.5;
  EXPECT_EQ(mid, 2);
  EXPECT_EQ(neg, 3);
}

TEST(Compute, Deterministic) {
  const auto a = zeros::computeZeros(2 * M_PI * 9, 15);
  zeros::ComputeOptions opt;
  opt.threads = 3;
  const auto b = zeros::computeZeros(2 * M_PI * 9, 15, opt);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.zeros[i].beta, b.zeros[i].beta);
    EXPECT_EQ(a.zeros[i].gamma, b.zeros[i].gamma);
  }
}

TEST(Compute, CollisionGrouping) {
  std::vector<zeros::detail::SeedOutcome> res(4);
  auto make = [](const char* b, const char* g) {
    Zero z;
    z.beta = Decimal(b);
    z.gamma = Decimal(g);
    return z;
  };
  res[0].zero = make("0.10000", "30.00000");
  res[1].zero = make("0.10000", "30.00000");
  res[2].zero = make("0.20000", "31.00000");
  res[3].error = "lost";
  const auto groups = zeros::detail::collisions(res, 1e-7);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].size(), 2u);
}

TEST(Verify, CleanSetHasNoFlags) {
  const auto rep = zeros::verifyCompleteness(deskSet());
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.residuals.size(), deskSet().size());
  EXPECT_GT(rep.min_residual, -2.6);
  EXPECT_LT(rep.max_residual, 2.6);
  EXPECT_LE(rep.max_swap, 2);
}

TEST(Verify, ResidualIsLinearInOrdinal) {
  const auto& zs = deskSet();
  const auto rep = zeros::verifyCompleteness(zs);
  const auto shifted = zeros::verifyCompleteness(withoutOrdinal(zs, 10));
  // After the gap every zero has ordinal one lower, so r grows by exactly 1.
  for (std::size_t i = 9; i < shifted.residuals.size(); ++i)
    EXPECT_DOUBLE_EQ(shifted.residuals[i], rep.residuals[i + 1] + 1);
}

TEST(Verify, DeletionIsFlagged) {
  const auto& zs = deskSet();
  for (int gone : {9, 13, 18}) {
    const auto rep = zeros::verifyCompleteness(withoutOrdinal(zs, gone));
    ASSERT_FALSE(rep.ok()) << "deleted " << gone;
    const auto& f = rep.flags.front();
    EXPECT_EQ(f.kind, zeros::CompletenessFlag::Kind::Step);
    EXPECT_GT(f.value, 0);
    EXPECT_LE(f.first_ordinal, gone);
    EXPECT_GE(f.last_ordinal + 1, gone);
    EXPECT_LE(std::abs(f.peak_ordinal - gone), 2) << "deleted " << gone;
  }
}

TEST(Verify, DuplicateIsFlagged) {
  const auto rep = zeros::verifyCompleteness(withDuplicate(deskSet(), 13));
  ASSERT_FALSE(rep.ok());
  EXPECT_LT(rep.flags.front().value, 0);
}

TEST(Verify, BoundFlag) {
  ZeroSet zs = deskSet();
  zs.zeros.resize(5);  // residuals stay small; now push one zero far up
  zs.zeros[4].gamma = Decimal("400.0");
  const auto rep = zeros::verifyCompleteness(zs);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.flags.back().kind, zeros::CompletenessFlag::Kind::Bound);
  EXPECT_EQ(rep.flags.back().first_ordinal, 5);
}

TEST(Verify, SwapDistance) {
  ZeroSet zs = deskSet();
  std::swap(zs.zeros[3].gamma, zs.zeros[5].gamma);
  EXPECT_EQ(zeros::verifyCompleteness(zs).max_swap, 2);
}

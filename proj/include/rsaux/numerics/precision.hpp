#ifndef RSAUX_NUMERICS_PRECISION_HPP
#define RSAUX_NUMERICS_PRECISION_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace rsaux {

/// Variable precision MPFR real. Expression templates are disabled so that
/// generic code can use `auto` and the same overload set as `double`.
using mp_real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;

struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Accuracy knobs shared by every numeric routine.
///
/// `target_digits` is the decimal accuracy promised on public results,
/// `guard_digits` the extra working digits carried internally.
struct PrecisionContext {
  int target_digits = 25;
  int guard_digits = 30;

  PrecisionContext() = default;
  PrecisionContext(int target, int guard = 30) : target_digits(target), guard_digits(guard) {
    validate();
  }

  void validate() const {
    if (target_digits < 1) throw std::invalid_argument("target_digits must be positive");
    if (guard_digits < 10) throw std::invalid_argument("guard_digits must be at least 10");
  }

  int working_digits() const { return target_digits + guard_digits; }

  unsigned working_bits() const {
    return static_cast<unsigned>(std::ceil(working_digits() * std::log2(10.0)));
  }

  /// 10^-target_digits in the requested real type. For `mp_real` the value is
  /// formed from the decimal literal so it is exact in decimal semantics.
  template <typename Real>
  Real tol() const {
    if constexpr (std::is_floating_point_v<Real>) {
      return std::pow(Real(10), -Real(target_digits));
    } else {
      return Real("1e-" + std::to_string(target_digits));
    }
  }

  /// Same context with guard digits raised by `extra` (rounded up).
  PrecisionContext with_extra_guard(double extra) const {
    PrecisionContext c = *this;
    if (extra > 0) c.guard_digits += static_cast<int>(std::ceil(extra));
    return c;
  }
};

/// Sets the MPFR default precision to the context's working digits for the
/// lifetime of the object. MPFR's default precision is process global in
/// this Boost release, so multiprecision work must stay on one thread.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(const PrecisionContext& ctx) : ScopedPrecision(ctx.working_digits()) {}
  explicit ScopedPrecision(int digits10) : saved_(mp_real::default_precision()) {
    mp_real::default_precision(static_cast<unsigned>(digits10));
  }
  ~ScopedPrecision() { mp_real::default_precision(saved_); }

  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

/// Number of trustworthy decimal digits a real type can deliver at the
/// current precision.
template <typename Real>
int effective_digits() {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::numeric_limits<Real>::digits10;
  } else {
    return static_cast<int>(mp_real::default_precision());
  }
}

template <typename Real>
Real pi_v() {
  if constexpr (std::is_floating_point_v<Real>) {
    return Real(3.141592653589793238462643383279502884L);
  } else {
    return boost::math::constants::pi<Real>();
  }
}

template <typename Real>
double to_double(const Real& x) {
  if constexpr (std::is_floating_point_v<Real>) {
    return static_cast<double>(x);
  } else {
    return x.template convert_to<double>();
  }
}

}  // namespace rsaux

#endif  // RSAUX_NUMERICS_PRECISION_HPP

#ifndef RSAUX_NUMERICS_COMPLEX_HPP
#define RSAUX_NUMERICS_COMPLEX_HPP

#include <cmath>
#include <stdexcept>

#include "rsaux/numerics/precision.hpp"

namespace rsaux {

/// Minimal complex number over an arbitrary real type.
///
/// `std::complex` is only specified for the builtin floating types, and the
/// MPC bindings are not available, so the handful of operations the library
/// needs are spelled out here once for `double` and `mp_real` alike.
template <typename Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  template <typename Other>
  static Complex from(const Complex<Other>& z) {
    return {Real(z.re), Real(z.im)};
  }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& k) {
    re *= k;
    im *= k;
    return *this;
  }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const Real& k) { return a *= k; }
  friend Complex operator*(const Real& k, Complex a) { return a *= k; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator/(const Complex& a, const Real& k) { return {a.re / k, a.im / k}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    using std::abs;
    // Smith's algorithm keeps intermediate magnitudes in range.
    if (abs(b.re) >= abs(b.im)) {
      Real r = b.im / b.re;
      Real d = b.re + b.im * r;
      return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
    }
    Real r = b.re / b.im;
    Real d = b.re * r + b.im;
    return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

using ComplexD = Complex<double>;
using ComplexMP = Complex<mp_real>;

template <typename Real>
Complex<Real> conj(const Complex<Real>& z) {
  return {z.re, -z.im};
}

template <typename Real>
Real abs(const Complex<Real>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}

template <typename Real>
Real norm(const Complex<Real>& z) {
  return z.re * z.re + z.im * z.im;
}

template <typename Real>
Real arg(const Complex<Real>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

template <typename Real>
Complex<Real> exp(const Complex<Real>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

/// Principal branch, cut along the negative real axis.
template <typename Real>
Complex<Real> log(const Complex<Real>& z) {
  using std::log;
  return {log(abs(z)), arg(z)};
}

/// Principal square root.
template <typename Real>
Complex<Real> sqrt(const Complex<Real>& z) {
  using std::abs;
  using std::sqrt;
  Real r = abs(z);
  if (r == 0) return {};
  Real a = sqrt((r + abs(z.re)) / 2);
  if (z.re >= 0) return {a, z.im / (2 * a)};
  return {abs(z.im) / (2 * a), z.im >= 0 ? a : Real(-a)};
}

/// Point s = sigma + i t of the complex plane, stored in double precision.
/// Inputs to the library are always exactly representable doubles; the
/// multiprecision routines lift them without rounding.
struct ComplexPoint {
  double sigma = 0;
  double t = 0;

  ComplexPoint() = default;
  ComplexPoint(double sigma_, double t_) : sigma(sigma_), t(t_) {
    if (!std::isfinite(sigma) || !std::isfinite(t))
      throw std::invalid_argument("ComplexPoint components must be finite");
  }

  template <typename Real>
  Complex<Real> as() const {
    return {Real(sigma), Real(t)};
  }
};

}  // namespace rsaux

#endif  // RSAUX_NUMERICS_COMPLEX_HPP

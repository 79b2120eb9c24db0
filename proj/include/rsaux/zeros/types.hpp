#ifndef RSAUX_ZEROS_TYPES_HPP
#define RSAUX_ZEROS_TYPES_HPP

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "rsaux/numerics/precision.hpp"

namespace rsaux {

/// Signed fixed-point decimal kept as text, e.g. "-0.1250000000".
/// The text is the value of record; conversions are derived from it.
class Decimal {
 public:
  Decimal() = default;
  explicit Decimal(std::string text) : text_(std::move(text)) {
    if (!valid(text_)) throw std::invalid_argument("malformed decimal: '" + text_ + "'");
  }

  /// `x` truncated toward zero to `places` fractional digits.
  static Decimal truncate(const mp_real& x, int places) {
    using boost::multiprecision::mpz_int;
    mp_real scaled = x * boost::multiprecision::pow(mp_real(10), places);
    scaled = boost::multiprecision::trunc(scaled);
    mpz_int digits = scaled.convert_to<mpz_int>();
    const bool negative = digits < 0;
    if (negative) digits = -digits;
    std::string body = digits.str();
    if (body.size() <= static_cast<std::size_t>(places)) body.insert(0, places + 1 - body.size(), '0');
    body.insert(body.size() - places, ".");
    return Decimal((negative ? "-" : "") + body);
  }

  /// Same value truncated toward zero to fewer fractional digits.
  Decimal truncated_to(int places) const {
    const auto dot = text_.find('.');
    const int have = static_cast<int>(text_.size() - dot - 1);
    if (places >= have) return *this;
    std::string t = text_.substr(0, dot + 1 + places);
    // "-0.000" would otherwise keep a sign on zero.
    if (t[0] == '-' && t.find_first_not_of("-0.") == std::string::npos) t.erase(0, 1);
    return Decimal(t);
  }

  const std::string& text() const { return text_; }
  int places() const { return static_cast<int>(text_.size() - text_.find('.') - 1); }
  double value() const { return std::stod(text_); }
  mp_real to_mp() const { return mp_real(text_); }

  static bool valid(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    const std::size_t int_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == int_start || i >= s.size() || s[i] != '.') return false;
    const std::size_t frac_start = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i == s.size() && i > frac_start;
  }

  friend bool operator==(const Decimal& a, const Decimal& b) { return a.text_ == b.text_; }

 private:
  std::string text_ = "0.0";
};

/// Height on the seed line where R is purely imaginary with negative
/// imaginary part. Seeds are numbered by increasing height.
struct Seed {
  int ordinal = 0;
  double t = 0;
};

/// A zero rho_n = beta_n + i gamma_n of R, numbered by its seed.
struct Zero {
  int ordinal = 0;
  Decimal beta;
  Decimal gamma;
  int digits = 0;           // number of correct fractional digits in beta and gamma
  double seed_t = 0;        // 0 when unknown (zeros read from a file)
  bool outside_horizon = false;

  double b() const { return beta.value(); }
  double g() const { return gamma.value(); }
};

/// Zeros ordered by ordinal, complete below `t_max`.
struct ZeroSet {
  std::vector<Zero> zeros;
  double t_max = 0;
  double sigma_scan = -100;

  std::size_t size() const { return zeros.size(); }
  bool empty() const { return zeros.empty(); }

  /// Throws unless ordinals are exactly 1..size().
  void check_ordinals() const {
    for (std::size_t i = 0; i < zeros.size(); ++i)
      if (zeros[i].ordinal != static_cast<int>(i + 1))
        throw std::logic_error("zero set ordinals are not contiguous at position " + std::to_string(i + 1));
  }
};

}  // namespace rsaux

#endif  // RSAUX_ZEROS_TYPES_HPP

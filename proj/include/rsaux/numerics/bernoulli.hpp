#ifndef RSAUX_NUMERICS_BERNOULLI_HPP
#define RSAUX_NUMERICS_BERNOULLI_HPP

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "rsaux/numerics/precision.hpp"

namespace rsaux::numerics {

namespace detail {

// Exact B_0, B_2, B_4, ... by the Akiyama-Tanigawa transform. Held as
// rationals so every working precision gets correctly rounded values.
inline boost::multiprecision::mpq_rational bernoulli_rational(std::size_t k) {
  using boost::multiprecision::mpq_rational;
  static std::mutex mutex;
  static std::vector<mpq_rational> even;
  std::lock_guard lock(mutex);
  if (even.size() <= k) {
    const std::size_t n_max = 2 * (k < 32 ? 32 : k + 16);
    std::vector<mpq_rational> a(n_max + 1);
    even.clear();
    for (std::size_t m = 0; m <= n_max; ++m) {
      a[m] = mpq_rational(1, static_cast<long>(m + 1));
      for (std::size_t j = m; j >= 1; --j) a[j - 1] = mpq_rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
      if (m % 2 == 0) even.push_back(a[0]);
    }
  }
  return even[k];
}

}  // namespace detail

/// B_{2k} rounded to the current precision of `Real`.
template <typename Real>
Real bernoulli_b2n(std::size_t k) {
  const auto q = detail::bernoulli_rational(k);
  if constexpr (std::is_floating_point_v<Real>) {
    return q.template convert_to<Real>();
  } else {
    Real num(boost::multiprecision::numerator(q).str());
    Real den(boost::multiprecision::denominator(q).str());
    return num / den;
  }
}

}  // namespace rsaux::numerics

#endif  // RSAUX_NUMERICS_BERNOULLI_HPP

#include "theta/lerch.hpp"

#include <stdexcept>

#include "theta/errors.hpp"
#include "theta/int_series.hpp"

namespace theta {

BiSeriesOracle::BiSeriesOracle(unsigned k, long m_max, long n_max)
    : k_(k), m_max_(m_max), n_max_(n_max) {
  if (k == 0 || m_max < 0 || n_max < 0)
    throw std::invalid_argument("oracle needs k >= 1 and nonnegative bounds");
  const IntSeries pk = eta_power_series(-static_cast<long>(k), static_cast<std::size_t>(n_max));
  rows_.assign(2 * m_max + 1, std::vector<mpz_class>(n_max + 1));
  for (long m = -m_max; m <= m_max; ++m) {
    std::vector<mpz_class>& row = rows_[m + m_max];
    if (m >= 0) {
      // sum_{l>=0} (-1)^l q^{l(l+1)/2 + l m} against the partition series.
      for (long l = 0;; ++l) {
        const long e = l * (l + 1) / 2 + l * m;
        if (e > n_max) break;
        for (long n = e; n <= n_max; ++n) {
          if (l & 1)
            row[n] -= pk[n - e];
          else
            row[n] += pk[n - e];
        }
      }
    } else {
      // Poles at negative index: sum_{l>=1} (-1)^{l-1} q^{l(l-1)/2 + l|m|}.
      const long am = -m;
      for (long l = 1;; ++l) {
        const long e = l * (l - 1) / 2 + l * am;
        if (e > n_max) break;
        for (long n = e; n <= n_max; ++n) {
          if (l & 1)
            row[n] += pk[n - e];
          else
            row[n] -= pk[n - e];
        }
      }
    }
  }
}

const mpz_class& BiSeriesOracle::j(long m, long n) const {
  if (m < -m_max_ || m > m_max_ || n < 0 || n > n_max_)
    throw std::out_of_range("oracle index outside truncation");
  return rows_[m + m_max_][n];
}

// The direction of the first difference follows the (1 - zeta) factor: the
// zeta^m coefficient picks up j_m - j_{m-1}, which is the orientation that
// telescopes to the full coefficient mass and matches the crank counts.
mpz_class BiSeriesOracle::a(long m, long n) const { return j(m, n) - j(m - 1, n); }

mpz_class BiSeriesOracle::b(long m, long n) const {
  if (m < 0) throw NegativeM("b_{m,k} is defined for m >= 0");
  return a(m, n) - a(m + 1, n);
}

}  // namespace theta

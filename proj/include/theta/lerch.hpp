#pragma once

#include <gmpxx.h>

#include <vector>

namespace theta {

// Truncated bivariate expansion (Laurent in zeta, power series in q) of the
// Lerch-sum representation of the inverse theta quotient. Each pole term
// 1/(1 - zeta q^l) is expanded geometrically and the resulting sparse theta
// factor is multiplied against the colored-partition series, giving every
// coefficient j_{m,k}(n) for |m| <= m_max, n <= n_max by a route independent
// of the alternating table sums.
class BiSeriesOracle {
 public:
  BiSeriesOracle(unsigned k, long m_max, long n_max);

  unsigned k() const { return k_; }
  long m_max() const { return m_max_; }
  long n_max() const { return n_max_; }

  const mpz_class& j(long m, long n) const;
  mpz_class a(long m, long n) const;  // j(m,n) - j(m-1,n)
  mpz_class b(long m, long n) const;  // a(m,n) - a(m+1,n), m >= 0

 private:
  unsigned k_;
  long m_max_;
  long n_max_;
  std::vector<std::vector<mpz_class>> rows_;  // [m + m_max][n]
};

}  // namespace theta

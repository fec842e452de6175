#include "theta/int_series.hpp"

#include <algorithm>

#include "theta/errors.hpp"

namespace theta {

IntSeries operator+(const IntSeries& a, const IntSeries& b) {
  IntSeries r(std::min(a.trunc(), b.trunc()));
  for (std::size_t i = 0; i <= r.trunc(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

IntSeries operator-(const IntSeries& a, const IntSeries& b) {
  IntSeries r(std::min(a.trunc(), b.trunc()));
  for (std::size_t i = 0; i <= r.trunc(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
  IntSeries r(std::min(a.trunc(), b.trunc()));
  const std::size_t N = r.trunc();
  for (std::size_t i = 0; i <= N && i <= a.trunc(); ++i) {
    if (a.c_[i] == 0) continue;
    const std::size_t jmax = std::min(N - i, b.trunc());
    for (std::size_t j = 0; j <= jmax; ++j) {
      if (b.c_[j] == 0) continue;
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return r;
}

IntSeries IntSeries::pow(unsigned long e) const {
  IntSeries result = IntSeries::one(trunc());
  IntSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

IntSeries IntSeries::invert() const {
  const mpz_class& c0 = c_[0];
  if (c0 != 1 && c0 != -1)
    throw InvalidInvert("series inverse requires constant term +1 or -1");
  IntSeries g(trunc());
  g.c_[0] = c0;  // 1/c0 = c0 when c0 = +-1
  mpz_class acc;
  for (std::size_t n = 1; n <= trunc(); ++n) {
    acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (c_[i] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), c_[i].get_mpz_t(), g.c_[n - i].get_mpz_t());
    }
    g.c_[n] = -c0 * acc;
  }
  return g;
}

IntSeries eta_power_series(long e, std::size_t N) {
  if (e == 0) return IntSeries::one(N);
  // (1-q)(1-q^2)... multiplied out term by term; coefficients stay small.
  IntSeries base = IntSeries::one(N);
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t i = N; i >= n; --i) base[i] -= base[i - n];
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  IntSeries p = base.pow(k);
  return e > 0 ? p : p.invert();
}

}  // namespace theta

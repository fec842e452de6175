#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace theta {

// Dense power series in q with exact integer coefficients, truncated after
// q^N. Arithmetic is exact modulo q^{N+1}; binary operations truncate to the
// shorter operand.
class IntSeries {
 public:
  explicit IntSeries(std::size_t trunc) : c_(trunc + 1) {}

  static IntSeries one(std::size_t trunc) {
    IntSeries s(trunc);
    s.c_[0] = 1;
    return s;
  }

  std::size_t trunc() const { return c_.size() - 1; }
  mpz_class& operator[](std::size_t i) { return c_[i]; }
  const mpz_class& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator-(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator*(const IntSeries& a, const IntSeries& b);

  IntSeries pow(unsigned long e) const;

  // Multiplicative inverse modulo q^{N+1}; requires constant term +-1.
  IntSeries invert() const;

 private:
  std::vector<mpz_class> c_;
};

// prod_{n>=1} (1 - q^n)^e truncated after q^N, for any integer e; e = -k is
// the generating series of k-colored partition counts.
IntSeries eta_power_series(long e, std::size_t N);

}  // namespace theta

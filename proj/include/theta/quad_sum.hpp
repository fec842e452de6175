#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "theta/partition.hpp"

namespace theta {

// Quadratic exponent a*l^2 + b*l with half-integer a, b stored doubled so
// all exponent arithmetic stays integral: a2 = 2a, b2 = 2b.
struct QuadSumSpec {
  long a2;
  long b2;

  QuadSumSpec(long a2_, long b2_);
};

// sum_{l>=1, a l^2 + b l <= X} (-1)^{l-1} f(X - (a l^2 + b l)), exact.
// Terms whose exponent exceeds X vanish (f of a negative argument is zero);
// an argument beyond the table raises TableTooShort.
mpz_class alt_quad_sum(const PartitionTable& f, const QuadSumSpec& spec, long X);

// Theta-quotient Fourier coefficient j_{m,k}(n - m*1_{m>0}); k is the
// table's color count.
mpz_class j_coeff(long m, const PartitionTable& pk, long n);

// a_{m,k}(n) = j_{m,k}(n) - j_{m+1,k}(n), symmetric in m.
mpz_class a_coeff(long m, const PartitionTable& pk, long n);

// b_{m,k}(n) = a_{m,k}(n) - a_{m+1,k}(n); defined for m >= 0 only.
mpz_class b_coeff(long m, const PartitionTable& pk, long n);

// I_k(m,n), m >= 0; p1 is the one-color table.
mpz_class i_coeff(unsigned k, long m, const PartitionTable& p1, long n);

// N_k(m,n) = I_k(|m|,n) - I_k(|m|+1,n). k=1 is the crank count (with the
// usual n=1 convention built into the generating series), k=2 the rank.
mpz_class n_coeff(unsigned k, long m, const PartitionTable& p1, long n);

// N_k(m,n) - N_k(m+1,n); for m < 0 this is -(N_k(|m|-1,n) - N_k(|m|,n)).
mpz_class nk_diff(unsigned k, long m, const PartitionTable& p1, long n);

// J-th forward difference at 0 of the sampled sequence g(0..J).
mpz_class forward_difference(const std::vector<mpz_class>& g, unsigned J);

struct UnimodalResult {
  bool is_unimodal;
  std::size_t peak_index;  // leftmost maximum
};

UnimodalResult unimodal_check(const std::vector<mpz_class>& seq);

}  // namespace theta

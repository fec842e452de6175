#include "theta/quad_sum.hpp"

#include <cstdlib>
#include <stdexcept>

#include "theta/errors.hpp"

namespace theta {

QuadSumSpec::QuadSumSpec(long a2_, long b2_) : a2(a2_), b2(b2_) {
  if (a2 < 1) throw std::invalid_argument("quadratic sum needs a >= 1/2 (a2 >= 1)");
  if ((a2 + b2) % 2 != 0)
    throw std::invalid_argument("a*l^2 + b*l must be integral: a2 + b2 must be even");
}

mpz_class alt_quad_sum(const PartitionTable& f, const QuadSumSpec& spec, long X) {
  if (X < 0) return 0;
  if (static_cast<unsigned long>(X) > f.max_n())
    throw TableTooShort("alt_quad_sum needs f up to X = " + std::to_string(X) +
                        ", table has " + std::to_string(f.max_n()));
  mpz_class sum = 0;
  for (long l = 1;; ++l) {
    const long e2 = spec.a2 * l * l + spec.b2 * l;  // twice the exponent
    if (e2 > 2 * X) {
      // Quadratic is increasing once past the vertex; later terms all vanish.
      if (2 * spec.a2 * l + spec.b2 > 0) break;
      continue;
    }
    const long e = e2 / 2;
    const long arg = X - e;
    if (arg < 0) continue;  // f vanishes on negatives
    const mpz_class& v = f.at(static_cast<unsigned long>(arg));
    if (l & 1)
      sum += v;
    else
      sum -= v;
  }
  return sum;
}

mpz_class j_coeff(long m, const PartitionTable& pk, long n) {
  const long am = std::labs(m);
  return alt_quad_sum(pk, QuadSumSpec(1, 2 * am - 1), n);
}

mpz_class a_coeff(long m, const PartitionTable& pk, long n) {
  const long am = std::labs(m);
  return alt_quad_sum(pk, QuadSumSpec(1, 2 * am - 1), n) -
         alt_quad_sum(pk, QuadSumSpec(1, 2 * am + 1), n);
}

mpz_class b_coeff(long m, const PartitionTable& pk, long n) {
  if (m < 0) throw NegativeM("b_{m,k} is defined for m >= 0");
  return alt_quad_sum(pk, QuadSumSpec(1, 2 * m - 1), n) -
         2 * alt_quad_sum(pk, QuadSumSpec(1, 2 * m + 1), n) +
         alt_quad_sum(pk, QuadSumSpec(1, 2 * m + 3), n);
}

mpz_class i_coeff(unsigned k, long m, const PartitionTable& p1, long n) {
  if (m < 0) throw NegativeM("I_k(m,n) takes m >= 0");
  return alt_quad_sum(p1, QuadSumSpec(2 * static_cast<long>(k) - 1, 2 * m - 1), n);
}

mpz_class n_coeff(unsigned k, long m, const PartitionTable& p1, long n) {
  const long am = std::labs(m);
  return i_coeff(k, am, p1, n) - i_coeff(k, am + 1, p1, n);
}

mpz_class nk_diff(unsigned k, long m, const PartitionTable& p1, long n) {
  if (m < 0) return -(n_coeff(k, -m - 1, p1, n) - n_coeff(k, -m, p1, n));
  return n_coeff(k, m, p1, n) - n_coeff(k, m + 1, p1, n);
}

mpz_class forward_difference(const std::vector<mpz_class>& g, unsigned J) {
  if (g.size() < J + 1)
    throw std::invalid_argument("forward_difference needs J+1 samples");
  mpz_class sum = 0, binom;
  for (unsigned j = 0; j <= J; ++j) {
    mpz_bin_uiui(binom.get_mpz_t(), J, j);
    if ((J - j) % 2 == 0)
      sum += binom * g[j];
    else
      sum -= binom * g[j];
  }
  return sum;
}

UnimodalResult unimodal_check(const std::vector<mpz_class>& seq) {
  if (seq.empty()) throw std::invalid_argument("unimodal_check needs a nonempty sequence");
  std::size_t peak = 0;
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] > seq[peak]) peak = i;
  for (std::size_t i = 1; i <= peak; ++i)
    if (seq[i] < seq[i - 1]) return {false, peak};
  for (std::size_t i = peak + 1; i < seq.size(); ++i)
    if (seq[i] > seq[i - 1]) return {false, peak};
  return {true, peak};
}

}  // namespace theta

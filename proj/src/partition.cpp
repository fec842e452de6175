#include "theta/partition.hpp"

#include <stdexcept>

#include "theta/errors.hpp"

namespace theta {

const mpz_class& PartitionTable::at(unsigned long n) const {
  if (n >= values.size())
    throw TableTooShort("partition table has max_n = " + std::to_string(max_n()) +
                        ", need " + std::to_string(n));
  return values[n];
}

namespace {

void extend_p1(std::vector<mpz_class>& p, unsigned long N) {
  unsigned long start = p.size();
  p.resize(N + 1);
  if (start == 0) {
    p[0] = 1;
    start = 1;
  }
  for (unsigned long n = start; n <= N; ++n) {
    mpz_class acc = 0;
    for (unsigned long j = 1;; ++j) {
      const unsigned long g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      const unsigned long g2 = j * (3 * j + 1) / 2;
      if (j & 1) {
        acc += p[n - g1];
        if (g2 <= n) acc += p[n - g2];
      } else {
        acc -= p[n - g1];
        if (g2 <= n) acc -= p[n - g2];
      }
    }
    p[n] = acc;
  }
}

std::vector<unsigned long> sigma_sieve(unsigned long N) {
  std::vector<unsigned long> s(N + 1, 0);
  for (unsigned long d = 1; d <= N; ++d)
    for (unsigned long m = d; m <= N; m += d) s[m] += d;
  return s;
}

void extend_pk(unsigned k, std::vector<mpz_class>& p, unsigned long N) {
  const std::vector<unsigned long> sigma = sigma_sieve(N);
  unsigned long start = p.size();
  p.resize(N + 1);
  if (start == 0) {
    p[0] = 1;
    start = 1;
  }
  mpz_class acc;
  for (unsigned long n = start; n <= N; ++n) {
    acc = 0;
    for (unsigned long j = 1; j <= n; ++j)
      mpz_addmul_ui(acc.get_mpz_t(), p[n - j].get_mpz_t(), sigma[j]);
    acc *= k;
    mpz_divexact_ui(p[n].get_mpz_t(), acc.get_mpz_t(), n);
  }
}

}  // namespace

PartitionTable partition_table(unsigned k, unsigned long N) {
  if (k == 0) throw std::invalid_argument("color count k must be >= 1");
  PartitionTable t;
  t.k = k;
  extend_partition_table(t, N);
  return t;
}

void extend_partition_table(PartitionTable& t, unsigned long N) {
  if (!t.values.empty() && t.max_n() >= N) return;
  if (t.k == 1)
    extend_p1(t.values, N);
  else
    extend_pk(t.k, t.values, N);
}

}  // namespace theta

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "theta/enumeration.hpp"
#include "theta/lerch.hpp"
#include "theta/partition.hpp"
#include "theta/quad_sum.hpp"

using namespace theta;

TEST_CASE("pole expansion agrees with the alternating sums") {
  for (unsigned k = 1; k <= 3; ++k) {
    const BiSeriesOracle oracle(k, 12, 100);
    const PartitionTable pk = partition_table(k, 120);
    for (long m = -10; m <= 10; ++m)
      for (long n = 0; n <= 100; ++n) {
        CHECK(oracle.j(m, n) == j_coeff(m, pk, n + (m > 0 ? m : 0)));
        CHECK(oracle.a(m, n) == a_coeff(m, pk, n));
      }
    for (long m = 0; m <= 10; ++m)
      for (long n = 0; n <= 100; ++n) CHECK(oracle.b(m, n) == b_coeff(m, pk, n));
  }
}

TEST_CASE("coefficients carry the full mass") {
  for (unsigned k = 1; k <= 3; ++k) {
    const BiSeriesOracle oracle(k, 103, 100);
    const PartitionTable pk = partition_table(k, 100);
    for (long n = 0; n <= 100; ++n) {
      mpz_class sum = 0;
      for (long m = -102; m <= 102; ++m) sum += oracle.a(m, n);
      CHECK(sum == pk.values[n]);
    }
  }
}

TEST_CASE("one-color first differences count cranks") {
  const BiSeriesOracle oracle(1, 45, 40);
  for (unsigned n = 2; n <= 40; ++n) {
    const auto cranks = crank_counts(n);
    for (long m = -static_cast<long>(n) - 1; m <= static_cast<long>(n) + 1; ++m) {
      auto it = cranks.find(m);
      const mpz_class want(it == cranks.end() ? 0UL : static_cast<unsigned long>(it->second));
      CHECK(oracle.a(m, static_cast<long>(n)) == want);
    }
  }
}

TEST_CASE("indices outside the truncation are rejected") {
  const BiSeriesOracle oracle(1, 3, 10);
  CHECK_THROWS_AS(oracle.j(4, 0), std::out_of_range);
  CHECK_THROWS_AS(oracle.j(0, 11), std::out_of_range);
  CHECK_THROWS_AS(oracle.a(-3, 0), std::out_of_range);  // needs j(-4, .)
}

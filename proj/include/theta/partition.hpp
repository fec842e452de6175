#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace theta {

// Exact values p_k(0..max_n) of the k-colored partition counting function;
// k = 1 is the ordinary partition function. Completed tables are immutable
// and safe to share across threads.
struct PartitionTable {
  unsigned k = 1;
  std::vector<mpz_class> values;

  unsigned long max_n() const { return values.size() - 1; }

  // Bounds-checked lookup; throws TableTooShort past max_n.
  const mpz_class& at(unsigned long n) const;
};

// Builds the exact table. k = 1 uses the pentagonal-number recurrence,
// k >= 2 the sigma-weighted convolution n*p_k(n) = k*sum sigma(j)p_k(n-j).
PartitionTable partition_table(unsigned k, unsigned long N);

// Grows an existing table in place up to N (no-op if already long enough).
void extend_partition_table(PartitionTable& t, unsigned long N);

// Cache file round trip. The format is line-oriented decimal text with a
// trailing sha256 line; load verifies structure and checksum and, when
// expect_k != 0, that the stored color count matches.
void save_table(const PartitionTable& t, const std::string& path);
PartitionTable load_table(const std::string& path, unsigned expect_k = 0);

}  // namespace theta

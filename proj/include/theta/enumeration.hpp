#pragma once

#include <map>

namespace theta {

// Brute-force partition statistics for small n, used as an independent
// cross-check route. Counts are exact; n is kept small (<= ~45) because the
// walk visits every partition.

// Number of partitions of n by direct enumeration.
unsigned long long partition_count_by_enumeration(unsigned n);

// crank -> count over all partitions of n (largest part if there are no
// ones, otherwise #parts-larger-than-#ones minus #ones). True crank counts
// for n >= 2; n = 1 carries the enumeration value, not the series
// convention.
std::map<long, unsigned long long> crank_counts(unsigned n);

// rank -> count (largest part minus number of parts) over partitions of n.
std::map<long, unsigned long long> rank_counts(unsigned n);

}  // namespace theta

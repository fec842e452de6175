#include "theta/enumeration.hpp"

#include <functional>
#include <vector>

namespace theta {

namespace {

// Visits every partition of n as a non-increasing part list.
void for_each_partition(unsigned n,
                        const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> parts;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned cap) {
    if (rest == 0) {
      visit(parts);
      return;
    }
    for (unsigned p = std::min(rest, cap); p >= 1; --p) {
      parts.push_back(p);
      rec(rest - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
}

}  // namespace

unsigned long long partition_count_by_enumeration(unsigned n) {
  unsigned long long count = 0;
  for_each_partition(n, [&](const std::vector<unsigned>&) { ++count; });
  return count;
}

std::map<long, unsigned long long> crank_counts(unsigned n) {
  std::map<long, unsigned long long> counts;
  for_each_partition(n, [&](const std::vector<unsigned>& parts) {
    unsigned ones = 0;
    for (unsigned p : parts)
      if (p == 1) ++ones;
    long crank;
    if (ones == 0) {
      crank = parts.empty() ? 0 : static_cast<long>(parts.front());
    } else {
      unsigned mu = 0;
      for (unsigned p : parts)
        if (p > ones) ++mu;
      crank = static_cast<long>(mu) - static_cast<long>(ones);
    }
    ++counts[crank];
  });
  return counts;
}

std::map<long, unsigned long long> rank_counts(unsigned n) {
  std::map<long, unsigned long long> counts;
  for_each_partition(n, [&](const std::vector<unsigned>& parts) {
    const long largest = parts.empty() ? 0 : static_cast<long>(parts.front());
    ++counts[largest - static_cast<long>(parts.size())];
  });
  return counts;
}

}  // namespace theta

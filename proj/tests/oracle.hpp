#pragma once

// Test-only oracles, deliberately naive and independent of the search and
// identity code paths under test.

#include <bit>
#include <cstdint>
#include <vector>

#include "tdp/bigint.hpp"
#include "tdp/graph.hpp"

namespace tdp::testing {

// Plain subset loop: for every mask, union the neighborhoods and compare
// with V. No ordering, no pruning, no binomial shortcuts.
inline std::vector<BigInt> brute_force_counts(const Graph& g) {
  int n = g.order();
  std::vector<BigInt> counts(n + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Bitset covered(n);
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) covered |= g.neighbors(v);
    if (covered.is_full()) counts[std::popcount(mask)] += 1;
  }
  return counts;
}

}  // namespace tdp::testing

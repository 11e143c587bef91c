#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "tdp/graph.hpp"
#include "tdp/polynomial.hpp"

namespace tdp {

inline constexpr int kDefaultEnumerationCap = 26;
// Hard limit of the word-parallel search masks.
inline constexpr int kMaxEnumerableOrder = 63;

// Raised when an exponential operation is asked to run past the configured
// enumeration cap; closed forms remain available beyond it.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumOptions {
  int cap = kDefaultEnumerationCap;
  int threads = 0;       // 0 = hardware concurrency
  int prefix_bits = -1;  // task-splitting depth; -1 = min(8, n)
};

// counts[i] = number of total dominating sets of cardinality i.
struct CountTable {
  int n = 0;
  std::vector<BigInt> counts;  // size n+1

  nlohmann::ordered_json to_json() const;
  static CountTable from_json(const nlohmann::json& j);
};

CountTable count_total_dominating_sets(const Graph& g, const EnumOptions& opts = {});

// Σ d_t(G,i) x^i from direct enumeration; zero polynomial when no total
// dominating set exists.
Polynomial total_domination_polynomial(const Graph& g, const EnumOptions& opts = {});

// Same polynomial via the alternating subset sum over (x+1)^{n-|N(S)|},
// an independent computation path.
Polynomial total_domination_polynomial_ie(const Graph& g, const EnumOptions& opts = {});

// Smallest size of a total dominating set; nullopt when none exists.
std::optional<int> total_domination_number(const Graph& g, const EnumOptions& opts = {});

}  // namespace tdp

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tdp/graph.hpp"

namespace tdp {

// G(n,p) with a seed that fully determines the edge set; the generator is
// mt19937_64 with explicit bit-to-double conversion, so the same seed yields
// the same graph on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

struct CorpusSpec {
  int n_min = 4;
  int n_max = 14;
  int per_cell = 200;
  std::vector<double> edge_probs = {0.2, 0.5, 0.8};
  std::uint64_t seed = 42;
};

struct CorpusEntry {
  Graph graph;
  std::string name;
};

// Deterministic sweep over (n, p, sample index), in that nesting order.
std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec);

}  // namespace tdp

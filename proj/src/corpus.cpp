#include "tdp/corpus.hpp"

#include <random>
#include <sstream>

namespace tdp {

namespace {

// splitmix64, to spread (seed, n, p-index, sample) into stream seeds.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (next_unit(rng) < p) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec) {
  std::vector<CorpusEntry> out;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    for (std::size_t pi = 0; pi < spec.edge_probs.size(); ++pi) {
      double p = spec.edge_probs[pi];
      for (int s = 0; s < spec.per_cell; ++s) {
        std::uint64_t stream =
            mix(spec.seed ^ mix((std::uint64_t{static_cast<std::uint64_t>(n)} << 32) ^
                                (std::uint64_t{pi} << 20) ^ static_cast<std::uint64_t>(s)));
        std::ostringstream name;
        name << "G(" << n << "," << p << ")#" << s;
        out.push_back({random_graph(n, p, stream), name.str()});
      }
    }
  }
  return out;
}

}  // namespace tdp

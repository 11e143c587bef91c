#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tdp/bitset.hpp"

namespace tdp {

// Simple undirected graph: vertex count plus one open-neighborhood bit set
// per vertex. Immutable by convention once built (constructors and
// from_edge_list are the only writers); adjacency is always symmetric and
// loop-free.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  const Bitset& neighbors(int v) const;
  bool has_edge(int u, int v) const;
  int degree(int v) const;

  // Minimum degree over all vertices; order 0 is an input error.
  int min_degree() const;

  std::int64_t edge_count() const;
  bool has_isolated_vertex() const;

  bool operator==(const Graph&) const = default;

 private:
  void add_edge(int u, int v);

  int n_ = 0;
  std::vector<Bitset> adj_;

  friend Graph complete(int);
  friend Graph path(int);
  friend Graph cycle(int);
  friend Graph star(int);
  friend Graph friendship(int);
  friend Graph book(int);
  friend Graph complete_bipartite(int, int);
  friend Graph corona(const Graph&, const Graph&);
  friend Graph join(const Graph&, const Graph&);
};

using VertexSet = Bitset;

// Union of open neighborhoods N(S); the empty set maps to the empty set.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

// True iff N(D) = V.
bool is_total_dominating(const Graph& g, const VertexSet& d);

// Standard families. star(n) is K_{1,n} on n+1 vertices with center 0.
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int n);
Graph empty_graph(int n);

// n triangles sharing vertex 0; order 2n+1, vertices 2i-1 and 2i paired.
Graph friendship(int n);

// n quadrilateral pages on the common edge {0,1}; order 2n+2, page i has
// vertices 2i (adjacent to 0) and 2i+1 (adjacent to 1).
Graph book(int n);

// Parts {0..m-1} and {m..m+n-1}.
Graph complete_bipartite(int m, int n);

// One copy of g plus order(g) copies of h; vertex i of g is joined to all of
// copy i, which occupies indices n + i*m .. n + i*m + m - 1 and keeps h's
// internal edges.
Graph corona(const Graph& g, const Graph& h);

// Disjoint union plus all cross edges; h's vertices are shifted by order(g).
Graph join(const Graph& g, const Graph& h);

// Edge-list text format: first non-comment line is `n`, then one `u v` pair
// per line, 0-indexed. `#` starts a comment anywhere on a line.
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);

}  // namespace tdp

#include "tdp/graph.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace tdp {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative order");
  adj_.assign(n, Bitset(n));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("Graph: edge endpoint out of range");
  if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

const Bitset& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const { return neighbors(u).test(v); }

int Graph::degree(int v) const { return neighbors(v).count(); }

int Graph::min_degree() const {
  if (n_ == 0) throw std::invalid_argument("min_degree: empty graph");
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::int64_t Graph::edge_count() const {
  std::int64_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < n_; ++v)
    if (adj_[v].none()) return true;
  return false;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  if (s.size() != g.order()) throw std::invalid_argument("open_neighborhood: set size mismatch");
  VertexSet out(g.order());
  for (int v = 0; v < g.order(); ++v)
    if (s.test(v)) out |= g.neighbors(v);
  return out;
}

bool is_total_dominating(const Graph& g, const VertexSet& d) {
  return open_neighborhood(g, d).is_full();
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: n >= 1 required");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph star(int n) {
  if (n < 1) throw std::invalid_argument("star: n >= 1 required");
  Graph g(n + 1);
  for (int v = 1; v <= n; ++v) g.add_edge(0, v);
  return g;
}

Graph empty_graph(int n) {
  if (n < 1) throw std::invalid_argument("empty_graph: n >= 1 required");
  return Graph(n);
}

Graph friendship(int n) {
  if (n < 1) throw std::invalid_argument("friendship: n >= 1 required");
  Graph g(2 * n + 1);
  for (int i = 1; i <= n; ++i) {
    g.add_edge(0, 2 * i - 1);
    g.add_edge(0, 2 * i);
    g.add_edge(2 * i - 1, 2 * i);
  }
  return g;
}

Graph book(int n) {
  if (n < 1) throw std::invalid_argument("book: n >= 1 required");
  Graph g(2 * n + 2);
  g.add_edge(0, 1);
  for (int i = 1; i <= n; ++i) {
    g.add_edge(2 * i, 0);
    g.add_edge(2 * i, 2 * i + 1);
    g.add_edge(2 * i + 1, 1);
  }
  return g;
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: m,n >= 1 required");
  Graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = m; v < m + n; ++v) g.add_edge(u, v);
  return g;
}

Graph corona(const Graph& g, const Graph& h) {
  int n = g.order(), m = h.order();
  if (n == 0 || m == 0) throw std::invalid_argument("corona: both graphs must be nonempty");
  Graph out(n * (1 + m));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v)) out.add_edge(u, v);
  for (int i = 0; i < n; ++i) {
    int base = n + i * m;
    for (int j = 0; j < m; ++j) {
      out.add_edge(i, base + j);
      for (int k = j + 1; k < m; ++k)
        if (h.has_edge(j, k)) out.add_edge(base + j, base + k);
    }
  }
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  int n = g.order(), m = h.order();
  if (n == 0 || m == 0) throw std::invalid_argument("join: both graphs must be nonempty");
  Graph out(n + m);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v)) out.add_edge(u, v);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (h.has_edge(u, v)) out.add_edge(n + u, n + v);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < m; ++v) out.add_edge(u, n + v);
  return out;
}

namespace {

[[noreturn]] void parse_error(int line_no, const std::string& what) {
  throw std::invalid_argument("edge list, line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n)) {
        n = -1;  // blank / comment-only line before the header
        continue;
      }
      if (n < 0) parse_error(line_no, "negative vertex count");
      int extra;
      if (ls >> extra) parse_error(line_no, "expected a single vertex count");
      continue;
    }
    int u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) parse_error(line_no, "expected `u v` pair");
    int extra;
    if (ls >> extra) parse_error(line_no, "expected exactly two endpoints");
    if (u < 0 || u >= n || v < 0 || v >= n) parse_error(line_no, "endpoint out of range");
    if (u == v) parse_error(line_no, "self-loop");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw std::invalid_argument("edge list: missing vertex count line");
  return Graph::from_edge_list(n, edges);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return parse_edge_list(in);
}

}  // namespace tdp

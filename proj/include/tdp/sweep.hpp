#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tdp/enumeration.hpp"
#include "tdp/graph.hpp"
#include "tdp/polynomial.hpp"

namespace tdp {

// Resolved `family:args` spec or edge-list file: the polynomial (closed form
// where one exists, enumeration otherwise) and, when constructible, the graph.
struct ResolvedInput {
  std::string canonical;
  Polynomial poly;
  std::optional<Graph> graph;
};

// Specs: complete:n, path:n, cycle:n, star:n, empty:n, friendship:n, book:n,
// kmn:m,n, corona-empty:n,m; anything else is treated as an edge-list path.
ResolvedInput resolve_input(const std::string& spec, const EnumOptions& opts = {});
bool looks_like_family_spec(const std::string& spec);

struct SweepPoint {
  std::string param;
  double re = 0;
  double im = 0;
  int multiplicity = 1;
  double residual = 0;
};

// One point per root (zero roots included with their exact multiplicity) per
// family member. kmn ranges over m+n in [lo, hi] with 1 <= m <= n.
std::vector<SweepPoint> sweep_family(const std::string& family, int lo, int hi,
                                     const EnumOptions& opts = {});

// Schema: param,re,im,multiplicity,residual; doubles at 17 significant digits.
void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint>& points);

// Scatter of the points with unit-length axis ticks and a center mark at
// (-1, 0).
void write_sweep_svg(std::ostream& os, const std::vector<SweepPoint>& points);

}  // namespace tdp

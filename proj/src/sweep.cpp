#include "tdp/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "tdp/closed_forms.hpp"
#include "tdp/roots.hpp"

namespace tdp {

namespace {

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<int> parse_int_args(const std::string& args, std::size_t want,
                                const std::string& spec) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= args.size()) {
    std::size_t comma = args.find(',', pos);
    std::string tok = args.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad family spec '" + spec + "': integer expected");
    }
    if (used != tok.size())
      throw std::invalid_argument("bad family spec '" + spec + "': trailing characters");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != want)
    throw std::invalid_argument("bad family spec '" + spec + "': wrong argument count");
  return out;
}

}  // namespace

bool looks_like_family_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos || colon == 0) return false;
  static const char* kFamilies[] = {"complete", "path",       "cycle", "star", "empty",
                                    "friendship", "book", "kmn", "corona-empty"};
  std::string name = spec.substr(0, colon);
  return std::any_of(std::begin(kFamilies), std::end(kFamilies),
                     [&](const char* f) { return name == f; });
}

ResolvedInput resolve_input(const std::string& spec, const EnumOptions& opts) {
  ResolvedInput out;
  out.canonical = spec;
  if (!looks_like_family_spec(spec)) {
    Graph g = load_edge_list(spec);
    out.poly = total_domination_polynomial(g, opts);
    out.graph = std::move(g);
    return out;
  }
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::string args = spec.substr(colon + 1);

  if (name == "complete") {
    int n = parse_int_args(args, 1, spec)[0];
    out.graph = complete(n);
    out.poly = n >= 2 ? dt_complete(n) : total_domination_polynomial(*out.graph, opts);
  } else if (name == "path") {
    int n = parse_int_args(args, 1, spec)[0];
    out.graph = path(n);
    out.poly = total_domination_polynomial(*out.graph, opts);
  } else if (name == "cycle") {
    int n = parse_int_args(args, 1, spec)[0];
    out.graph = cycle(n);
    out.poly = total_domination_polynomial(*out.graph, opts);
  } else if (name == "star") {
    int n = parse_int_args(args, 1, spec)[0];
    out.graph = star(n);
    // Center forced into every total dominating set: x(1+x)^n - x.
    out.poly = Polynomial::monomial(1, 1) * Polynomial::binomial_shift(n) -
               Polynomial::monomial(1, 1);
  } else if (name == "empty") {
    int n = parse_int_args(args, 1, spec)[0];
    out.graph = empty_graph(n);
    out.poly = Polynomial();
  } else if (name == "friendship") {
    int n = parse_int_args(args, 1, spec)[0];
    out.graph = friendship(n);
    out.poly = n >= 2 ? dt_friendship(n) : total_domination_polynomial(*out.graph, opts);
  } else if (name == "book") {
    int n = parse_int_args(args, 1, spec)[0];
    out.graph = book(n);
    out.poly = n >= 2 ? dt_book(n) : total_domination_polynomial(*out.graph, opts);
  } else if (name == "kmn") {
    auto mn = parse_int_args(args, 2, spec);
    out.graph = complete_bipartite(mn[0], mn[1]);
    out.poly = dt_complete_bipartite(mn[0], mn[1]);
  } else if (name == "corona-empty") {
    auto nm = parse_int_args(args, 2, spec);
    out.graph = corona(path(nm[0]), empty_graph(nm[1]));
    out.poly = dt_corona_empty(nm[0], nm[1]);
  } else {
    throw std::invalid_argument("unknown family '" + name + "'");
  }
  return out;
}

namespace {

void append_points(std::vector<SweepPoint>& out, const std::string& param, const Polynomial& p) {
  if (p.is_zero() || p.degree() < 1) return;
  RootSet rs = find_roots(p);
  if (rs.zero_multiplicity > 0)
    out.push_back({param, 0.0, 0.0, rs.zero_multiplicity, 0.0});
  for (const auto& r : rs.roots)
    out.push_back({param, r.value.real(), r.value.imag(), r.multiplicity, r.residual});
}

}  // namespace

std::vector<SweepPoint> sweep_family(const std::string& family, int lo, int hi,
                                     const EnumOptions& opts) {
  if (lo > hi) throw std::invalid_argument("sweep: empty range");
  std::vector<SweepPoint> out;
  if (family == "complete" || family == "friendship" || family == "book") {
    for (int n = std::max(lo, 1); n <= hi; ++n) {
      ResolvedInput in = resolve_input(family + ":" + std::to_string(n), opts);
      append_points(out, std::to_string(n), in.poly);
    }
  } else if (family == "kmn") {
    for (int s = std::max(lo, 2); s <= hi; ++s)
      for (int m = 1; 2 * m <= s; ++m)
        append_points(out, std::to_string(m) + "x" + std::to_string(s - m),
                      dt_complete_bipartite(m, s - m));
  } else {
    throw std::invalid_argument("sweep: unknown family '" + family +
                                "' (expected complete|friendship|book|kmn)");
  }
  return out;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint>& points) {
  os << "param,re,im,multiplicity,residual\n";
  for (const auto& p : points)
    os << p.param << ',' << g17(p.re) << ',' << g17(p.im) << ',' << p.multiplicity << ','
       << g17(p.residual) << '\n';
}

void write_sweep_svg(std::ostream& os, const std::vector<SweepPoint>& points) {
  double min_x = -2.5, max_x = 0.5, min_y = -1.5, max_y = 1.5;
  for (const auto& p : points) {
    min_x = std::min(min_x, p.re - 0.5);
    max_x = std::max(max_x, p.re + 0.5);
    min_y = std::min(min_y, p.im - 0.5);
    max_y = std::max(max_y, p.im + 0.5);
  }
  const int w = 720, h = 720;
  auto X = [&](double x) { return (x - min_x) / (max_x - min_x) * w; };
  auto Y = [&](double y) { return h - (y - min_y) / (max_y - min_y) * h; };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  os << "  <rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  // axes through the origin, ticks every unit
  os << "  <line x1=\"" << g17(X(min_x)) << "\" y1=\"" << g17(Y(0)) << "\" x2=\"" << g17(X(max_x))
     << "\" y2=\"" << g17(Y(0)) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  os << "  <line x1=\"" << g17(X(0)) << "\" y1=\"" << g17(Y(min_y)) << "\" x2=\"" << g17(X(0))
     << "\" y2=\"" << g17(Y(max_y)) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  for (int t = static_cast<int>(std::ceil(min_x)); t <= static_cast<int>(std::floor(max_x)); ++t)
    os << "  <line x1=\"" << g17(X(t)) << "\" y1=\"" << g17(Y(0) - 4) << "\" x2=\"" << g17(X(t))
       << "\" y2=\"" << g17(Y(0) + 4) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  for (int t = static_cast<int>(std::ceil(min_y)); t <= static_cast<int>(std::floor(max_y)); ++t)
    os << "  <line x1=\"" << g17(X(0) - 4) << "\" y1=\"" << g17(Y(t)) << "\" x2=\""
       << g17(X(0) + 4) << "\" y2=\"" << g17(Y(t)) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  // center mark at (-1, 0)
  os << "  <path d=\"M " << g17(X(-1) - 6) << " " << g17(Y(0)) << " L " << g17(X(-1) + 6) << " "
     << g17(Y(0)) << " M " << g17(X(-1)) << " " << g17(Y(0) - 6) << " L " << g17(X(-1)) << " "
     << g17(Y(0) + 6) << "\" stroke=\"#c00\" stroke-width=\"1.5\"/>\n";
  for (const auto& p : points)
    os << "  <circle cx=\"" << g17(X(p.re)) << "\" cy=\"" << g17(Y(p.im))
       << "\" r=\"2.2\" fill=\"#1f4e9c\" fill-opacity=\"0.55\"/>\n";
  os << "</svg>\n";
}

}  // namespace tdp

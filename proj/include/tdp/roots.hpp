#pragma once

#include <complex>
#include <vector>

#include <json.hpp>

#include "tdp/enumeration.hpp"
#include "tdp/graph.hpp"
#include "tdp/polynomial.hpp"
#include "tdp/report.hpp"

namespace tdp {

struct RootEntry {
  std::complex<double> value;
  int multiplicity = 1;
  double residual = 0.0;  // |p(z)| / sum_i |c_i| |z|^i
  bool converged = true;
};

struct RootSet {
  int zero_multiplicity = 0;
  std::vector<RootEntry> roots;  // sorted by (re, im)
  bool all_converged = true;

  int total_multiplicity() const;
  nlohmann::ordered_json to_json() const;
};

// Residuals above this are flagged unconverged.
inline constexpr double kRootResidualTol = 1e-9;

// Deflates the exact power of x, then runs simultaneous-correction
// (Aberth-style) iteration from perturbed circular starting points until the
// largest step is below 1e-12*(1+|z|) or 1000 sweeps; roots within 1e-8 of
// each other are clustered into multiplicities. Refuses coefficients beyond
// double range (use the Sturm/integer paths instead).
RootSet find_roots(const Polynomial& p);

// Exact big-integer evaluation of p at every integer z with
// |z+1| <= ceil(radius); returns the roots, ascending.
std::vector<long long> integer_roots(const Polynomial& p, double radius);

// (2^n - 1)^(1/delta) for the root disc centered at -1.
double disc_bound_radius(const Graph& g);

// Enumerates D_t(g), finds its roots, and asserts every converged root
// satisfies |z+1| <= disc_bound_radius(g) + 1e-6.
CheckReport check_disc_bound(const Graph& g, const std::string& instance,
                             const EnumOptions& opts = {});

}  // namespace tdp

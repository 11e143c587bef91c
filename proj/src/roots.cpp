#include "tdp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tdp/sturm.hpp"

namespace tdp {

namespace {

using CLD = std::complex<long double>;

constexpr double kStepTol = 1e-12;
constexpr int kMaxIterations = 1000;
constexpr double kClusterRadius = 1e-8;
constexpr double kDiscSlack = 1e-6;

CLD eval(const std::vector<CLD>& c, CLD z) {
  CLD r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

// |p|(t) with |coefficients|, for residual scaling.
long double eval_abs(const std::vector<CLD>& c, long double t) {
  long double r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + std::abs(*it);
  return r;
}

// q(y) = p(y - 1), exact. The families' roots cluster around -1, so the
// shifted basis is far better conditioned than the monomial one (for the
// complete bipartite forms the shifted coefficients are all small).
Polynomial taylor_shift_minus_one(const Polynomial& p) {
  std::vector<BigInt> c = p.coeffs();
  int d = p.degree();
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) c[j] -= c[j + 1];
  return Polynomial(std::move(c));
}

// Coefficients scaled by the largest magnitude; refuses anything past double
// range.
std::vector<CLD> to_scaled(const Polynomial& p) {
  static const BigInt kFloatLimit = pow(BigInt(10), 300);
  double max_abs = 0;
  for (const auto& c : p.coeffs()) {
    BigInt a = abs(c);
    if (a > kFloatLimit)
      throw std::overflow_error(
          "find_roots: coefficients exceed 1e300; use the Sturm or integer-root paths");
    max_abs = std::max(max_abs, a.convert_to<double>());
  }
  std::vector<CLD> out(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i)
    out[i] = CLD(p.coeff(i).convert_to<long double>() / static_cast<long double>(max_abs), 0);
  return out;
}

// Simultaneous correction from a perturbed circle, updated in place. Stops
// when the whole configuration is still, or has been trembling at rounding
// level for a while; a single small step must not freeze an individual root.
std::vector<CLD> aberth(const std::vector<CLD>& c) {
  int d = static_cast<int>(c.size()) - 1;
  std::vector<CLD> dc(d);
  for (int i = 1; i <= d; ++i) dc[i - 1] = static_cast<long double>(i) * c[i];

  long double r0 = std::pow(std::abs(c[0]) / std::abs(c[d]), 1.0L / d);
  r0 = std::clamp(r0, 1e-6L, 1e6L);
  std::vector<CLD> zs(d);
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  for (int i = 0; i < d; ++i) {
    long double angle = two_pi * i / d + 0.4L + 1e-3L * i;
    zs[i] = r0 * CLD(std::cos(angle), std::sin(angle));
  }

  int calm_sweeps = 0;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    long double max_rel_step = 0;
    for (int i = 0; i < d; ++i) {
      CLD pi = eval(c, zs[i]);
      CLD dpi = eval(dc, zs[i]);
      if (dpi == CLD(0)) {
        zs[i] += CLD(1e-6L, 1e-6L);  // off a critical point, retry
        max_rel_step = 1;
        continue;
      }
      CLD newton = pi / dpi;
      CLD sum = 0;
      for (int j = 0; j < d; ++j)
        if (j != i) sum += CLD(1) / (zs[i] - zs[j]);
      CLD denom = CLD(1) - newton * sum;
      CLD step = denom != CLD(0) ? newton / denom : newton;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        zs[i] += CLD(1e-6L, -1e-6L);
        max_rel_step = 1;
        continue;
      }
      zs[i] -= step;
      max_rel_step = std::max(max_rel_step, std::abs(step) / (1 + std::abs(zs[i])));
    }
    if (max_rel_step <= kStepTol) break;
    calm_sweeps = max_rel_step <= 1e-10 ? calm_sweeps + 1 : 0;
    if (calm_sweeps >= 8) break;
  }
  return zs;
}

}  // namespace

int RootSet::total_multiplicity() const {
  int m = zero_multiplicity;
  for (const auto& r : roots) m += r.multiplicity;
  return m;
}

RootSet find_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("find_roots: zero polynomial");
  if (p.degree() < 1) throw std::invalid_argument("find_roots: degree >= 1 required");

  RootSet out;
  out.zero_multiplicity = p.lowest_degree();
  Polynomial q = deflate_zero_roots(p);
  if (q.degree() == 0) return out;

  // Residuals are measured against the shifted image of the whole deflated
  // polynomial (same values, better-conditioned scale).
  Polynomial q_shifted = taylor_shift_minus_one(q);
  std::vector<CLD> pc = to_scaled(q_shifted);

  // Iterating a polynomial with multiple roots stalls at sqrt(eps.cond)
  // accuracy, far too coarse at these degrees; the exact gcd chain peels the
  // multiplicity off first so every iterated factor has simple roots only.
  for (const auto& [factor, mult] : square_free_decomposition(q)) {
    Polynomial shifted = taylor_shift_minus_one(factor);
    int y_zeros = shifted.lowest_degree();  // 0 or 1: the factor is square-free
    if (y_zeros > 0) {
      // exact root at x = -1
      RootEntry entry;
      entry.value = {-1.0, 0.0};
      entry.multiplicity = y_zeros * mult;
      entry.residual = 0.0;
      entry.converged = true;
      out.roots.push_back(entry);
      shifted = deflate_zero_roots(shifted);
    }
    int d = shifted.degree();
    if (d == 0) continue;
    std::vector<CLD> fc = to_scaled(shifted);
    std::vector<CLD> ys = aberth(fc);

    // Clustering within a square-free factor is a safety net; members
    // within 1e-8 are treated as one root.
    std::vector<int> parent(d);
    for (int i = 0; i < d; ++i) parent[i] = i;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (std::abs(ys[i] - ys[j]) <= kClusterRadius) parent[find(i)] = find(j);
    std::vector<std::vector<int>> clusters(d);
    for (int i = 0; i < d; ++i) clusters[find(i)].push_back(i);

    for (const auto& members : clusters) {
      if (members.empty()) continue;
      CLD mean = 0;
      for (int i : members) mean += ys[i];
      mean /= static_cast<long double>(members.size());
      long double denom = eval_abs(pc, std::abs(mean));
      double residual =
          denom > 0 ? static_cast<double>(std::abs(eval(pc, mean)) / denom) : 0.0;
      long double fdenom = eval_abs(fc, std::abs(mean));
      double fresidual =
          fdenom > 0 ? static_cast<double>(std::abs(eval(fc, mean)) / fdenom) : 0.0;
      RootEntry entry;
      entry.value = std::complex<double>(static_cast<double>(mean.real() - 1.0L),
                                         static_cast<double>(mean.imag()));
      entry.multiplicity = static_cast<int>(members.size()) * mult;
      entry.residual = residual;
      entry.converged = fresidual <= kRootResidualTol && residual <= kRootResidualTol;
      out.all_converged = out.all_converged && entry.converged;
      out.roots.push_back(entry);
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const RootEntry& a, const RootEntry& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

std::vector<long long> integer_roots(const Polynomial& p, double radius) {
  if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
  if (!(radius >= 0) || radius > 1e9)
    throw std::invalid_argument("integer_roots: radius out of supported range");
  long long r = static_cast<long long>(std::ceil(radius));
  std::vector<long long> found;
  for (long long z = -1 - r; z <= -1 + r; ++z)
    if (p.eval_int(BigInt(z)) == 0) found.push_back(z);
  // the zero root is part of the answer even when the disc misses it
  if (p.lowest_degree() >= 1 && (found.empty() || found.back() < 0)) found.push_back(0);
  return found;
}

double disc_bound_radius(const Graph& g) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("disc_bound_radius: empty graph");
  int delta = g.min_degree();
  if (delta == 0)
    throw std::invalid_argument("disc_bound_radius: minimum degree must be >= 1");
  if (n <= 62) {
    double m = static_cast<double>((std::uint64_t{1} << n) - 1);
    return std::pow(m, 1.0 / delta);
  }
  // log(2^n - 1) = n log 2 + log(1 - 2^-n)
  double log_m = n * std::log(2.0) + std::log1p(-std::exp2(-static_cast<double>(n)));
  return std::exp(log_m / delta);
}

CheckReport check_disc_bound(const Graph& g, const std::string& instance,
                             const EnumOptions& opts) {
  static const std::string kId = "disc_bound";
  if (g.order() == 0 || g.has_isolated_vertex())
    return CheckReport::skipped(kId, instance, "zero polynomial (isolated vertex)");
  double radius = disc_bound_radius(g);
  Polynomial dt = total_domination_polynomial(g, opts);
  if (dt.is_zero()) return CheckReport::skipped(kId, instance, "zero polynomial");
  RootSet rs = find_roots(dt);

  double max_dist = 0;
  for (const auto& r : rs.roots)
    if (r.converged) max_dist = std::max(max_dist, std::abs(r.value + 1.0));
  nlohmann::ordered_json metrics{{"n", g.order()},
                                 {"delta", g.min_degree()},
                                 {"radius", radius},
                                 {"max_abs_z_plus_1", max_dist}};
  if (max_dist > radius + kDiscSlack) {
    nlohmann::ordered_json witness{{"polynomial", dt.to_json()}, {"roots", rs.to_json()}};
    return CheckReport::failed(kId, instance, witness, metrics);
  }
  if (!rs.all_converged) return CheckReport::unconverged(kId, instance, metrics);
  return CheckReport::passed(kId, instance, metrics);
}

nlohmann::ordered_json RootSet::to_json() const {
  nlohmann::ordered_json j;
  j["zero_multiplicity"] = zero_multiplicity;
  j["all_converged"] = all_converged;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : roots) {
    arr.push_back(nlohmann::ordered_json{{"re", r.value.real()},
                                         {"im", r.value.imag()},
                                         {"multiplicity", r.multiplicity},
                                         {"residual", r.residual},
                                         {"converged", r.converged}});
  }
  j["roots"] = arr;
  return j;
}

}  // namespace tdp

#include "tdp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tdp/closed_forms.hpp"
#include "tdp/roots.hpp"
#include "tdp/sturm.hpp"

namespace tdp {

namespace {

using nlohmann::ordered_json;

constexpr double kCircleTol = 1e-8;
constexpr double kMatchTol = 1e-6;

std::string rat_str(const BigRat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// Nonzero real roots counted over (-inf,-eps), (-eps,0), (0,eps), (eps,inf),
// with the zero root deflated exactly for the inner intervals; eps shrinks
// until no endpoint is a root.
struct NonzeroRealCount {
  int total = 0;
  BigRat eps;
  ordered_json intervals;
};

NonzeroRealCount nonzero_real_roots_by_intervals(const Polynomial& p) {
  NonzeroRealCount out;
  BigRat eps(1, 2);
  while (p.eval_rational(-eps) == 0 || p.eval_rational(eps) == 0) eps /= 3;
  Polynomial q = deflate_zero_roots(p);
  int left = count_real_roots(p, std::nullopt, -eps);
  int mid_left = q.degree() >= 1 ? count_real_roots(q, -eps, BigRat(0)) : 0;
  int mid_right = q.degree() >= 1 ? count_real_roots(q, BigRat(0), eps) : 0;
  int right = count_real_roots(p, eps, std::nullopt);
  out.total = left + mid_left + mid_right + right;
  out.eps = eps;
  out.intervals = ordered_json{{"(-inf,-eps)", left},
                               {"(-eps,0)", mid_left},
                               {"(0,eps)", mid_right},
                               {"(eps,inf)", right}};
  return out;
}

ordered_json approx_real_roots(const Polynomial& p) {
  auto arr = ordered_json::array();
  for (const auto& r : find_roots(p).roots)
    if (std::abs(r.value.imag()) < 1e-9 && std::abs(r.value.real()) > 1e-9)
      arr.push_back(ordered_json{{"re", r.value.real()}, {"multiplicity", r.multiplicity}});
  return arr;
}

}  // namespace

CheckReport check_ie_identity(const Graph& g, const std::string& instance,
                              const EnumOptions& opts) {
  static const std::string kId = "ie_identity";
  if (g.order() > 14)
    return CheckReport::skipped(kId, instance, "order exceeds the identity check cap (14)");
  Polynomial direct, identity;
  try {
    direct = total_domination_polynomial(g, opts);
    identity = total_domination_polynomial_ie(g, opts);
  } catch (const CapExceeded& e) {
    return CheckReport::skipped(kId, instance, e.what());
  }
  ordered_json metrics{{"n", g.order()}};
  if (direct == identity) return CheckReport::passed(kId, instance, metrics);
  ordered_json witness{{"direct", direct.to_json()}, {"identity", identity.to_json()}};
  return CheckReport::failed(kId, instance, witness, metrics);
}

CheckReport check_monotone_counts(const Graph& g, const std::string& instance,
                                  const EnumOptions& opts) {
  static const std::string kId = "monotone_counts";
  CountTable t;
  try {
    t = count_total_dominating_sets(g, opts);
  } catch (const CapExceeded& e) {
    return CheckReport::skipped(kId, instance, e.what());
  }
  for (int i = 0; 2 * i < t.n; ++i) {
    if (t.counts[i] > t.counts[i + 1]) {
      ordered_json witness{{"counts", t.to_json()}, {"index", i}};
      return CheckReport::failed(kId, instance, witness, ordered_json{{"n", t.n}});
    }
  }
  return CheckReport::passed(kId, instance, ordered_json{{"n", t.n}});
}

CheckReport check_unimodality(const Polynomial& p, const std::string& instance,
                              bool theorem_level) {
  static const std::string kId = "unimodality";
  if (p.is_zero()) return CheckReport::skipped(kId, instance, "zero polynomial");
  ordered_json metrics{{"theorem_level", theorem_level}};
  UnimodalResult u = p.is_unimodal();
  if (u.unimodal) {
    metrics["mode"] = u.mode;
    return CheckReport::passed(kId, instance, metrics);
  }
  // A counterexample must be reproducible from the witness alone.
  ordered_json witness{{"coefficients", p.to_json()}};
  return CheckReport::failed(kId, instance, witness, metrics);
}

CheckReport check_integer_root_conjecture(const Graph& g, const std::string& instance,
                                          const EnumOptions& opts) {
  static const std::string kId = "integer_roots";
  if (g.order() == 0 || g.has_isolated_vertex())
    return CheckReport::skipped(kId, instance, "zero polynomial (isolated vertex)");
  Polynomial dt;
  try {
    dt = total_domination_polynomial(g, opts);
  } catch (const CapExceeded& e) {
    return CheckReport::skipped(kId, instance, e.what());
  }
  if (dt.is_zero()) return CheckReport::skipped(kId, instance, "zero polynomial");
  int n = g.order(), delta = g.min_degree();
  double radius = disc_bound_radius(g);
  std::vector<long long> roots = integer_roots(dt, radius);
  ordered_json metrics{{"n", n},
                       {"delta", delta},
                       {"radius", radius},
                       {"theorem_level", 3 * delta >= 2 * n},
                       {"integer_roots", roots}};
  bool ok = std::all_of(roots.begin(), roots.end(),
                        [](long long r) { return r >= -3 && r <= 0; });
  if (ok) return CheckReport::passed(kId, instance, metrics);
  ordered_json witness{{"polynomial", dt.to_json()}, {"integer_roots", roots}};
  return CheckReport::failed(kId, instance, witness, metrics);
}

CheckReport check_kn_even_no_real(int n) {
  static const std::string kId = "kn_even_no_real";
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("check_kn_even_no_real: n must be even and >= 2");
  std::string instance = "K_" + std::to_string(n);
  Polynomial p = dt_complete(n);
  NonzeroRealCount c = nonzero_real_roots_by_intervals(p);
  ordered_json metrics{
      {"n", n}, {"nonzero_real_roots", c.total}, {"eps", rat_str(c.eps)}, {"intervals", c.intervals}};
  if (c.total == 0) return CheckReport::passed(kId, instance, metrics);
  ordered_json witness{{"polynomial", p.to_json()},
                       {"nonzero_real_roots", c.total},
                       {"approx_real_roots", approx_real_roots(p)}};
  return CheckReport::failed(kId, instance, witness, metrics);
}

CheckReport check_bn_no_nonzero_real(int n) {
  static const std::string kId = "bn_no_nonzero_real";
  if (n < 2) throw std::invalid_argument("check_bn_no_nonzero_real: n >= 2 required");
  std::string instance = "B_" + std::to_string(n);
  Polynomial p = dt_book(n);
  NonzeroRealCount c = nonzero_real_roots_by_intervals(p);
  ordered_json metrics{
      {"n", n}, {"nonzero_real_roots", c.total}, {"eps", rat_str(c.eps)}, {"intervals", c.intervals}};
  if (c.total == 0) return CheckReport::passed(kId, instance, metrics);
  ordered_json witness{{"polynomial", p.to_json()},
                       {"nonzero_real_roots", c.total},
                       {"approx_real_roots", approx_real_roots(p)}};
  return CheckReport::failed(kId, instance, witness, metrics);
}

CheckReport check_fn_root_interval(int n) {
  static const std::string kId = "fn_root_interval";
  if (n < 2) throw std::invalid_argument("check_fn_root_interval: n >= 2 required");
  std::string instance = "F_" + std::to_string(n);
  Polynomial p = dt_friendship(n);

  // Right endpoint: rational strictly below -ln(n). The 2^-10 margin dwarfs
  // the rounding of std::log, so the subinterval is certainly strict.
  const long long kScale = 1 << 20;
  BigRat b = -(BigRat(static_cast<long long>(std::floor(std::log(n) * kScale)) + 1, kScale) +
               BigRat(1, 1024));
  BigRat a(-n);
  if (a >= b) return CheckReport::skipped(kId, instance, "interval empty at this n");

  int sign_a = 0, sign_b = 0;
  {
    BigRat fa = p.eval_rational(a), fb = p.eval_rational(b);
    sign_a = fa > 0 ? 1 : (fa < 0 ? -1 : 0);
    sign_b = fb > 0 ? 1 : (fb < 0 ? -1 : 0);
  }
  ordered_json metrics{{"n", n},
                       {"interval", ordered_json::array({rat_str(a), rat_str(b)})},
                       {"sign_at_left", sign_a},
                       {"sign_at_right", sign_b}};
  if (sign_a < 0 && sign_b > 0) {
    metrics["certified_by"] = "sign_change";
    return CheckReport::passed(kId, instance, metrics);
  }
  // Sturm fallback; nudge endpoints off roots if needed.
  BigRat a2 = a, b2 = b;
  while (p.eval_rational(a2) == 0) a2 += BigRat(1, 4096);
  while (p.eval_rational(b2) == 0) b2 -= BigRat(1, 4096);
  int count = a2 < b2 ? count_real_roots(p, a2, b2) : 0;
  metrics["sturm_count"] = count;
  if (count >= 1) {
    metrics["certified_by"] = "sturm";
    return CheckReport::passed(kId, instance, metrics);
  }
  return CheckReport::skipped(kId, instance, "no certified root yet (asymptotic statement)");
}

CheckReport check_fn_limit_lemma(int n_min, int n_max) {
  static const std::string kId = "fn_limit_lemma";
  std::string instance =
      "n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
  double max_value = 0;
  int arg_max = n_min;
  for (int n = n_min; n <= n_max; ++n) {
    double v = std::log(n) * std::pow((std::log(n) - 1.0) / n, n);
    if (v > max_value) {
      max_value = v;
      arg_max = n;
    }
  }
  ordered_json metrics{{"max_value", max_value}, {"arg_max", arg_max}, {"bound", 1e-6}};
  if (max_value < 1e-6) return CheckReport::passed(kId, instance, metrics);
  return CheckReport::failed(kId, instance, ordered_json{{"max_value", max_value}}, metrics);
}

CheckReport check_kmn_circle(int m, int n) {
  static const std::string kId = "kmn_circle";
  if (m < 1 || n < 1) throw std::invalid_argument("check_kmn_circle: m,n >= 1 required");
  if (m + n > 60) throw std::invalid_argument("check_kmn_circle: m+n <= 60 required");
  std::string instance = "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";

  Polynomial p = dt_complete_bipartite(m, n);
  RootSet rs = find_roots(p);

  std::vector<std::complex<double>> numeric;
  double max_circle_dev = 0;
  for (const auto& r : rs.roots) {
    max_circle_dev = std::max(max_circle_dev, std::abs(std::abs(r.value + 1.0) - 1.0));
    for (int k = 0; k < r.multiplicity; ++k) numeric.push_back(r.value);
  }

  // {w - 1 : w^m = 1 or w^n = 1, w != 1}; the two w = 1 factors put x = 0 at
  // multiplicity two, which must match the exact deflation.
  std::vector<std::complex<double>> analytic;
  for (int k = 1; k < m; ++k) {
    double t = 2 * std::numbers::pi * k / m;
    analytic.push_back({std::cos(t) - 1.0, std::sin(t)});
  }
  for (int k = 1; k < n; ++k) {
    double t = 2 * std::numbers::pi * k / n;
    analytic.push_back({std::cos(t) - 1.0, std::sin(t)});
  }

  double max_match = 0;
  bool matched = numeric.size() == analytic.size();
  if (matched) {
    std::vector<bool> used(numeric.size(), false);
    for (const auto& a : analytic) {
      int best = -1;
      double best_d = 1e18;
      for (std::size_t i = 0; i < numeric.size(); ++i) {
        if (used[i]) continue;
        double dist = std::abs(numeric[i] - a);
        if (dist < best_d) {
          best_d = dist;
          best = static_cast<int>(i);
        }
      }
      if (best < 0 || best_d > kMatchTol) {
        matched = false;
        break;
      }
      used[best] = true;
      max_match = std::max(max_match, best_d);
    }
  }

  ordered_json metrics{{"m", m},
                       {"n", n},
                       {"zero_multiplicity", rs.zero_multiplicity},
                       {"max_circle_deviation", max_circle_dev},
                       {"max_match_distance", max_match}};
  bool ok = rs.zero_multiplicity == 2 && max_circle_dev <= kCircleTol && matched;
  if (!ok) {
    ordered_json witness{{"roots", rs.to_json()}, {"polynomial", p.to_json()}};
    return CheckReport::failed(kId, instance, witness, metrics);
  }
  if (!rs.all_converged) return CheckReport::unconverged(kId, instance, metrics);
  return CheckReport::passed(kId, instance, metrics);
}

std::vector<CorpusEntry> family_instances(int max_order) {
  std::vector<CorpusEntry> out;
  auto add = [&](Graph g, const std::string& name) {
    if (g.order() <= max_order) out.push_back({std::move(g), name});
  };
  for (int n = 2; n <= max_order; ++n) add(complete(n), "complete:" + std::to_string(n));
  for (int n = 2; n <= max_order; ++n) add(path(n), "path:" + std::to_string(n));
  for (int n = 3; n <= max_order; ++n) add(cycle(n), "cycle:" + std::to_string(n));
  for (int n = 1; n + 1 <= max_order; ++n) add(star(n), "star:" + std::to_string(n));
  for (int n = 1; 2 * n + 1 <= max_order; ++n)
    add(friendship(n), "friendship:" + std::to_string(n));
  for (int n = 1; 2 * n + 2 <= max_order; ++n) add(book(n), "book:" + std::to_string(n));
  for (int m = 1; m <= max_order; ++m)
    for (int n = m; m + n <= max_order; ++n)
      add(complete_bipartite(m, n), "kmn:" + std::to_string(m) + "," + std::to_string(n));
  // Coronas over isolate-free bases.
  for (int k = 2; k <= max_order; ++k)
    for (int m = 1; k * (1 + m) <= max_order; ++m)
      add(corona(path(k), empty_graph(m)),
          "corona(path:" + std::to_string(k) + ",empty:" + std::to_string(m) + ")");
  for (int k = 3; k <= max_order; ++k)
    for (int m = 1; k * (1 + m) <= max_order; ++m)
      add(corona(cycle(k), empty_graph(m)),
          "corona(cycle:" + std::to_string(k) + ",empty:" + std::to_string(m) + ")");
  for (int m = 1; m <= 4; ++m) {
    if (2 * m <= max_order) add(corona(empty_graph(m), complete(1)),
                                "corona(empty:" + std::to_string(m) + ",complete:1)");
    if (3 * m <= max_order) add(corona(empty_graph(m), complete(2)),
                                "corona(empty:" + std::to_string(m) + ",complete:2)");
    if (4 * m <= max_order) add(corona(empty_graph(m), path(3)),
                                "corona(empty:" + std::to_string(m) + ",path:3)");
  }
  add(corona(complete(1), complete(2)), "corona(complete:1,complete:2)");
  add(corona(complete(1), empty_graph(2)), "corona(complete:1,empty:2)");
  return out;
}

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> kNames = {
      "zero_polynomial",     "ie_identity",     "monotone_counts", "unimodality",
      "integer_roots",       "disc_bound",      "kn_even_no_real", "bn_no_nonzero_real",
      "fn_root_interval",    "fn_limit_lemma",  "kmn_circle"};
  return kNames;
}

CampaignConfig CampaignConfig::defaults() {
  CampaignConfig c;
  c.checks = all_check_names();
  return c;
}

namespace {

void require_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) known = true;
    if (!known)
      throw std::invalid_argument("campaign config: unknown key '" + it.key() + "' in " + where);
  }
}

}  // namespace

CampaignConfig CampaignConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("campaign config: expected a JSON object");
  require_keys(j, {"seed", "cap", "checks", "corpus", "ranges"}, "top level");
  CampaignConfig c;
  c.checks.clear();  // an empty config runs nothing
  c.seed = j.value("seed", c.seed);
  c.cap = j.value("cap", c.cap);
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) throw std::invalid_argument("campaign config: checks must be an array");
    for (const auto& e : j["checks"]) {
      std::string name = e.get<std::string>();
      const auto& all = all_check_names();
      if (std::find(all.begin(), all.end(), name) == all.end())
        throw std::invalid_argument("campaign config: unknown check '" + name + "'");
      c.checks.push_back(name);
    }
  }
  if (j.contains("corpus")) {
    const auto& jc = j["corpus"];
    require_keys(jc, {"n_min", "n_max", "per_cell", "edge_probs"}, "corpus");
    c.corpus.n_min = jc.value("n_min", c.corpus.n_min);
    c.corpus.n_max = jc.value("n_max", c.corpus.n_max);
    c.corpus.per_cell = jc.value("per_cell", c.corpus.per_cell);
    if (jc.contains("edge_probs"))
      c.corpus.edge_probs = jc["edge_probs"].get<std::vector<double>>();
    if (c.corpus.n_min < 1 || c.corpus.n_max < c.corpus.n_min || c.corpus.per_cell < 0)
      throw std::invalid_argument("campaign config: bad corpus ranges");
  }
  if (j.contains("ranges")) {
    const auto& jr = j["ranges"];
    require_keys(jr,
                 {"ie_order_cap", "family_order_max", "kn_even_max", "bn_max", "fn_max",
                  "fn_limit_min", "fn_limit_max", "kmn_sum_max", "family_unimodal_max"},
                 "ranges");
    c.ie_order_cap = jr.value("ie_order_cap", c.ie_order_cap);
    c.family_order_max = jr.value("family_order_max", c.family_order_max);
    c.kn_even_max = jr.value("kn_even_max", c.kn_even_max);
    c.bn_max = jr.value("bn_max", c.bn_max);
    c.fn_max = jr.value("fn_max", c.fn_max);
    c.fn_limit_min = jr.value("fn_limit_min", c.fn_limit_min);
    c.fn_limit_max = jr.value("fn_limit_max", c.fn_limit_max);
    c.kmn_sum_max = jr.value("kmn_sum_max", c.kmn_sum_max);
    c.family_unimodal_max = jr.value("family_unimodal_max", c.family_unimodal_max);
  }
  return c;
}

nlohmann::ordered_json CampaignConfig::to_json() const {
  return ordered_json{
      {"seed", seed},
      {"cap", cap},
      {"checks", checks},
      {"corpus",
       ordered_json{{"n_min", corpus.n_min},
                    {"n_max", corpus.n_max},
                    {"per_cell", corpus.per_cell},
                    {"edge_probs", corpus.edge_probs}}},
      {"ranges", ordered_json{{"ie_order_cap", ie_order_cap},
                              {"family_order_max", family_order_max},
                              {"kn_even_max", kn_even_max},
                              {"bn_max", bn_max},
                              {"fn_max", fn_max},
                              {"fn_limit_min", fn_limit_min},
                              {"fn_limit_max", fn_limit_max},
                              {"kmn_sum_max", kmn_sum_max},
                              {"family_unimodal_max", family_unimodal_max}}}};
}

CampaignResult run_campaign(const CampaignConfig& config) {
  for (const auto& name : config.checks) {
    const auto& all = all_check_names();
    if (std::find(all.begin(), all.end(), name) == all.end())
      throw std::invalid_argument("run_campaign: unknown check '" + name + "'");
  }

  EnumOptions opts;
  opts.cap = config.cap;

  CorpusSpec corpus_spec = config.corpus;
  corpus_spec.seed = config.seed;
  std::vector<CorpusEntry> corpus;
  bool corpus_ready = false;
  auto the_corpus = [&]() -> const std::vector<CorpusEntry>& {
    if (!corpus_ready) {
      corpus = generate_corpus(corpus_spec);
      corpus_ready = true;
    }
    return corpus;
  };

  CampaignResult result;
  auto is_theorem_level = [](const CheckReport& r) {
    if (r.check_id == "unimodality" || r.check_id == "integer_roots")
      return r.metrics.value("theorem_level", false);
    if (r.check_id == "fn_root_interval") return false;
    return true;
  };
  auto emit = [&](CheckReport r) {
    if (r.status == CheckReport::Status::fail) {
      ++result.failures;
      if (is_theorem_level(r)) ++result.theorem_failures;
    }
    if (r.status == CheckReport::Status::unconverged) ++result.unconverged;
    result.reports.push_back(std::move(r));
  };

  for (const auto& name : config.checks) {
    if (name == "zero_polynomial") {
      for (const auto& e : the_corpus()) {
        if (!e.graph.has_isolated_vertex()) continue;
        Polynomial dt = total_domination_polynomial(e.graph, opts);
        if (dt.is_zero())
          emit(CheckReport::passed(name, e.name, ordered_json{{"n", e.graph.order()}}));
        else
          emit(CheckReport::failed(name, e.name, ordered_json{{"polynomial", dt.to_json()}}));
      }
    } else if (name == "ie_identity") {
      for (const auto& e : the_corpus())
        if (e.graph.order() <= config.ie_order_cap) emit(check_ie_identity(e.graph, e.name, opts));
      for (const auto& e : family_instances(std::min(config.ie_order_cap, 12)))
        emit(check_ie_identity(e.graph, e.name, opts));
    } else if (name == "monotone_counts") {
      for (const auto& e : the_corpus()) emit(check_monotone_counts(e.graph, e.name, opts));
      for (const auto& e : family_instances(config.family_order_max))
        emit(check_monotone_counts(e.graph, e.name, opts));
    } else if (name == "unimodality") {
      for (int n = 2; n <= config.family_unimodal_max; ++n)
        emit(check_unimodality(dt_complete(n), "dt_complete:" + std::to_string(n), true));
      for (int n = 2; n <= config.family_unimodal_max; ++n)
        emit(check_unimodality(dt_friendship(n), "dt_friendship:" + std::to_string(n), true));
      for (const auto& e : the_corpus())
        emit(check_unimodality(total_domination_polynomial(e.graph, opts), e.name, false));
    } else if (name == "integer_roots") {
      for (const auto& e : the_corpus()) emit(check_integer_root_conjecture(e.graph, e.name, opts));
      for (const auto& e : family_instances(config.family_order_max))
        emit(check_integer_root_conjecture(e.graph, e.name, opts));
    } else if (name == "disc_bound") {
      for (const auto& e : the_corpus()) emit(check_disc_bound(e.graph, e.name, opts));
      for (const auto& e : family_instances(config.family_order_max))
        emit(check_disc_bound(e.graph, e.name, opts));
    } else if (name == "kn_even_no_real") {
      for (int n = 2; n <= config.kn_even_max; n += 2) emit(check_kn_even_no_real(n));
    } else if (name == "bn_no_nonzero_real") {
      for (int n = 2; n <= config.bn_max; ++n) emit(check_bn_no_nonzero_real(n));
    } else if (name == "fn_root_interval") {
      int least = -1;
      bool persists = true;
      for (int n = 2; n <= config.fn_max; ++n) {
        CheckReport r = check_fn_root_interval(n);
        bool certified = r.status == CheckReport::Status::pass;
        if (certified && least < 0) least = n;
        if (!certified && least >= 0) persists = false;
        emit(std::move(r));
      }
      ordered_json metrics{{"least_certified_n", least < 0 ? ordered_json() : ordered_json(least)},
                           {"persists_to", config.fn_max},
                           {"persists", persists}};
      std::string instance = "n=2.." + std::to_string(config.fn_max);
      if (least >= 0 && persists)
        emit(CheckReport::passed("fn_root_interval_summary", instance, metrics));
      else
        emit(CheckReport::failed("fn_root_interval_summary", instance,
                                 ordered_json{{"least_certified_n", least}, {"persists", persists}},
                                 metrics));
    } else if (name == "fn_limit_lemma") {
      emit(check_fn_limit_lemma(config.fn_limit_min, config.fn_limit_max));
    } else if (name == "kmn_circle") {
      for (int m = 1; 2 * m <= config.kmn_sum_max; ++m)
        for (int n = m; m + n <= config.kmn_sum_max; ++n) emit(check_kmn_circle(m, n));
    }
  }
  return result;
}

}  // namespace tdp

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tdp/corpus.hpp"
#include "tdp/enumeration.hpp"
#include "tdp/graph.hpp"
#include "tdp/polynomial.hpp"
#include "tdp/report.hpp"

namespace tdp {

// Both computation paths for D_t must agree coefficient-exactly.
CheckReport check_ie_identity(const Graph& g, const std::string& instance,
                              const EnumOptions& opts = {});

// d_t(G,i) <= d_t(G,i+1) for all i < n/2.
CheckReport check_monotone_counts(const Graph& g, const std::string& instance,
                                  const EnumOptions& opts = {});

// Coefficient sequence rises then falls; failures are conjecture
// counterexamples and keep the full coefficient list as witness.
CheckReport check_unimodality(const Polynomial& p, const std::string& instance,
                              bool theorem_level = false);

// Integer roots within the disc-bound radius must lie in {-3,-2,-1,0};
// theorem-level when 3*delta >= 2n, conjecture-level otherwise.
CheckReport check_integer_root_conjecture(const Graph& g, const std::string& instance,
                                          const EnumOptions& opts = {});

// Exact count of nonzero real roots of D_t(K_n), n even, must be zero.
CheckReport check_kn_even_no_real(int n);

// Exact count of nonzero real roots of D_t(B_n).
CheckReport check_bn_no_nonzero_real(int n);

// Certified real root of D_t(F_n) inside (-n, -ln n): exact signs at rational
// endpoints first, Sturm count on a strict rational subinterval as fallback.
// Small n where the asymptotic condition has not kicked in report "skipped"
// with the observed signs.
CheckReport check_fn_root_interval(int n);

// ln(n) ((ln n - 1)/n)^n < 1e-6 over [n_min, n_max].
CheckReport check_fn_limit_lemma(int n_min, int n_max);

// Every nonzero root of D_t(K_{m,n}) on the unit circle about -1 (1e-8), and
// the numeric multiset matches {w-1 : w^m=1 or w^n=1, w != 1} within 1e-6.
CheckReport check_kmn_circle(int m, int n);

// Deterministic family fixtures of order <= max_order (the labeled
// constructions; coronas built from isolate-free bases).
std::vector<CorpusEntry> family_instances(int max_order);

struct CampaignConfig {
  std::uint64_t seed = 42;
  int cap = kDefaultEnumerationCap;
  std::vector<std::string> checks;  // empty from the default ctor = all checks
  CorpusSpec corpus;

  int ie_order_cap = 14;
  int family_order_max = 14;
  int kn_even_max = 20;
  int bn_max = 30;
  int fn_max = 100;
  int fn_limit_min = 20;
  int fn_limit_max = 200;
  int kmn_sum_max = 40;
  int family_unimodal_max = 50;

  static CampaignConfig defaults();
  static CampaignConfig from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& all_check_names();

struct CampaignResult {
  std::vector<CheckReport> reports;
  int failures = 0;
  int theorem_failures = 0;
  int unconverged = 0;
};

// Runs the configured checks in fixed order; deterministic given the seed.
CampaignResult run_campaign(const CampaignConfig& config);

}  // namespace tdp

#include <doctest.h>

#include "tdp/closed_forms.hpp"
#include "tdp/corpus.hpp"
#include "tdp/sturm.hpp"
#include "tdp/verify.hpp"

using namespace tdp;

namespace {

Polynomial P(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> c;
  for (long long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("identity check") {
  CHECK(check_ie_identity(path(2), "P_2").status == CheckReport::Status::pass);
  CHECK(check_ie_identity(friendship(3), "F_3").status == CheckReport::Status::pass);
  CHECK(check_ie_identity(random_graph(10, 0.5, 3), "G(10,.5)").status ==
        CheckReport::Status::pass);
  CHECK(check_ie_identity(random_graph(16, 0.5, 3), "G(16,.5)").status ==
        CheckReport::Status::skipped);
}

TEST_CASE("monotone counts check") {
  CHECK(check_monotone_counts(complete(6), "K_6").status == CheckReport::Status::pass);
  CHECK(check_monotone_counts(star(5), "K_{1,5}").status == CheckReport::Status::pass);
  for (std::uint64_t s = 0; s < 10; ++s)
    CHECK(check_monotone_counts(random_graph(9, 0.4, s), "corpus").status ==
          CheckReport::Status::pass);
}

TEST_CASE("unimodality check") {
  CHECK(check_unimodality(dt_complete(5), "K_5").status == CheckReport::Status::pass);
  CHECK(check_unimodality(Polynomial(), "zero").status == CheckReport::Status::skipped);
  CheckReport bad = check_unimodality(P({1, 0, 1}), "dip");
  CHECK(bad.status == CheckReport::Status::fail);
  REQUIRE(bad.witness.contains("coefficients"));
  CHECK(bad.witness["coefficients"].size() == 3);
  CHECK(check_unimodality(dt_complete(5), "K_5", true).metrics["theorem_level"] == true);
}

TEST_CASE("integer root conjecture check") {
  CheckReport k3 = check_integer_root_conjecture(complete(3), "K_3");
  CHECK(k3.status == CheckReport::Status::pass);
  CHECK(k3.metrics["integer_roots"] == nlohmann::ordered_json::array({-3, 0}));
  CHECK(k3.metrics["theorem_level"] == true);

  CheckReport c4 = check_integer_root_conjecture(cycle(4), "C_4");
  CHECK(c4.status == CheckReport::Status::pass);
  CHECK(c4.metrics["integer_roots"] == nlohmann::ordered_json::array({-2, 0}));

  CHECK(check_integer_root_conjecture(empty_graph(3), "empty").status ==
        CheckReport::Status::skipped);
}

TEST_CASE("no nonzero real roots of even complete graphs") {
  for (int n = 2; n <= 10; n += 2) {
    CheckReport r = check_kn_even_no_real(n);
    CHECK(r.status == CheckReport::Status::pass);
    CHECK(r.metrics["nonzero_real_roots"] == 0);
  }
  CHECK_THROWS_AS(check_kn_even_no_real(3), std::invalid_argument);
}

TEST_CASE("book polynomials do have nonzero real roots") {
  // The source claim fails on the actual family: the polynomial is the
  // square of x(x+1)^n + x^n, whose real branch crosses zero.
  CheckReport b2 = check_bn_no_nonzero_real(2);
  CHECK(b2.status == CheckReport::Status::fail);
  CHECK(b2.metrics["nonzero_real_roots"] == 2);
  REQUIRE(b2.witness.contains("approx_real_roots"));
  auto roots = b2.witness["approx_real_roots"];
  REQUIRE(roots.size() == 2);
  // (-3 - sqrt 5)/2 and (-3 + sqrt 5)/2
  CHECK(roots[0]["re"].get<double>() == doctest::Approx(-2.618033988749895).epsilon(1e-9));
  CHECK(roots[1]["re"].get<double>() == doctest::Approx(-0.381966011250105).epsilon(1e-9));

  CHECK(check_bn_no_nonzero_real(3).metrics["nonzero_real_roots"] == 1);
  CHECK(check_bn_no_nonzero_real(4).metrics["nonzero_real_roots"] == 2);

  // the interval recipe agrees with the deflated full-line count
  for (int n = 2; n <= 8; ++n) {
    int direct = count_nonzero_real_roots(dt_book(n));
    CHECK(check_bn_no_nonzero_real(n).metrics["nonzero_real_roots"].get<int>() == direct);
  }
}

TEST_CASE("friendship interval check") {
  CHECK(check_fn_root_interval(2).status == CheckReport::Status::skipped);
  CHECK(check_fn_root_interval(8).status == CheckReport::Status::skipped);
  CheckReport n9 = check_fn_root_interval(9);
  CHECK(n9.status == CheckReport::Status::pass);
  CHECK(n9.metrics["certified_by"] == "sign_change");
  CHECK(check_fn_root_interval(50).status == CheckReport::Status::pass);
}

TEST_CASE("limit lemma evidence") {
  CheckReport r = check_fn_limit_lemma(20, 200);
  CHECK(r.status == CheckReport::Status::pass);
  CHECK(r.metrics["max_value"].get<double>() < 1e-6);
}

TEST_CASE("complete bipartite circle check") {
  CHECK(check_kmn_circle(1, 1).status == CheckReport::Status::pass);
  CheckReport k22 = check_kmn_circle(2, 2);
  CHECK(k22.status == CheckReport::Status::pass);
  CHECK(k22.metrics["zero_multiplicity"] == 2);
  CHECK(check_kmn_circle(3, 4).status == CheckReport::Status::pass);
  CHECK(check_kmn_circle(6, 9).status == CheckReport::Status::pass);
  CHECK_THROWS_AS(check_kmn_circle(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_kmn_circle(30, 31), std::invalid_argument);
}

TEST_CASE("reports") {
  CHECK_THROWS_AS(
      CheckReport::failed("x", "inst", nlohmann::ordered_json()),
      std::invalid_argument);
  auto j = CheckReport::passed("a", "b", {{"k", 1}}).to_json();
  CHECK(j["check_id"] == "a");
  CHECK(j["status"] == "pass");
  CHECK(j["witness"].is_null());
  CHECK(j["metrics"]["k"] == 1);
}

TEST_CASE("campaign configuration") {
  CHECK_THROWS_AS(CampaignConfig::from_json(nlohmann::json::parse(R"({"bogus": 1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(CampaignConfig::from_json(nlohmann::json::parse(R"({"checks": ["nope"]})")),
                  std::invalid_argument);
  CampaignConfig c = CampaignConfig::from_json(nlohmann::json::parse(
      R"({"seed": 7, "checks": ["kn_even_no_real"], "ranges": {"kn_even_max": 6}})"));
  CHECK(c.seed == 7);
  CHECK(c.checks == std::vector<std::string>{"kn_even_no_real"});
  CHECK(c.kn_even_max == 6);

  // an empty config runs nothing
  CampaignConfig empty = CampaignConfig::from_json(nlohmann::json::parse("{}"));
  CHECK(run_campaign(empty).reports.empty());

  CampaignConfig unknown;
  unknown.checks = {"definitely_not_a_check"};
  CHECK_THROWS_AS(run_campaign(unknown), std::invalid_argument);
}

TEST_CASE("campaign determinism and aggregation") {
  CampaignConfig c = CampaignConfig::defaults();
  c.corpus.n_min = 4;
  c.corpus.n_max = 6;
  c.corpus.per_cell = 4;
  c.family_order_max = 8;
  c.family_unimodal_max = 10;
  c.kn_even_max = 6;
  c.bn_max = 3;
  c.fn_max = 12;
  c.kmn_sum_max = 8;
  c.ie_order_cap = 6;

  CampaignResult r1 = run_campaign(c);
  CampaignResult r2 = run_campaign(c);
  REQUIRE(r1.reports.size() == r2.reports.size());
  std::string s1, s2;
  for (const auto& r : r1.reports) s1 += r.to_json().dump() + "\n";
  for (const auto& r : r2.reports) s2 += r.to_json().dump() + "\n";
  CHECK(s1 == s2);

  // the only failures in this mini campaign are the book-family instances
  // (paper defect) and they are theorem-level
  CHECK(r1.failures == r1.theorem_failures);
  CHECK(r1.theorem_failures == 2);  // B_2, B_3
  CHECK(r1.unconverged == 0);

  int fn_summaries = 0;
  for (const auto& rep : r1.reports)
    if (rep.check_id == "fn_root_interval_summary") {
      ++fn_summaries;
      CHECK(rep.status == CheckReport::Status::pass);
      CHECK(rep.metrics["least_certified_n"] == 9);
    }
  CHECK(fn_summaries == 1);
}

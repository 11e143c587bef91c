#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdp/closed_forms.hpp"
#include "tdp/enumeration.hpp"
#include "tdp/graph.hpp"
#include "tdp/polynomial.hpp"
#include "tdp/roots.hpp"
#include "tdp/sturm.hpp"
#include "tdp/sweep.hpp"
#include "tdp/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file: " + out_path);
  os << text;
}

ordered_json poly_summary(const std::string& input, const tdp::Polynomial& p) {
  ordered_json j;
  j["input"] = input;
  j["coefficients"] = p.to_json();
  if (p.is_zero()) {
    j["gamma_t"] = nullptr;
    j["total_count"] = "0";
    j["unimodal"] = nullptr;
    j["mode"] = nullptr;
  } else {
    j["gamma_t"] = p.lowest_degree();
    j["total_count"] = p.eval_int(1).str();
    auto u = p.is_unimodal();
    j["unimodal"] = u.unimodal;
    j["mode"] = u.unimodal ? ordered_json(u.mode) : ordered_json(nullptr);
  }
  return j;
}

std::string poly_table(const std::string& input, const tdp::Polynomial& p) {
  std::ostringstream os;
  os << "input: " << input << "\n";
  if (p.is_zero()) {
    os << "no total dominating set exists (zero polynomial)\n";
    return os.str();
  }
  os << "  i  d_t(G,i)\n";
  for (int i = 0; i <= p.degree(); ++i)
    os << std::setw(3) << i << "  " << p.coeff(i).str() << "\n";
  os << "gamma_t: " << p.lowest_degree() << "\n";
  os << "total dominating sets: " << p.eval_int(1).str() << "\n";
  auto u = p.is_unimodal();
  if (u.unimodal)
    os << "unimodal: yes (mode " << u.mode << ")\n";
  else
    os << "unimodal: no\n";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"total domination polynomials: exact coefficients, roots, theorem checks"};
  app.require_subcommand(1);

  std::string input, out_path, format, svg_path, config_path, family, range;
  int cap = tdp::kDefaultEnumerationCap;
  bool check_disc = false;
  std::optional<std::uint64_t> seed;

  auto add_cap = [&cap](CLI::App* cmd) {
    cmd->add_option("--cap", cap, "enumeration cap (vertices)")
        ->envname("TDPOLY_CAP")
        ->capture_default_str();
  };

  CLI::App* poly = app.add_subcommand(
      "poly", "coefficients, gamma_t, set count and unimodality of D_t");
  poly->add_option("input", input,
                   "family spec (complete:N, path:N, cycle:N, star:N, empty:N, friendship:N, "
                   "book:N, kmn:M,N, corona-empty:N,M) or edge-list file")
      ->required();
  poly->add_option("--format", format, "json|table")->default_val("json");
  poly->add_option("--out", out_path, "write to file instead of stdout");
  add_cap(poly);

  CLI::App* roots = app.add_subcommand("roots", "complex roots of D_t with multiplicities");
  roots->add_option("input", input, "family spec or edge-list file")->required();
  roots->add_option("--format", format, "json|csv")->default_val("json");
  roots->add_option("--out", out_path, "write to file instead of stdout");
  roots->add_flag("--check-disc", check_disc, "verify the |z+1| root disc bound");
  add_cap(roots);

  CLI::App* sweep = app.add_subcommand("sweep", "root loci across a family range (CSV/SVG)");
  sweep->add_option("family", family, "complete|friendship|book|kmn")->required();
  sweep->add_option("range", range, "A..B (kmn: range of m+n)")->required();
  sweep->add_option("--out", out_path, "CSV output path (default stdout)");
  sweep->add_option("--svg", svg_path, "also write an SVG scatter");
  add_cap(sweep);

  CLI::App* check = app.add_subcommand("check", "run a verification campaign (JSON-lines report)");
  check->add_option("config", config_path, "campaign config JSON (omit for the full default run)");
  check->add_option("--out", out_path, "report path (default stdout)");
  check->add_option("--seed", seed, "override the corpus seed");
  add_cap(check);

  CLI11_PARSE(app, argc, argv);
  tdp::EnumOptions opts;
  opts.cap = cap;

  if (poly->parsed()) {
    if (format != "json" && format != "table")
      throw std::invalid_argument("poly: --format must be json or table");
    tdp::ResolvedInput in = tdp::resolve_input(input, opts);
    emit(out_path, format == "json" ? poly_summary(input, in.poly).dump(2) + "\n"
                                    : poly_table(input, in.poly));
    return 0;
  }

  if (roots->parsed()) {
    if (format != "json" && format != "csv")
      throw std::invalid_argument("roots: --format must be json or csv");
    tdp::ResolvedInput in = tdp::resolve_input(input, opts);
    if (in.poly.is_zero() || in.poly.degree() < 1)
      throw std::invalid_argument("roots: D_t has no roots to locate (degree < 1)");
    tdp::RootSet rs = tdp::find_roots(in.poly);

    int exit_code = 0;
    ordered_json disc;
    if (check_disc) {
      if (!in.graph) throw std::invalid_argument("roots: --check-disc needs a graph input");
      double radius = tdp::disc_bound_radius(*in.graph);
      double max_dist = 0;
      for (const auto& r : rs.roots)
        if (r.converged) max_dist = std::max(max_dist, std::abs(r.value + 1.0));
      bool pass = max_dist <= radius + 1e-6;
      disc = ordered_json{{"radius", radius}, {"max_abs_z_plus_1", max_dist}, {"pass", pass}};
      if (!pass) exit_code = kExitChecksFailed;
    }

    if (format == "csv") {
      std::vector<tdp::SweepPoint> pts;
      if (rs.zero_multiplicity > 0) pts.push_back({input, 0, 0, rs.zero_multiplicity, 0});
      for (const auto& r : rs.roots)
        pts.push_back({input, r.value.real(), r.value.imag(), r.multiplicity, r.residual});
      std::ostringstream os;
      tdp::write_sweep_csv(os, pts);
      emit(out_path, os.str());
      if (check_disc) std::cerr << "disc check: " << disc.dump() << "\n";
    } else {
      ordered_json j;
      j["input"] = input;
      j["polynomial"] = in.poly.to_json();
      j["roots"] = rs.to_json();
      if (check_disc) j["disc_check"] = disc;
      emit(out_path, j.dump(2) + "\n");
    }
    return exit_code;
  }

  if (sweep->parsed()) {
    auto dots = range.find("..");
    if (dots == std::string::npos)
      throw std::invalid_argument("sweep: range must look like A..B");
    int lo = std::stoi(range.substr(0, dots));
    int hi = std::stoi(range.substr(dots + 2));
    auto points = tdp::sweep_family(family, lo, hi, opts);
    std::ostringstream os;
    tdp::write_sweep_csv(os, points);
    emit(out_path, os.str());
    if (!svg_path.empty()) {
      std::ofstream svg(svg_path, std::ios::binary);
      if (!svg) throw std::invalid_argument("cannot open SVG output: " + svg_path);
      tdp::write_sweep_svg(svg, points);
    }
    return 0;
  }

  // check
  tdp::CampaignConfig config = tdp::CampaignConfig::defaults();
  if (!config_path.empty()) {
    std::ifstream is(config_path);
    if (!is) throw std::invalid_argument("cannot open config: " + config_path);
    nlohmann::json j;
    try {
      is >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    config = tdp::CampaignConfig::from_json(j);
  }
  if (seed) config.seed = *seed;
  config.cap = cap;

  tdp::CampaignResult result = tdp::run_campaign(config);
  std::ostringstream report;
  for (const auto& r : result.reports) report << r.to_json().dump() << "\n";
  emit(out_path, report.str());
  std::cerr << "campaign: " << result.reports.size() << " reports, " << result.failures
            << " failures (" << result.theorem_failures << " theorem-level), "
            << result.unconverged << " unconverged\n";
  return result.theorem_failures > 0 ? kExitChecksFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tdp::CapExceeded& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::overflow_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

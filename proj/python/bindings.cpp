#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tdp/closed_forms.hpp"
#include "tdp/corpus.hpp"
#include "tdp/enumeration.hpp"
#include "tdp/graph.hpp"
#include "tdp/polynomial.hpp"
#include "tdp/roots.hpp"
#include "tdp/sturm.hpp"
#include "tdp/sweep.hpp"
#include "tdp/verify.hpp"

namespace py = pybind11;

namespace {

py::object big_to_py(const tdp::BigInt& v) {
  std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

tdp::BigInt py_to_big(py::handle h) {
  return tdp::BigInt(py::str(h).cast<std::string>());
}

tdp::BigRat rational_from(py::handle h) {
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return tdp::BigRat(py_to_big(h.attr("numerator")), py_to_big(h.attr("denominator")));
  if (py::isinstance<py::str>(h)) return tdp::BigRat(h.cast<std::string>());
  throw py::type_error("expected an int, Fraction, or 'p/q' string");
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  namespace nl = nlohmann;
  switch (j.type()) {
    case nl::detail::value_t::null: return py::none();
    case nl::detail::value_t::boolean: return py::bool_(j.get<bool>());
    case nl::detail::value_t::number_integer: return py::int_(j.get<long long>());
    case nl::detail::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nl::detail::value_t::number_float: return py::float_(j.get<double>());
    case nl::detail::value_t::string: return py::str(j.get<std::string>());
    case nl::detail::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case nl::detail::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

tdp::EnumOptions make_opts(int cap, int threads) {
  tdp::EnumOptions o;
  o.cap = cap;
  o.threads = threads;
  return o;
}

py::list big_list(const std::vector<tdp::BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(big_to_py(x));
  return out;
}

tdp::VertexSet vertex_set(const tdp::Graph& g, const std::vector<int>& vs) {
  return tdp::Bitset::from_vertices(g.order(), vs);
}

py::dict report_to_py(const tdp::CheckReport& r) { return json_to_py(r.to_json()); }

}  // namespace

PYBIND11_MODULE(_tdpoly, m) {
  m.doc() = "Exact total domination polynomials: enumeration, closed forms, roots, checks";

  py::register_exception<tdp::CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<tdp::Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def_property_readonly("n", &tdp::Graph::order)
      .def("order", &tdp::Graph::order)
      .def("degree", &tdp::Graph::degree, py::arg("v"))
      .def("min_degree", &tdp::Graph::min_degree)
      .def("edge_count", &tdp::Graph::edge_count)
      .def("has_edge", &tdp::Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("has_isolated_vertex", &tdp::Graph::has_isolated_vertex)
      .def(
          "neighbors",
          [](const tdp::Graph& g, int v) { return g.neighbors(v).to_vertices(); },
          py::arg("v"))
      .def("__eq__", [](const tdp::Graph& a, const tdp::Graph& b) { return a == b; })
      .def("__repr__", [](const tdp::Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("from_edge_list", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return tdp::Graph::from_edge_list(n, edges);
  });
  m.def("load_edge_list", &tdp::load_edge_list, py::arg("path"));
  m.def("parse_edge_list", [](const std::string& text) {
    std::istringstream is(text);
    return tdp::parse_edge_list(is);
  });

  m.def("complete", &tdp::complete);
  m.def("path", &tdp::path);
  m.def("cycle", &tdp::cycle);
  m.def("star", &tdp::star);
  m.def("empty_graph", &tdp::empty_graph);
  m.def("friendship", &tdp::friendship);
  m.def("book", &tdp::book);
  m.def("complete_bipartite", &tdp::complete_bipartite);
  m.def("corona", &tdp::corona);
  m.def("join", &tdp::join);
  m.def("random_graph", &tdp::random_graph, py::arg("n"), py::arg("p"), py::arg("seed"));

  m.def("open_neighborhood", [](const tdp::Graph& g, const std::vector<int>& s) {
    return tdp::open_neighborhood(g, vertex_set(g, s)).to_vertices();
  });
  m.def("is_total_dominating", [](const tdp::Graph& g, const std::vector<int>& d) {
    return tdp::is_total_dominating(g, vertex_set(g, d));
  });

  py::class_<tdp::Polynomial>(m, "Polynomial")
      .def(py::init([](const std::vector<py::object>& coeffs) {
             std::vector<tdp::BigInt> c;
             for (const auto& e : coeffs) c.push_back(py_to_big(e));
             return tdp::Polynomial(std::move(c));
           }),
           py::arg("coefficients"))
      .def("is_zero", &tdp::Polynomial::is_zero)
      .def("degree", &tdp::Polynomial::degree)
      .def("lowest_degree", &tdp::Polynomial::lowest_degree)
      .def("coefficients", [](const tdp::Polynomial& p) { return big_list(p.coeffs()); })
      .def("coefficient",
           [](const tdp::Polynomial& p, int i) { return big_to_py(p.coeff(i)); })
      .def("derivative", &tdp::Polynomial::derivative)
      .def("eval", [](const tdp::Polynomial& p, py::int_ z) {
        return big_to_py(p.eval_int(py_to_big(z)));
      })
      .def("eval_complex", &tdp::Polynomial::eval_complex)
      .def("is_unimodal",
           [](const tdp::Polynomial& p) {
             auto u = p.is_unimodal();
             return py::make_tuple(u.unimodal, u.mode);
           })
      .def("__add__", [](const tdp::Polynomial& a, const tdp::Polynomial& b) { return a + b; })
      .def("__sub__", [](const tdp::Polynomial& a, const tdp::Polynomial& b) { return a - b; })
      .def("__mul__", [](const tdp::Polynomial& a, const tdp::Polynomial& b) { return a * b; })
      .def("__pow__", [](const tdp::Polynomial& p, unsigned k) { return tdp::pow(p, k); })
      .def("__eq__", [](const tdp::Polynomial& a, const tdp::Polynomial& b) { return a == b; })
      .def("__repr__", [](const tdp::Polynomial& p) { return p.to_string(); })
      .def("to_json", [](const tdp::Polynomial& p) { return p.to_json().dump(); });

  m.def("binomial", [](unsigned n, unsigned k) { return big_to_py(tdp::binomial(n, k)); });
  m.def("binomial_shift", &tdp::Polynomial::binomial_shift, py::arg("k"));

  m.def(
      "count_total_dominating_sets",
      [](const tdp::Graph& g, int cap, int threads) {
        return big_list(tdp::count_total_dominating_sets(g, make_opts(cap, threads)).counts);
      },
      py::arg("g"), py::arg("cap") = tdp::kDefaultEnumerationCap, py::arg("threads") = 0);
  m.def(
      "total_domination_polynomial",
      [](const tdp::Graph& g, int cap, int threads) {
        return tdp::total_domination_polynomial(g, make_opts(cap, threads));
      },
      py::arg("g"), py::arg("cap") = tdp::kDefaultEnumerationCap, py::arg("threads") = 0);
  m.def(
      "total_domination_polynomial_ie",
      [](const tdp::Graph& g, int cap, int threads) {
        return tdp::total_domination_polynomial_ie(g, make_opts(cap, threads));
      },
      py::arg("g"), py::arg("cap") = tdp::kDefaultEnumerationCap, py::arg("threads") = 0);
  m.def(
      "total_domination_number",
      [](const tdp::Graph& g, int cap, int threads) -> py::object {
        auto v = tdp::total_domination_number(g, make_opts(cap, threads));
        return v ? py::int_(*v) : py::object(py::none());
      },
      py::arg("g"), py::arg("cap") = tdp::kDefaultEnumerationCap, py::arg("threads") = 0);

  m.def("dt_complete", &tdp::dt_complete);
  m.def("dt_friendship", &tdp::dt_friendship);
  m.def("dt_book", &tdp::dt_book);
  m.def("dt_complete_bipartite", &tdp::dt_complete_bipartite);
  m.def("dt_corona_empty", &tdp::dt_corona_empty, py::arg("n_g"), py::arg("m"));
  m.def(
      "dt_k1_corona",
      [](const tdp::Graph& h, int cap) { return tdp::dt_k1_corona(h, make_opts(cap, 0)); },
      py::arg("h"), py::arg("cap") = tdp::kDefaultEnumerationCap);
  m.def(
      "dt_empty_corona",
      [](const tdp::Graph& h, int m, int cap) {
        return tdp::dt_empty_corona(h, m, make_opts(cap, 0));
      },
      py::arg("h"), py::arg("m"), py::arg("cap") = tdp::kDefaultEnumerationCap);

  m.def("find_roots", [](const tdp::Polynomial& p) { return json_to_py(tdp::find_roots(p).to_json()); });
  m.def("integer_roots", &tdp::integer_roots, py::arg("p"), py::arg("radius"));
  m.def(
      "count_real_roots",
      [](const tdp::Polynomial& p, py::object a, py::object b) {
        std::optional<tdp::BigRat> lo, hi;
        if (!a.is_none()) lo = rational_from(a);
        if (!b.is_none()) hi = rational_from(b);
        return tdp::count_real_roots(p, lo, hi);
      },
      py::arg("p"), py::arg("a") = py::none(), py::arg("b") = py::none());
  m.def("count_nonzero_real_roots", &tdp::count_nonzero_real_roots);
  m.def("square_free_part", &tdp::square_free_part);
  m.def("deflate_zero_roots", &tdp::deflate_zero_roots);
  m.def("disc_bound_radius", &tdp::disc_bound_radius);

  m.def(
      "check_disc_bound",
      [](const tdp::Graph& g, const std::string& instance, int cap) {
        return report_to_py(tdp::check_disc_bound(g, instance, make_opts(cap, 0)));
      },
      py::arg("g"), py::arg("instance") = "graph", py::arg("cap") = tdp::kDefaultEnumerationCap);
  m.def(
      "check_ie_identity",
      [](const tdp::Graph& g, const std::string& instance, int cap) {
        return report_to_py(tdp::check_ie_identity(g, instance, make_opts(cap, 0)));
      },
      py::arg("g"), py::arg("instance") = "graph", py::arg("cap") = tdp::kDefaultEnumerationCap);
  m.def(
      "check_monotone_counts",
      [](const tdp::Graph& g, const std::string& instance, int cap) {
        return report_to_py(tdp::check_monotone_counts(g, instance, make_opts(cap, 0)));
      },
      py::arg("g"), py::arg("instance") = "graph", py::arg("cap") = tdp::kDefaultEnumerationCap);
  m.def(
      "check_unimodality",
      [](const tdp::Polynomial& p, const std::string& instance) {
        return report_to_py(tdp::check_unimodality(p, instance));
      },
      py::arg("p"), py::arg("instance") = "polynomial");
  m.def(
      "check_integer_root_conjecture",
      [](const tdp::Graph& g, const std::string& instance, int cap) {
        return report_to_py(tdp::check_integer_root_conjecture(g, instance, make_opts(cap, 0)));
      },
      py::arg("g"), py::arg("instance") = "graph", py::arg("cap") = tdp::kDefaultEnumerationCap);
  m.def("check_kn_even_no_real",
        [](int n) { return report_to_py(tdp::check_kn_even_no_real(n)); });
  m.def("check_bn_no_nonzero_real",
        [](int n) { return report_to_py(tdp::check_bn_no_nonzero_real(n)); });
  m.def("check_fn_root_interval",
        [](int n) { return report_to_py(tdp::check_fn_root_interval(n)); });
  m.def("check_kmn_circle",
        [](int m, int n) { return report_to_py(tdp::check_kmn_circle(m, n)); });

  m.def(
      "run_campaign",
      [](py::object config) {
        tdp::CampaignConfig c = tdp::CampaignConfig::defaults();
        if (!config.is_none()) {
          std::string text;
          if (py::isinstance<py::str>(config))
            text = config.cast<std::string>();
          else
            text = py::module_::import("json").attr("dumps")(config).cast<std::string>();
          c = tdp::CampaignConfig::from_json(nlohmann::json::parse(text));
        }
        tdp::CampaignResult r = tdp::run_campaign(c);
        py::list reports;
        for (const auto& rep : r.reports) reports.append(report_to_py(rep));
        py::dict out;
        out["reports"] = reports;
        out["failures"] = r.failures;
        out["theorem_failures"] = r.theorem_failures;
        out["unconverged"] = r.unconverged;
        return out;
      },
      py::arg("config") = py::none());

  m.def(
      "sweep_family",
      [](const std::string& family, int lo, int hi, int cap) {
        py::list out;
        for (const auto& p : tdp::sweep_family(family, lo, hi, make_opts(cap, 0))) {
          py::dict d;
          d["param"] = p.param;
          d["re"] = p.re;
          d["im"] = p.im;
          d["multiplicity"] = p.multiplicity;
          d["residual"] = p.residual;
          out.append(d);
        }
        return out;
      },
      py::arg("family"), py::arg("lo"), py::arg("hi"),
      py::arg("cap") = tdp::kDefaultEnumerationCap);
  m.def(
      "sweep_csv",
      [](const std::string& family, int lo, int hi, int cap) {
        std::ostringstream os;
        tdp::write_sweep_csv(os, tdp::sweep_family(family, lo, hi, make_opts(cap, 0)));
        return os.str();
      },
      py::arg("family"), py::arg("lo"), py::arg("hi"),
      py::arg("cap") = tdp::kDefaultEnumerationCap);
  m.def(
      "sweep_svg",
      [](const std::string& family, int lo, int hi, int cap) {
        std::ostringstream os;
        tdp::write_sweep_svg(os, tdp::sweep_family(family, lo, hi, make_opts(cap, 0)));
        return os.str();
      },
      py::arg("family"), py::arg("lo"), py::arg("hi"),
      py::arg("cap") = tdp::kDefaultEnumerationCap);

  m.attr("DEFAULT_ENUMERATION_CAP") = tdp::kDefaultEnumerationCap;
  m.attr("__version__") = "0.1.0";
}

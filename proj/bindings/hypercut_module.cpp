#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "hypercut/cheeger.hpp"
#include "hypercut/generator.hpp"
#include "hypercut/graph_oracle.hpp"
#include "hypercut/hypergraph.hpp"
#include "hypercut/io.hpp"
#include "hypercut/spectral.hpp"

namespace py = pybind11;
using namespace hypercut;

namespace {

OrientedHypergraph build_signed(int n, const std::vector<std::vector<std::pair<int, int>>>& edges) {
  std::vector<Edge> converted;
  converted.reserve(edges.size());
  for (const auto& edge : edges) {
    Edge e;
    e.reserve(edge.size());
    for (const auto& [vertex, sign] : edge) e.push_back({vertex, sign});
    converted.push_back(std::move(e));
  }
  return OrientedHypergraph(n, std::move(converted));
}

std::vector<std::vector<std::pair<int, int>>> edges_out(const OrientedHypergraph& g) {
  std::vector<std::vector<std::pair<int, int>>> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    std::vector<std::pair<int, int>> out;
    out.reserve(e.size());
    for (const Incidence& inc : e) out.push_back({inc.vertex, inc.sign});
    edges.push_back(std::move(out));
  }
  return edges;
}

ClassicalView as_classical(const OrientedHypergraph& g) { return ClassicalView(g); }

}  // namespace

PYBIND11_MODULE(_hypercut, m) {
  m.doc() = "Normalized-Laplacian spectra and Cheeger cuts for uniform hypergraphs";

  static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error_type((std::string(e.name()) + ": " + e.what()).c_str());
    }
  });

  py::class_<OrientedHypergraph>(m, "OrientedHypergraph")
      .def(py::init(&build_signed), py::arg("n"), py::arg("edges"),
           "Build from signed incidence lists [(vertex, sign), ...] per edge.")
      .def_static(
          "classical",
          [](int n, const std::vector<std::vector<int>>& edges) {
            return OrientedHypergraph::classical(n, edges);
          },
          py::arg("n"), py::arg("edges"), "Build all-positive edges from vertex lists.")
      .def_property_readonly("n", &OrientedHypergraph::vertex_count)
      .def_property_readonly("m", &OrientedHypergraph::edge_count)
      .def("edges", &edges_out)
      .def("degrees", &OrientedHypergraph::degrees)
      .def("volume", &OrientedHypergraph::volume)
      .def("is_classical", &OrientedHypergraph::all_signs_positive)
      .def("uniformity", &OrientedHypergraph::uniformity)
      .def("regularity", &OrientedHypergraph::regularity)
      .def("connected_components", &OrientedHypergraph::connected_components)
      .def("is_connected", &OrientedHypergraph::connected)
      .def("degree_assumption_holds", &OrientedHypergraph::degree_assumption_holds)
      .def("positivized", &OrientedHypergraph::positivized)
      .def("__eq__", [](const OrientedHypergraph& a, const OrientedHypergraph& b) { return a == b; })
      .def("__repr__", [](const OrientedHypergraph& g) {
        return "OrientedHypergraph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<Rational>(m, "Rational")
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("value", &Rational::value)
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__repr__", [](const Rational& r) {
        return std::to_string(r.num) + "/" + std::to_string(r.den);
      });

  py::class_<CutProfile>(m, "CutProfile")
      .def_readonly("counts", &CutProfile::counts)
      .def_readonly("vol_s", &CutProfile::vol_s)
      .def_readonly("vol_sbar", &CutProfile::vol_sbar)
      .def_readonly("boundary", &CutProfile::boundary)
      .def_readonly("ratio", &CutProfile::ratio);

  py::class_<BoundsCheck>(m, "BoundsCheck")
      .def_readonly("lower_bound", &BoundsCheck::lower_bound)
      .def_readonly("gap", &BoundsCheck::gap)
      .def_readonly("upper_bound", &BoundsCheck::upper_bound)
      .def_readonly("lower_holds", &BoundsCheck::lower_holds)
      .def_readonly("upper_holds", &BoundsCheck::upper_holds);

  py::class_<CheegerReport>(m, "CheegerReport")
      .def_property_readonly("method",
                             [](const CheegerReport& r) { return cut_method_name(r.method); })
      .def_readonly("k", &CheegerReport::k)
      .def_readonly("h", &CheegerReport::h)
      .def_property_readonly("witness", [](const CheegerReport& r) { return r.witness.members(); })
      .def_readonly("lambda_second", &CheegerReport::lambda_second)
      .def_readonly("eigen_multiplicity", &CheegerReport::eigen_multiplicity)
      .def_readonly("bounds", &CheegerReport::bounds);

  py::class_<VertexCutReport>(m, "VertexCutReport")
      .def_readonly("d", &VertexCutReport::d)
      .def_readonly("h_star", &VertexCutReport::h_star)
      .def_readonly("witness_edges", &VertexCutReport::witness_edges)
      .def_readonly("dual_report", &VertexCutReport::dual_report);

  py::class_<SecondEigenpair>(m, "SecondEigenpair")
      .def_readonly("lambda_", &SecondEigenpair::lambda)
      .def_readonly("f", &SecondEigenpair::f)
      .def_readonly("multiplicity", &SecondEigenpair::multiplicity);

  py::class_<VariationalCheck>(m, "VariationalCheck")
      .def_readonly("trials", &VariationalCheck::trials)
      .def_readonly("lambda_", &VariationalCheck::lambda)
      .def_readonly("max_quotient", &VariationalCheck::max_quotient)
      .def_readonly("all_within", &VariationalCheck::all_within);

  m.def("adjacency_matrix",
        [](const OrientedHypergraph& g) { return adjacency_matrix(g).entries; });
  m.def("normalized_laplacian",
        [](const OrientedHypergraph& g) { return normalized_laplacian(g).entries; });
  m.def("spectrum", [](const OrientedHypergraph& g) {
    Spectrum s = spectrum(g);
    return py::make_tuple(s.eigenvalues, s.eigenfunctions);
  });
  m.def("rayleigh_quotient", [](const OrientedHypergraph& g, const std::vector<double>& f) {
    return rayleigh_quotient(as_classical(g), f);
  });
  m.def("second_largest_eigenpair",
        [](const OrientedHypergraph& g) { return second_largest_eigenpair(as_classical(g)); });
  m.def(
      "verify_variational_bound",
      [](const OrientedHypergraph& g, int trials, std::uint64_t seed) {
        return verify_variational_bound(as_classical(g), trials, seed);
      },
      py::arg("gamma"), py::arg("trials") = 100, py::arg("seed") = 1);

  m.def("cut_profile", [](const OrientedHypergraph& g, const std::vector<int>& members) {
    return cut_profile(as_classical(g), Cut::from_members(g.vertex_count(), members));
  });
  m.def(
      "cheeger_exact",
      [](const OrientedHypergraph& g, int limit, int threads) {
        return cheeger_exact(as_classical(g), SearchOptions{limit, threads});
      },
      py::arg("gamma"), py::arg("limit") = 24, py::arg("threads") = 1);
  m.def("sign_cut", [](const OrientedHypergraph& g, const std::vector<double>& f) {
    return sign_cut(g, f).members();
  });
  m.def("sweep_cut", [](const OrientedHypergraph& g, const std::vector<double>& f) {
    return sweep_cut(as_classical(g), f);
  });
  m.def("spectral_cut", [](const OrientedHypergraph& g) {
    SpectralCutResult cuts = spectral_cut(as_classical(g));
    return py::make_tuple(cuts.sign, cuts.sweep);
  });
  m.def("verify_inequalities",
        [](double h, double lambda_second, int k, double tolerance) {
          return verify_inequalities(h, lambda_second, k, tolerance);
        },
        py::arg("h"), py::arg("lambda_second"), py::arg("k"), py::arg("tolerance") = 1e-7);
  m.def(
      "vertex_cheeger_exact",
      [](const OrientedHypergraph& g, int limit, int threads) {
        return vertex_cheeger_exact(as_classical(g), SearchOptions{limit, threads});
      },
      py::arg("gamma"), py::arg("limit") = 24, py::arg("threads") = 1);
  m.def("vertex_cut", [](const OrientedHypergraph& g) { return vertex_cut(as_classical(g)); });

  m.def("dual", [](const OrientedHypergraph& g) {
    DualMapping mapping = dual(as_classical(g));
    return py::make_tuple(mapping.dual, mapping.vertex_to_dual_edge, mapping.edge_to_dual_vertex);
  });
  m.def("find_bipartition", [](const OrientedHypergraph& g) -> py::object {
    auto split = find_bipartition(g);
    if (!split) return py::none();
    return py::cast(split->side);
  });
  m.def("positivize", [](const OrientedHypergraph& g) { return g.positivized(); });

  m.def("parse", [](const std::string& text) { return parse_hypergraph(text).graph; });
  m.def("format", [](const OrientedHypergraph& g) { return write_hypergraph(g); },
        "Render in the hypercut file format (1-based vertices).");

  m.def(
      "generate_uniform",
      [](int n, int k, int m, std::uint64_t seed, bool connected) {
        GenOptions options;
        options.n = n;
        options.k = k;
        options.m = m;
        options.seed = seed;
        options.connected = connected;
        return generate_uniform(options);
      },
      py::arg("n"), py::arg("k"), py::arg("m"), py::arg("seed") = 1,
      py::arg("connected") = false);
  m.def("generate_simple_graph",
        [](int n, int m, std::uint64_t seed, bool connected) {
          return generate_simple_graph(n, m, seed, connected);
        },
        py::arg("n"), py::arg("m"), py::arg("seed") = 1, py::arg("connected") = false);

  m.def("polya_szego_constant",
        [](const OrientedHypergraph& g) { return polya_szego_constant(as_classical(g)); });
  m.def("normalized_graph_lambda2",
        [](const OrientedHypergraph& g) { return normalized_graph_lambda2(as_classical(g)); });

  m.attr("__version__") = "0.1.0";
}

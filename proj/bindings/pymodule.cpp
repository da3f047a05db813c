#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netcg/autiso.hpp"
#include "netcg/classify.hpp"
#include "netcg/geometry.hpp"
#include "netcg/graphfile.hpp"
#include "netcg/houlis.hpp"
#include "netcg/netcayley.hpp"

namespace py = pybind11;
using namespace netcg;

PYBIND11_MODULE(netcg, m) {
  m.doc() = "normal edge-transitive Cayley graphs of order pq";

  py::register_exception<Error>(m, "NetcgError");

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("degree", &Graph::degree)
      .def("valency", &Graph::valency)
      .def("has_edge", &Graph::has_edge)
      .def("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("construction1", &construction1, py::arg("p"), py::arg("q"));
  m.def(
      "construction2",
      [](std::int64_t p, std::int64_t q, std::int64_t ell, std::int64_t i) {
        return construction2(make_gamma_params(p, q, ell, i));
      },
      py::arg("p"), py::arg("q"), py::arg("ell"), py::arg("i"));
  m.def(
      "gamma_abelian",
      [](std::int64_t p, std::int64_t q, std::int64_t d2, std::int64_t d1, std::int64_t d) {
        return gamma_abelian(make_abelian_params(p, q, d2, d1, d));
      },
      py::arg("p"), py::arg("q"), py::arg("d2"), py::arg("d1"), py::arg("d"));
  m.def("gamma_prime", &gamma_prime, py::arg("p"), py::arg("ell"));
  m.def(
      "gamma_prime_square",
      [](std::int64_t p, std::int64_t ell, const std::string& which,
         std::optional<std::array<std::int64_t, 3>> diag) {
        PrimeSquareCase c;
        if (which == "lex")
          c = PrimeSquareCase::Lex;
        else if (which == "units")
          c = PrimeSquareCase::Units;
        else if (which == "diag")
          c = PrimeSquareCase::Diag;
        else
          throw py::value_error("case must be lex, units, or diag");
        return gamma_prime_square(p, ell, c, diag);
      },
      py::arg("p"), py::arg("ell"), py::arg("case"), py::arg("diag") = py::none());

  m.def("flag_graph_pg", [](int r) { return flag_graph(projective_plane(r)); }, py::arg("r"));
  m.def("incidence_graph_pg", [](int r) { return incidence_graph(projective_plane(r)); },
        py::arg("r"));
  m.def("incidence_graph_biplane", [] { return incidence_graph(biplane_11_5_2()); });

  m.def("automorphism_order",
        [](const Graph& g) { return automorphism_group(g).order(); });
  m.def("is_vertex_primitive",
        [](const Graph& g) { return automorphism_group(g).is_primitive(); });
  m.def("canonical_fingerprint",
        [](const Graph& g) { return canonical_form(g).fingerprint_hex(); });
  m.def("are_isomorphic", &are_isomorphic);

  m.def(
      "net_verdict",
      [](std::int64_t p, std::int64_t q, std::int64_t ell, std::int64_t i) {
        const GroupTable G = GroupTable::frobenius(p, q);
        const NetVerdict v = is_normal_edge_transitive(
            G, construction2_connection_set(G, make_gamma_params(p, q, ell, i)));
        py::dict out;
        out["is_net"] = v.is_net;
        out["is_arc_transitive"] = v.is_arc_transitive;
        out["aut_g_s_order"] = v.aut_g_s.order();
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("ell"), py::arg("i"));

  m.def(
      "valid_params",
      [](std::int64_t p, std::int64_t q) {
        std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
        for (const AbelianParams& a : valid_params(p, q)) out.emplace_back(a.d2, a.d1, a.d);
        return out;
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "predicted_aut_order",
      [](std::int64_t p, std::int64_t q, std::int64_t ell,
         std::int64_t i) -> std::optional<std::uint64_t> {
        return predicted_aut_order(make_gamma_params(p, q, ell, i));
      },
      py::arg("p"), py::arg("q"), py::arg("ell"), py::arg("i"),
      "Expected automorphism group order; None for the exceptional sets");

  m.def(
      "classify",
      [](std::int64_t p, std::int64_t q, std::int64_t max_size) {
        py::list out;
        for (const ClassRow& r : classify(p, q, max_size)) {
          py::dict row;
          row["graph"] = r.label();
          row["n"] = r.vertex_count;
          row["valency"] = r.valency;
          row["connected"] = r.connected;
          row["net"] = r.is_net;
          row["exceptional"] = r.exceptional;
          row["aut_order"] = r.aut_order ? py::cast(*r.aut_order) : py::none();
          row["predicted"] = r.predicted_order ? py::cast(*r.predicted_order) : py::none();
          row["primitive"] = r.primitive;
          row["quotient"] = r.quotient;
          row["class_id"] = r.iso_class_id;
          row["match"] = r.prediction_matched;
          out.append(row);
        }
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("max_size") = 250);

  m.def("serialize", [](const Graph& g) {
    GraphFile f;
    f.graph = g;
    return serialize_netcg(f);
  });
  m.def("parse", [](const std::string& text) { return parse_netcg(text).graph; });

#ifdef NETCG_VERSION
  m.attr("__version__") = NETCG_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}

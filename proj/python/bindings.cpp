#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evotopo/evotopo.hpp"

namespace py = pybind11;
using namespace evotopo;

namespace {

DistanceMatrix to_matrix(const std::vector<std::vector<double>>& rows, std::vector<std::string> ids) {
  if (ids.empty()) {
    for (std::size_t i = 0; i < rows.size(); ++i) ids.push_back(std::to_string(i));
  }
  std::vector<double> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  if (flat.size() != ids.size() * ids.size()) throw ValidationError("matrix must be square and match ids");
  return DistanceMatrix(std::move(ids), std::move(flat));
}

std::vector<std::vector<double>> to_rows(const DistanceMatrix& m) {
  std::vector<std::vector<double>> rows(m.size(), std::vector<double>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_evotopo, m) {
  m.doc() = "Persistent homology of evolving networks";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ComputationError>(m, "ComputationError", base.ptr());

  m.attr("inf") = kInfinity;

  py::class_<DiagramPoint>(m, "DiagramPoint")
      .def(py::init<double, double, std::uint32_t>(), py::arg("birth"), py::arg("death") = kInfinity,
           py::arg("multiplicity") = 1)
      .def_readwrite("birth", &DiagramPoint::birth)
      .def_readwrite("death", &DiagramPoint::death)
      .def_readwrite("multiplicity", &DiagramPoint::multiplicity)
      .def("__eq__", [](const DiagramPoint& a, const DiagramPoint& b) { return a == b; })
      .def("__repr__", [](const DiagramPoint& p) {
        return "DiagramPoint(" + std::to_string(p.birth) + ", " + std::to_string(p.death) + ", " +
               std::to_string(p.multiplicity) + ")";
      });

  py::class_<PersistenceDiagram>(m, "PersistenceDiagram")
      .def(py::init([](int dimension, const std::vector<std::tuple<double, double>>& points) {
             std::vector<DiagramPoint> pts;
             for (const auto& [b, d] : points) pts.push_back({b, d, 1});
             return PersistenceDiagram(dimension, pts);
           }),
           py::arg("dimension"), py::arg("points") = std::vector<std::tuple<double, double>>{})
      .def_property_readonly("dimension", &PersistenceDiagram::dimension)
      .def_property_readonly("finite", [](const PersistenceDiagram& d) {
        return std::vector<DiagramPoint>(d.finite_points().begin(), d.finite_points().end());
      })
      .def_property_readonly("essential", [](const PersistenceDiagram& d) {
        return std::vector<DiagramPoint>(d.essential_points().begin(), d.essential_points().end());
      })
      .def("__eq__", [](const PersistenceDiagram& a, const PersistenceDiagram& b) { return a == b; });

  py::class_<EvolvingNetwork>(m, "EvolvingNetwork")
      .def_property_readonly("labels", &EvolvingNetwork::node_labels)
      .def_property_readonly("phase_count", &EvolvingNetwork::phase_count)
      .def_property_readonly("node_count", &EvolvingNetwork::node_count)
      .def("edges", [](const EvolvingNetwork& n, std::size_t k) {
        std::vector<std::pair<NodeId, NodeId>> out;
        for (const auto& e : n.phases().at(k).edges) out.emplace_back(e.u, e.v);
        return out;
      });

  py::class_<Filtration>(m, "Filtration")
      .def("__len__", &Filtration::size)
      .def_property_readonly("max_dimension", &Filtration::max_dimension);

  m.def("parse_snapshot_matrices", [](const std::string& text) { return parse_snapshot_matrices(text); });
  m.def("parse_timed_edge_list", [](const std::string& text) { return parse_timed_edge_list(text); });
  m.def("serialize_timed_edge_list", &serialize_timed_edge_list);
  m.def("build_clique_filtration", &build_clique_filtration, py::arg("network"), py::arg("max_dim") = kDefaultMaxDim);
  m.def("export_perseus", &export_perseus);
  m.def(
      "compute_persistence",
      [](const Filtration& f, int max_dim, bool clearing) { return compute_persistence(f, max_dim, {clearing}); },
      py::arg("filtration"), py::arg("max_dim") = -1, py::arg("clearing") = false);

  m.def(
      "bottleneck",
      [](const PersistenceDiagram& x, const PersistenceDiagram& y, bool essential) {
        return bottleneck(x, y, essential).distance;
      },
      py::arg("x"), py::arg("y"), py::arg("include_essential") = false);
  m.def(
      "pairwise_matrix",
      [](const std::vector<PersistenceDiagram>& dgms, int dim, bool essential) {
        return to_rows(pairwise_matrix(dgms, dim, {}, essential));
      },
      py::arg("diagrams"), py::arg("dimension"), py::arg("include_essential") = false);

  m.def("diagram_to_polynomial", &diagram_to_polynomial);
  m.def(
      "vectorize", [](const PersistenceDiagram& d, std::size_t k) { return vectorize(d, k).coefficients; },
      py::arg("diagram"), py::arg("k"));

  m.def(
      "single_linkage",
      [](const std::vector<std::vector<double>>& rows, std::vector<std::string> ids) {
        std::vector<std::tuple<std::size_t, std::size_t, double>> out;
        for (const auto& mg : single_linkage(to_matrix(rows, std::move(ids))).merges) out.emplace_back(mg.a, mg.b, mg.height);
        return out;
      },
      py::arg("matrix"), py::arg("ids") = std::vector<std::string>{});
  m.def(
      "cluster",
      [](const std::vector<std::vector<double>>& rows, double height) {
        return cut(single_linkage(to_matrix(rows, {})), height);
      },
      py::arg("matrix"), py::arg("height"));

  m.def(
      "generate",
      [](std::uint64_t seed, std::size_t phases, std::size_t initial_nodes, std::size_t nodes_per_phase,
         std::size_t edges_per_phase, double attachment_bias) {
        GrowthParams p;
        p.seed = seed;
        p.phases = phases;
        p.initial_nodes = initial_nodes;
        p.nodes_per_phase = nodes_per_phase;
        p.edges_per_phase = edges_per_phase;
        p.attachment_bias = attachment_bias;
        return generate(p);
      },
      py::arg("seed") = 1, py::arg("phases") = 1, py::arg("initial_nodes") = 10, py::arg("nodes_per_phase") = 0,
      py::arg("edges_per_phase") = 10, py::arg("attachment_bias") = 0.0);

  m.def("write_diagrams", [](const std::vector<PersistenceDiagram>& d) { return write_diagrams(d); });
  m.def("read_diagrams", [](const std::string& text) { return read_diagrams(text); });
  m.def(
      "plot_svg",
      [](const PersistenceDiagram& d, const std::string& style) {
        if (style != "diagram" && style != "barcode") throw ValidationError("style must be diagram or barcode");
        return plot_svg(d, style == "barcode" ? PlotStyle::kBarcode : PlotStyle::kDiagram);
      },
      py::arg("diagram"), py::arg("style") = "diagram");
}

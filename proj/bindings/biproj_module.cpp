#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <optional>
#include <sstream>

#include "biproj/bipartite.hpp"
#include "biproj/errors.hpp"
#include "biproj/graph_stats.hpp"
#include "biproj/ingest.hpp"
#include "biproj/powerlaw_fit.hpp"
#include "biproj/projection.hpp"
#include "biproj/sampler.hpp"
#include "biproj/theory.hpp"
#include "biproj/version.hpp"
#include "biproj/weights.hpp"

namespace py = pybind11;
using namespace biproj;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Chung-Lu style bipartite graphs, projections and clustering statistics";
    m.attr("__version__") = kVersion;

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SizeError>(m, "SizeError", PyExc_RuntimeError);
    py::register_exception<FitError>(m, "FitError", PyExc_RuntimeError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_RuntimeError);

    py::enum_<Side>(m, "Side").value("Left", Side::Left).value("Right", Side::Right);

    py::class_<PowerLawParams>(m, "PowerLawParams")
        .def(py::init([](double alpha, double w_min, std::optional<double> w_max,
                         bool discrete) {
                 PowerLawParams p{alpha, w_min,
                                  w_max.value_or(std::numeric_limits<double>::infinity()),
                                  discrete};
                 p.validate();
                 return p;
             }),
             py::arg("alpha"), py::arg("w_min") = 1.0, py::arg("w_max") = std::nullopt,
             py::arg("discrete") = true)
        .def_readonly("alpha", &PowerLawParams::alpha)
        .def_readonly("w_min", &PowerLawParams::w_min)
        .def_readonly("w_max", &PowerLawParams::w_max)
        .def_readonly("discrete", &PowerLawParams::discrete);

    py::class_<WeightSequence>(m, "WeightSequence")
        .def(py::init<Side, std::vector<double>>(), py::arg("side"), py::arg("values"))
        .def_property_readonly("side", &WeightSequence::side)
        .def_property_readonly("values", &WeightSequence::values)
        .def("__len__", &WeightSequence::size)
        .def("moment", &WeightSequence::moment, py::arg("k"))
        .def_property_readonly("max_value", &WeightSequence::max_value)
        .def_property_readonly("min_value", &WeightSequence::min_value)
        .def_property_readonly("sum", &WeightSequence::sum)
        .def("integer_valued", &WeightSequence::integer_valued)
        .def("save", &WeightSequence::save_file, py::arg("path"))
        .def_static("load", &WeightSequence::load_file, py::arg("path"), py::arg("side"));

    m.def("sample_power_law", &sample_power_law, py::arg("params"), py::arg("n"),
          py::arg("seed"), py::arg("side") = Side::Left);
    m.def("cap", &cap, py::arg("seq"), py::arg("w_max"));

    py::class_<AssumptionReport>(m, "AssumptionReport")
        .def_readonly("delta", &AssumptionReport::delta)
        .def_readonly("well_defined_probs", &AssumptionReport::well_defined_probs)
        .def_readonly("bounded_range", &AssumptionReport::bounded_range)
        .def_readonly("bounded_moments", &AssumptionReport::bounded_moments)
        .def_readonly("details", &AssumptionReport::details)
        .def("all", &AssumptionReport::all);
    m.def("check_assumptions", &check_assumptions, py::arg("left"), py::arg("right"),
          py::arg("delta"), py::arg("slack") = 10.0);

    py::class_<BipartiteGraph>(m, "BipartiteGraph")
        .def(py::init([](NodeId n_left, NodeId n_right, std::vector<BipartiteEdge> edges) {
                 BipartiteGraph g{n_left, n_right, std::move(edges)};
                 g.normalize();
                 return g;
             }),
             py::arg("n_left"), py::arg("n_right"), py::arg("edges"))
        .def_readonly("n_left", &BipartiteGraph::n_left)
        .def_readonly("n_right", &BipartiteGraph::n_right)
        .def_readonly("edges", &BipartiteGraph::edges)
        .def("num_edges", &BipartiteGraph::num_edges)
        .def("left_degrees", &BipartiteGraph::left_degrees)
        .def("right_degrees", &BipartiteGraph::right_degrees)
        .def("save", &BipartiteGraph::save_file, py::arg("path"))
        .def_static("load", &BipartiteGraph::load_file, py::arg("path"));

    m.def("sample_naive", &sample_naive, py::arg("left"), py::arg("right"), py::arg("seed"),
          py::arg("max_pairs") = 2'000'000'000ULL);
    m.def("sample_fast", &sample_fast, py::arg("left"), py::arg("right"), py::arg("seed"));
    m.def("sample_random_intersection", &sample_random_intersection, py::arg("left_degrees"),
          py::arg("n_right"), py::arg("seed"));

    py::class_<GroupPair>(m, "GroupPair")
        .def_readonly("w_left", &GroupPair::w_left)
        .def_readonly("w_right", &GroupPair::w_right)
        .def_readonly("members_left", &GroupPair::members_left)
        .def_readonly("members_right", &GroupPair::members_right)
        .def_readonly("m", &GroupPair::m)
        .def_readonly("p", &GroupPair::p);
    m.def("make_group_pair", &make_group_pair, py::arg("w_left"), py::arg("w_right"),
          py::arg("members_left"), py::arg("members_right"), py::arg("right_weight_sum"));
    m.def("sample_group_edges", &sample_group_edges, py::arg("group"), py::arg("seed"));

    py::class_<ProjectedGraph>(m, "ProjectedGraph")
        .def(py::init<NodeId, std::vector<std::pair<NodeId, NodeId>>,
                      std::vector<std::uint32_t>>(),
             py::arg("n"), py::arg("edges"),
             py::arg("multiplicities") = std::vector<std::uint32_t>{})
        .def("num_nodes", &ProjectedGraph::num_nodes)
        .def("num_edges", &ProjectedGraph::num_edges)
        .def_property_readonly("edges", &ProjectedGraph::edges)
        .def_property_readonly("multiplicities", &ProjectedGraph::multiplicities)
        .def("degree", &ProjectedGraph::degree, py::arg("u"))
        .def("neighbors",
             [](const ProjectedGraph& p, NodeId u) {
                 auto view = p.neighbors(u);
                 return std::vector<NodeId>(view.begin(), view.end());
             },
             py::arg("u"))
        .def("save", &ProjectedGraph::save_file, py::arg("path"))
        .def_static("load", &ProjectedGraph::load_file, py::arg("path"));

    m.def("project", &project, py::arg("bipartite"), py::arg("keep_multiplicity") = false,
          py::arg("pair_cap") = 2'000'000'000ULL);
    m.def("multi_edge_rate", &multi_edge_rate, py::arg("projected"));

    py::class_<GraphStats>(m, "GraphStats")
        .def_readonly("degree", &GraphStats::degree)
        .def_readonly("triangles", &GraphStats::triangles)
        .def_readonly("wedges", &GraphStats::wedges)
        .def_readonly("two_paths", &GraphStats::two_paths)
        .def("num_nodes", &GraphStats::num_nodes)
        .def("total_triangles", &GraphStats::total_triangles)
        .def("total_wedges", &GraphStats::total_wedges);

    m.def("count_triangles", &count_triangles, py::arg("projected"));
    m.def("local_clustering", &local_clustering, py::arg("stats"), py::arg("u"));
    m.def("local_closure", &local_closure, py::arg("stats"), py::arg("u"));
    m.def("global_clustering", &global_clustering, py::arg("stats"));

    py::class_<CoefficientReport>(m, "CoefficientReport")
        .def_readonly("mean_local_clustering", &CoefficientReport::mean_local_clustering)
        .def_readonly("global_clustering", &CoefficientReport::global_clustering)
        .def_readonly("mean_local_closure", &CoefficientReport::mean_local_closure)
        .def_readonly("defined_clustering_nodes", &CoefficientReport::defined_clustering_nodes)
        .def_readonly("defined_closure_nodes", &CoefficientReport::defined_closure_nodes)
        .def("empty", &CoefficientReport::empty);
    m.def("coefficient_report",
          py::overload_cast<const ProjectedGraph&>(&coefficient_report), py::arg("projected"));
    m.def("coefficient_report", py::overload_cast<const GraphStats&>(&coefficient_report),
          py::arg("stats"));

    py::enum_<CoefficientMode>(m, "CoefficientMode")
        .value("Clustering", CoefficientMode::Clustering)
        .value("Closure", CoefficientMode::Closure);
    py::class_<CoefficientBin>(m, "CoefficientBin")
        .def_readonly("value", &CoefficientBin::value)
        .def_readonly("n_nodes", &CoefficientBin::n_nodes);
    m.def("weight_binned_conditional", &weight_binned_conditional, py::arg("stats"),
          py::arg("weights"), py::arg("mode"), py::arg("min_bin_size") = 0);
    m.def("degree_binned_coefficient", &degree_binned_coefficient, py::arg("stats"),
          py::arg("mode"), py::arg("min_bin_size") = 0);

    py::class_<PowerLawFit>(m, "PowerLawFit")
        .def_readonly("alpha", &PowerLawFit::alpha)
        .def_readonly("x_min", &PowerLawFit::x_min)
        .def_readonly("stderr", &PowerLawFit::stderr_alpha)
        .def_readonly("ks_distance", &PowerLawFit::ks_distance)
        .def_readonly("n_tail", &PowerLawFit::n_tail);
    m.def("fit_power_law", &fit_power_law, py::arg("samples"),
          py::arg("x_min") = std::nullopt);
    m.def("hurwitz_zeta", &hurwitz_zeta, py::arg("alpha"), py::arg("q"));

    py::class_<MomentBundle>(m, "MomentBundle")
        .def_static("from_sequences", &MomentBundle::from_sequences, py::arg("left"),
                    py::arg("right"))
        .def_readonly("n_left", &MomentBundle::n_left)
        .def_readonly("n_right", &MomentBundle::n_right)
        .def_readonly("M_L1", &MomentBundle::M_L1)
        .def_readonly("M_L2", &MomentBundle::M_L2)
        .def_readonly("M_R1", &MomentBundle::M_R1)
        .def_readonly("M_R2", &MomentBundle::M_R2)
        .def_readonly("M_R3", &MomentBundle::M_R3)
        .def_readonly("M_R4", &MomentBundle::M_R4)
        .def("clustering_ratio", &MomentBundle::clustering_ratio);

    py::class_<EdgeProbability>(m, "EdgeProbability")
        .def_readonly("first_order", &EdgeProbability::first_order)
        .def_readonly("corrected", &EdgeProbability::corrected);

    m.def("p_edge_asymptotic", &p_edge_asymptotic, py::arg("w_u1"), py::arg("w_u2"),
          py::arg("moments"));
    m.def("p_edge_exact", &p_edge_exact, py::arg("w_u1"), py::arg("w_u2"), py::arg("right"));
    m.def("p_wedge_exact", &p_wedge_exact, py::arg("w_u"), py::arg("w_u1"), py::arg("w_u2"),
          py::arg("right"));
    m.def("p_triangle_common_neighbor", &p_triangle_common_neighbor, py::arg("w_u"),
          py::arg("w_u1"), py::arg("w_u2"), py::arg("right"));
    m.def("predict_expected_degree", &predict_expected_degree, py::arg("w_u"),
          py::arg("moments"));
    m.def("predict_local_clustering", &predict_local_clustering, py::arg("w_u"),
          py::arg("moments"));
    m.def("predict_global_clustering", &predict_global_clustering, py::arg("moments"));
    m.def("predict_closure", &predict_closure, py::arg("moments"));
    m.def("poisson_pmf", &poisson_pmf, py::arg("mean"), py::arg("k"));
    m.def("predicted_projected_exponent", &predicted_projected_exponent, py::arg("alpha_left"),
          py::arg("alpha_right"));

    py::class_<DatasetMeta>(m, "DatasetMeta")
        .def_readonly("name", &DatasetMeta::name)
        .def_readonly("n_left", &DatasetMeta::n_left)
        .def_readonly("n_right", &DatasetMeta::n_right)
        .def_readonly("n_edges", &DatasetMeta::n_edges)
        .def_readonly("source_path", &DatasetMeta::source_path);
    py::class_<LoadedDataset>(m, "LoadedDataset")
        .def_readonly("graph", &LoadedDataset::graph)
        .def_readonly("meta", &LoadedDataset::meta)
        .def_readonly("left_labels", &LoadedDataset::left_labels)
        .def_readonly("right_labels", &LoadedDataset::right_labels);
    m.def("load_bipartite_edgelist",
          py::overload_cast<const std::string&, bool>(&load_bipartite_edgelist),
          py::arg("path"), py::arg("swap_sides") = false);
    m.def("write_label_map", &write_label_map, py::arg("dataset"), py::arg("path"));

    py::class_<DegreeWeights>(m, "DegreeWeights")
        .def_readonly("left", &DegreeWeights::left)
        .def_readonly("right", &DegreeWeights::right)
        .def_readonly("dropped_left", &DegreeWeights::dropped_left)
        .def_readonly("dropped_right", &DegreeWeights::dropped_right);
    m.def("degrees_as_weights", &degrees_as_weights, py::arg("bipartite"));
}

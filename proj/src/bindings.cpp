#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ldst/bench.hpp"
#include "ldst/edge_dfs.hpp"
#include "ldst/errors.hpp"
#include "ldst/generators.hpp"
#include "ldst/graph.hpp"
#include "ldst/io.hpp"
#include "ldst/oracle.hpp"
#include "ldst/solve.hpp"
#include "ldst/tree_builder.hpp"
#include "ldst/verify.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linear-time low-degree spanning trees of 2-edge-connected graphs";

  py::register_exception<ldst::ParseError>(m, "ParseError");
  py::register_exception<ldst::PreconditionError>(m, "PreconditionError");
  py::register_exception<ldst::InternalError>(m, "InternalError");

  py::class_<ldst::Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("vertex_count"),
           py::arg("edges"))
      .def_property_readonly("vertex_count", &ldst::Graph::vertex_count)
      .def_property_readonly("edge_count", &ldst::Graph::edge_count)
      .def_property_readonly("edges", &ldst::Graph::edges)
      .def("edge", &ldst::Graph::edge, py::arg("e"))
      .def("degree", &ldst::Graph::degree, py::arg("v"))
      .def("__repr__", [](const ldst::Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph", [](const std::string& text) { return ldst::parse_graph(text); },
        py::arg("text"));
  m.def("serialize_graph", &ldst::serialize_graph, py::arg("graph"));
  m.def("degree_ceiling_bound", &ldst::degree_ceiling_bound, py::arg("graph"), py::arg("v"));

  py::class_<ldst::TraversalItem>(m, "TraversalItem")
      .def_readonly("tail", &ldst::TraversalItem::tail)
      .def_readonly("head", &ldst::TraversalItem::head)
      .def_readonly("edge", &ldst::TraversalItem::edge)
      .def("__repr__", [](const ldst::TraversalItem& it) {
        return "(" + std::to_string(it.tail) + "->" + std::to_string(it.head) + " e" +
               std::to_string(it.edge) + ")";
      });

  py::class_<ldst::EdgeDfsList>(m, "EdgeDfsList")
      .def(py::init<>())
      .def_readwrite("items", &ldst::EdgeDfsList::items)
      .def_readwrite("start_vertex", &ldst::EdgeDfsList::start_vertex);

  m.def("compute_edge_dfs",
        [](const ldst::Graph& g, int start) { return ldst::compute_edge_dfs(g, start); },
        py::arg("graph"), py::arg("start") = 0);
  m.def("make_dfs_list", [](std::vector<std::tuple<int, int, int>> raw, int start) {
          ldst::EdgeDfsList list;
          list.start_vertex = start;
          for (const auto& [tail, head, edge] : raw) list.items.push_back({tail, head, edge});
          return list;
        },
        py::arg("items"), py::arg("start"));

  py::enum_<ldst::DfsViolation>(m, "DfsViolation")
      .value("none", ldst::DfsViolation::none)
      .value("item_endpoints", ldst::DfsViolation::item_endpoints)
      .value("coverage", ldst::DfsViolation::coverage)
      .value("traversal", ldst::DfsViolation::traversal);

  py::class_<ldst::DfsValidation>(m, "DfsValidation")
      .def_readonly("ok", &ldst::DfsValidation::ok)
      .def_readonly("violation", &ldst::DfsValidation::violation)
      .def_readonly("index", &ldst::DfsValidation::index)
      .def_readonly("detail", &ldst::DfsValidation::detail);

  m.def("validate_edge_dfs", &ldst::validate_edge_dfs, py::arg("graph"), py::arg("list"));

  py::enum_<ldst::StepKind>(m, "StepKind")
      .value("cross", ldst::StepKind::cross)
      .value("backtrack", ldst::StepKind::backtrack);

  py::class_<ldst::StepClassification>(m, "StepClassification")
      .def_readonly("steps", &ldst::StepClassification::steps)
      .def_readonly("final_vertices", &ldst::StepClassification::final_vertices);

  m.def("classify_steps", &ldst::classify_steps, py::arg("list"));

  py::class_<ldst::SpanningTree>(m, "SpanningTree")
      .def_readonly("root", &ldst::SpanningTree::root)
      .def_readonly("tree_edges", &ldst::SpanningTree::tree_edges)
      .def_readonly("parent_vertex", &ldst::SpanningTree::parent_vertex)
      .def_readonly("parent_edge", &ldst::SpanningTree::parent_edge)
      .def_readonly("deg_t", &ldst::SpanningTree::deg_t);

  py::class_<ldst::TreeAddition>(m, "TreeAddition")
      .def_readonly("item_index", &ldst::TreeAddition::item_index)
      .def_readonly("edge", &ldst::TreeAddition::edge)
      .def_readonly("new_vertex", &ldst::TreeAddition::new_vertex);

  py::class_<ldst::BuilderTrace>(m, "BuilderTrace")
      .def_readonly("additions", &ldst::BuilderTrace::additions)
      .def_readonly("enqueue_count", &ldst::BuilderTrace::enqueue_count)
      .def_readonly("dequeue_count", &ldst::BuilderTrace::dequeue_count);

  py::class_<ldst::BuildResult>(m, "BuildResult")
      .def_readonly("tree", &ldst::BuildResult::tree)
      .def_readonly("trace", &ldst::BuildResult::trace);

  m.def("build_spanning_tree", &ldst::build_spanning_tree, py::arg("graph"),
        py::arg("list"), py::arg("root"), py::arg("checked") = false);

  py::class_<ldst::DegreeRow>(m, "DegreeRow")
      .def_readonly("vertex", &ldst::DegreeRow::vertex)
      .def_readonly("deg_g", &ldst::DegreeRow::deg_g)
      .def_readonly("deg_t", &ldst::DegreeRow::deg_t)
      .def_readonly("bound", &ldst::DegreeRow::bound)
      .def_readonly("slack", &ldst::DegreeRow::slack);

  py::class_<ldst::DegreeReport>(m, "DegreeReport")
      .def_readonly("rows", &ldst::DegreeReport::rows)
      .def_readonly("worst_slack", &ldst::DegreeReport::worst_slack)
      .def_readonly("ok", &ldst::DegreeReport::ok);

  py::class_<ldst::LowDegreeResult>(m, "LowDegreeResult")
      .def_readonly("tree", &ldst::LowDegreeResult::tree)
      .def_readonly("report", &ldst::LowDegreeResult::report)
      .def_readonly("trivial", &ldst::LowDegreeResult::trivial);

  m.def("low_degree_spanning_tree",
        [](const ldst::Graph& g, int start, std::optional<int> root, bool force,
           bool checked) {
          return ldst::low_degree_spanning_tree(g, {start, root, force, checked});
        },
        py::arg("graph"), py::arg("start") = 0, py::arg("root") = std::nullopt,
        py::arg("force") = false, py::arg("checked") = false);

  m.def("is_connected", &ldst::is_connected, py::arg("graph"));
  m.def("find_bridges", &ldst::find_bridges, py::arg("graph"));
  m.def("is_two_edge_connected", &ldst::is_two_edge_connected, py::arg("graph"));
  m.def("check_partition_cut", &ldst::check_partition_cut, py::arg("graph"),
        py::arg("subset"));

  py::class_<ldst::TreeValidation>(m, "TreeValidation")
      .def_readonly("ok", &ldst::TreeValidation::ok)
      .def_readonly("reason", &ldst::TreeValidation::reason);

  m.def("validate_spanning_tree", &ldst::validate_spanning_tree, py::arg("graph"),
        py::arg("tree"));

  py::class_<ldst::OrientationStats>(m, "OrientationStats")
      .def_readonly("in_count", &ldst::OrientationStats::in_count)
      .def_readonly("out_count", &ldst::OrientationStats::out_count)
      .def_readonly("balanced_ok", &ldst::OrientationStats::balanced_ok)
      .def_readonly("all_balanced", &ldst::OrientationStats::all_balanced);

  m.def("orientation_stats", &ldst::orientation_stats, py::arg("graph"), py::arg("list"));
  m.def("check_degree_bound", &ldst::check_degree_bound, py::arg("graph"), py::arg("tree"));
  m.def("orientation_strongly_connected", &ldst::orientation_strongly_connected,
        py::arg("graph"), py::arg("list"));

  m.def("gen_cycle", &ldst::gen_cycle, py::arg("n"));
  m.def("gen_complete", &ldst::gen_complete, py::arg("n"));
  m.def("gen_wheel", &ldst::gen_wheel, py::arg("rim"));
  m.def("gen_hypercube", &ldst::gen_hypercube, py::arg("dim"));
  m.def("gen_theta", &ldst::gen_theta, py::arg("paths"), py::arg("path_len"));
  m.def("gen_random_2ec", &ldst::gen_random_2ec, py::arg("n"), py::arg("extra_edges"),
        py::arg("seed"));

  m.def("graph_hash_hex", &ldst::graph_hash_hex, py::arg("graph"));
  m.def("count_spanning_trees", &ldst::count_spanning_trees, py::arg("graph"));
  m.def("spanning_trees",
        [](const ldst::Graph& g) {
          std::vector<std::vector<int>> trees;
          ldst::enumerate_spanning_trees(g, [&](const std::vector<int>& t) {
            trees.push_back(t);
          });
          return trees;
        },
        py::arg("graph"));

  py::class_<ldst::OracleVerdict>(m, "OracleVerdict")
      .def_readonly("graph_hash", &ldst::OracleVerdict::graph_hash)
      .def_readonly("trees_enumerated", &ldst::OracleVerdict::trees_enumerated)
      .def_readonly("best_worst_slack", &ldst::OracleVerdict::best_worst_slack)
      .def_readonly("algorithm_worst_slack", &ldst::OracleVerdict::algorithm_worst_slack)
      .def_readonly("theorem_holds", &ldst::OracleVerdict::theorem_holds);

  m.def("oracle_check", &ldst::oracle_check, py::arg("graph"));

  py::class_<ldst::SweepSummary>(m, "SweepSummary")
      .def_readonly("max_n", &ldst::SweepSummary::max_n)
      .def_readonly("edge_subsets_examined", &ldst::SweepSummary::edge_subsets_examined)
      .def_readonly("graphs_processed", &ldst::SweepSummary::graphs_processed)
      .def_readonly("starts_checked", &ldst::SweepSummary::starts_checked)
      .def_readonly("failures", &ldst::SweepSummary::failures);

  m.def("exhaustive_small_sweep",
        [](int max_n) { return ldst::exhaustive_small_sweep(max_n); }, py::arg("max_n"));

  py::class_<ldst::BenchRow>(m, "BenchRow")
      .def_readonly("n", &ldst::BenchRow::n)
      .def_readonly("m", &ldst::BenchRow::m)
      .def_readonly("seed", &ldst::BenchRow::seed)
      .def_readonly("t_dfs_ns", &ldst::BenchRow::t_dfs_ns)
      .def_readonly("t_build_ns", &ldst::BenchRow::t_build_ns)
      .def_readonly("t_total_ns", &ldst::BenchRow::t_total_ns)
      .def_readonly("enqueues", &ldst::BenchRow::enqueues);

  py::class_<ldst::BenchReport>(m, "BenchReport")
      .def_readonly("rows", &ldst::BenchReport::rows)
      .def_readonly("slope", &ldst::BenchReport::slope)
      .def_readonly("row_errors", &ldst::BenchReport::row_errors);

  m.def("run_bench", &ldst::run_bench, py::arg("edge_targets"), py::arg("seed"),
        py::arg("reps"));

  m.def("serialize_tree", &ldst::serialize_tree, py::arg("tree"), py::arg("report"));
  m.def("parse_tree",
        [](const ldst::Graph& g, const std::string& text) { return ldst::parse_tree(g, text); },
        py::arg("graph"), py::arg("text"));
  m.def("serialize_dfs", &ldst::serialize_dfs, py::arg("list"));
}

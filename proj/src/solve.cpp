#include "ldst/solve.hpp"

#include <sstream>
#include <stdexcept>

#include "ldst/errors.hpp"

namespace ldst {

LowDegreeResult low_degree_spanning_tree(const Graph& g, const SolveOptions& opts) {
  const int n = g.vertex_count();
  if (n == 0) throw PreconditionError("graph has no vertices");
  if (opts.start < 0 || opts.start >= n)
    throw std::invalid_argument("start vertex out of range");
  const int root = opts.root.value_or(opts.start);
  if (root < 0 || root >= n) throw std::invalid_argument("root vertex out of range");

  if (n == 1) {
    SpanningTree tree;
    tree.root = 0;
    tree.parent_vertex.assign(1, -1);
    tree.parent_edge.assign(1, -1);
    tree.deg_t.assign(1, 0);
    DegreeReport report = check_degree_bound(g, tree);
    return {std::move(tree), std::move(report), true};
  }

  bool verified = false;
  if (!opts.force) {
    if (!is_connected(g))
      throw PreconditionError("not 2-edge-connected: graph is disconnected");
    const std::vector<int> bridges = find_bridges(g);
    if (!bridges.empty()) {
      const auto [u, v] = g.edge(bridges.front());
      std::ostringstream msg;
      msg << "not 2-edge-connected: bridge edge " << bridges.front() << " = {" << u
          << ", " << v << "}";
      if (bridges.size() > 1) msg << " and " << bridges.size() - 1 << " more";
      throw PreconditionError(msg.str());
    }
    verified = true;
  }

  const EdgeDfsList dfs = compute_edge_dfs(g, opts.start);
  BuildResult built;
  try {
    built = build_spanning_tree(g, dfs, root, opts.checked);
  } catch (const QueueExhaustedError& e) {
    if (verified)
      throw InternalError(std::string("builder failed on a verified input: ") + e.what());
    throw;
  }

  DegreeReport report = check_degree_bound(g, built.tree);
  if (!report.ok) {
    for (const DegreeRow& row : report.rows) {
      if (row.slack < 0)
        throw InternalError("constructed tree exceeds the degree budget at vertex " +
                            std::to_string(row.vertex) + " (deg " +
                            std::to_string(row.deg_t) + " > bound " +
                            std::to_string(row.bound) + ")");
    }
  }
  return {std::move(built.tree), std::move(report), false};
}

}  // namespace ldst

#include "ldst/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "ldst/errors.hpp"
#include "ldst/solve.hpp"
#include "ldst/verify.hpp"

namespace ldst {

namespace {

using BigInt = boost::multiprecision::cpp_int;

constexpr std::uint64_t kEnumerationLimit = 10'000'000;
constexpr int kEnumerationMaxVertices = 12;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

int min_slack(const Graph& g, const std::vector<int>& tree_edges,
              std::vector<int>& deg_scratch) {
  deg_scratch.assign(g.vertex_count(), 0);
  for (const int e : tree_edges) {
    const auto [u, v] = g.edge(e);
    ++deg_scratch[u];
    ++deg_scratch[v];
  }
  int worst = INT_MAX;
  for (int v = 0; v < g.vertex_count(); ++v)
    worst = std::min(worst, degree_ceiling_bound(g, v) - deg_scratch[v]);
  return worst;
}

}  // namespace

std::string graph_hash_hex(const Graph& g) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(serialize_graph(g))));
  return buf;
}

std::uint64_t count_spanning_trees(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw PreconditionError("cannot count spanning trees of an empty graph");
  if (n > 64) throw PreconditionError("tree counting limited to 64 vertices");
  if (n == 1) return 1;

  // reduced Laplacian (vertex 0 deleted), exact integers
  const int d = n - 1;
  std::vector<BigInt> a(static_cast<std::size_t>(d) * d);
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * d + j]; };
  for (const auto& [u, v] : g.edges()) {
    if (u > 0) at(u - 1, u - 1) += 1;
    if (v > 0) at(v - 1, v - 1) += 1;
    if (u > 0 && v > 0) {
      at(u - 1, v - 1) -= 1;
      at(v - 1, u - 1) -= 1;
    }
  }

  // Bareiss fraction-free elimination; divisions are exact
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < d; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < d; ++r)
        if (at(r, k) != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < d; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i)
      for (int j = k + 1; j < d; ++j)
        at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }

  BigInt det = at(d - 1, d - 1);
  if (sign < 0) det = -det;
  if (det < 0) throw InternalError("negative spanning tree count");
  if (det > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw std::overflow_error("spanning tree count exceeds 64 bits");
  return det.convert_to<std::uint64_t>();
}

void enumerate_spanning_trees(const Graph& g,
                              const std::function<void(const std::vector<int>&)>& emit) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n == 0) throw PreconditionError("cannot enumerate spanning trees of an empty graph");
  if (n > kEnumerationMaxVertices)
    throw PreconditionError("enumeration limited to " +
                            std::to_string(kEnumerationMaxVertices) + " vertices");
  const std::uint64_t total = count_spanning_trees(g);
  if (total > kEnumerationLimit)
    throw PreconditionError("too many spanning trees to enumerate (" +
                            std::to_string(total) + ")");
  if (n == 1) {
    emit({});
    return;
  }
  if (total == 0) return;

  // Branch include/exclude per edge: include only if acyclic, exclude only
  // if the undecided suffix can still connect everything.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x];
    return x;
  };

  auto exclude_feasible = [&](int next_edge) {
    std::vector<int> p = parent;
    std::vector<char> is_root(n, 0);
    for (int v = 0; v < n; ++v) is_root[find(p, v)] = 1;
    int components = 0;
    for (int v = 0; v < n; ++v) components += is_root[v];
    for (int e = next_edge; e < m && components > 1; ++e) {
      const auto [u, v] = g.edges()[e];
      const int ru = find(p, u);
      const int rv = find(p, v);
      if (ru != rv) {
        p[ru] = rv;
        --components;
      }
    }
    return components == 1;
  };

  std::vector<int> included;
  included.reserve(n - 1);

  std::function<void(int)> recurse = [&](int i) {
    if (static_cast<int>(included.size()) == n - 1) {
      emit(included);
      return;
    }
    if (i == m) return;
    const auto [u, v] = g.edges()[i];
    const int ru = find(parent, u);
    const int rv = find(parent, v);
    if (ru != rv) {
      parent[ru] = rv;
      included.push_back(i);
      recurse(i + 1);
      included.pop_back();
      parent[ru] = ru;
    }
    if (exclude_feasible(i + 1)) recurse(i + 1);
  };
  recurse(0);
}

OracleVerdict oracle_check(const Graph& g) {
  OracleVerdict verdict;
  verdict.graph_hash = graph_hash_hex(g);

  std::vector<int> scratch;
  int best = INT_MIN;
  std::uint64_t trees = 0;
  enumerate_spanning_trees(g, [&](const std::vector<int>& tree_edges) {
    ++trees;
    best = std::max(best, min_slack(g, tree_edges, scratch));
  });
  verdict.trees_enumerated = trees;
  if (trees > 0) verdict.best_worst_slack = best;
  verdict.theorem_holds = trees > 0 && best >= 0;

  if (is_two_edge_connected(g)) {
    const LowDegreeResult result = low_degree_spanning_tree(g, {});
    verdict.algorithm_worst_slack = result.report.worst_slack;
  }
  return verdict;
}

SweepSummary exhaustive_small_sweep(
    int max_n, const std::function<void(const Graph&, const OracleVerdict&)>& per_graph) {
  if (max_n < 1 || max_n > 6)
    throw std::invalid_argument("sweep supports max_n between 1 and 6");

  SweepSummary summary;
  summary.max_n = max_n;

  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
    const int pair_count = static_cast<int>(all_pairs.size());

    for (std::uint32_t mask = 0; mask < (1u << pair_count); ++mask) {
      ++summary.edge_subsets_examined;
      std::vector<std::pair<int, int>> edges;
      for (int b = 0; b < pair_count; ++b)
        if (mask & (1u << b)) edges.push_back(all_pairs[b]);
      if (static_cast<int>(edges.size()) < n) continue;  // a cycle is the sparsest case

      const Graph g(n, std::move(edges));
      if (!is_two_edge_connected(g)) continue;
      ++summary.graphs_processed;

      auto abort_with = [&](const std::string& what) -> void {
        throw InternalError("sweep failure (" + what + ") on graph:\n" + serialize_graph(g));
      };

      // independent existence check over the full tree set
      std::set<std::vector<int>> tree_sets;
      std::vector<int> scratch;
      int best = INT_MIN;
      std::uint64_t trees = 0;
      enumerate_spanning_trees(g, [&](const std::vector<int>& tree_edges) {
        ++trees;
        best = std::max(best, min_slack(g, tree_edges, scratch));
        std::vector<int> sorted = tree_edges;
        std::sort(sorted.begin(), sorted.end());
        tree_sets.insert(std::move(sorted));
      });
      if (trees == 0 || best < 0) abort_with("no budget-respecting spanning tree exists");
      if (trees != tree_sets.size()) abort_with("enumeration emitted a duplicate tree");
      if (trees != count_spanning_trees(g)) abort_with("enumeration disagrees with the determinant count");

      OracleVerdict verdict;
      verdict.graph_hash = graph_hash_hex(g);
      verdict.trees_enumerated = trees;
      verdict.best_worst_slack = best;
      verdict.theorem_holds = best >= 0;

      for (int start = 0; start < n; ++start) {
        ++summary.starts_checked;
        const EdgeDfsList list = compute_edge_dfs(g, start);
        const DfsValidation dv = validate_edge_dfs(g, list);
        if (!dv.ok) abort_with("edge DFS validation: " + dv.detail);
        const OrientationStats stats = orientation_stats(g, list);
        if (!stats.all_balanced) abort_with("orientation balance violated");

        const BuildResult built = build_spanning_tree(g, list, start, /*checked=*/true);
        const TreeValidation tv = validate_spanning_tree(g, built.tree);
        if (!tv.ok) abort_with("tree validation: " + tv.reason);
        const DegreeReport report = check_degree_bound(g, built.tree);
        if (!report.ok) abort_with("degree bound violated");
        if (built.trace.enqueue_count != 2 * static_cast<std::int64_t>(g.edge_count()))
          abort_with("queue accounting is not 2m");

        std::vector<int> sorted = built.tree.tree_edges;
        std::sort(sorted.begin(), sorted.end());
        if (!tree_sets.contains(sorted))
          abort_with("built tree missing from the enumerated set");

        if (start == 0) verdict.algorithm_worst_slack = report.worst_slack;
      }

      if (per_graph) per_graph(g, verdict);
    }
  }
  return summary;
}

}  // namespace ldst

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ldst/edge_dfs.hpp"
#include "ldst/errors.hpp"
#include "ldst/generators.hpp"
#include "ldst/solve.hpp"
#include "ldst/tree_builder.hpp"
#include "ldst/verify.hpp"
#include "test_util.hpp"

using ldst::build_spanning_tree;
using ldst::BuildResult;
using ldst::compute_edge_dfs;
using ldst::EdgeDfsList;
using ldst::Graph;
using ldst::low_degree_spanning_tree;

namespace {

// independent re-execution of the queue discipline from the trace inputs,
// asserting discard safety and that the additions match
void replay_trace(const Graph& g, const EdgeDfsList& list, int root,
                  const ldst::BuilderTrace& trace) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> zone(n);
  for (int p = 0; p < static_cast<int>(list.items.size()); ++p) {
    zone[list.items[p].tail].push_back(p);
    zone[list.items[p].head].push_back(p);
  }
  std::vector<char> in_tree(n, 0);
  std::vector<int> queue = zone[root];
  in_tree[root] = 1;
  int reached = 1;
  std::size_t head = 0;
  std::size_t next_addition = 0;
  std::int64_t enqueued = static_cast<std::int64_t>(queue.size());
  std::int64_t dequeued = 0;
  while (reached < n) {
    REQUIRE(head < queue.size());
    const int pos = queue[head++];
    ++dequeued;
    const auto& item = list.items[pos];
    if (!in_tree[item.tail] && in_tree[item.head]) {
      REQUIRE(next_addition < trace.additions.size());
      const auto& expected = trace.additions[next_addition++];
      CHECK(expected.item_index == pos);
      CHECK(expected.edge == item.edge);
      CHECK(expected.new_vertex == item.tail);
      in_tree[item.tail] = 1;
      ++reached;
      for (const int p : zone[item.tail]) queue.push_back(p);
      enqueued += static_cast<std::int64_t>(zone[item.tail].size());
    } else {
      // discard safety: the tail is already in the tree, so the item can
      // never satisfy the growth condition later
      CHECK(in_tree[item.tail]);
    }
  }
  CHECK(next_addition == trace.additions.size());
  CHECK(enqueued == trace.enqueue_count);
  CHECK(dequeued == trace.dequeue_count);
}

}  // namespace

TEST_CASE("triangle build follows the queue discipline") {
  const Graph g = test_util::triangle();
  const BuildResult built = build_spanning_tree(g, compute_edge_dfs(g, 0), 0, true);
  CHECK(built.tree.tree_edges == std::vector<int>{2, 1});
  CHECK(built.tree.deg_t == std::vector<int>{1, 1, 2});
  REQUIRE(built.trace.additions.size() == 2);
  CHECK(built.trace.additions[0].item_index == 2);
  CHECK(built.trace.additions[0].edge == 2);
  CHECK(built.trace.additions[0].new_vertex == 2);
  CHECK(built.trace.additions[1].item_index == 1);
  CHECK(built.trace.additions[1].edge == 1);
  CHECK(built.trace.additions[1].new_vertex == 1);
  CHECK(built.trace.enqueue_count == 6);
  CHECK(built.trace.dequeue_count == 3);
}

TEST_CASE("parallel pair keeps the second edge") {
  const Graph g = test_util::parallel_pair();
  const BuildResult built = build_spanning_tree(g, compute_edge_dfs(g, 0), 0, true);
  CHECK(built.tree.tree_edges == std::vector<int>{1});
  CHECK(built.tree.deg_t == std::vector<int>{1, 1});
  CHECK(built.trace.enqueue_count == 4);
}

TEST_CASE("4-cycle builds the reversed path") {
  const Graph g = test_util::c4();
  const BuildResult built = build_spanning_tree(g, compute_edge_dfs(g, 0), 0, true);
  CHECK(built.tree.tree_edges == std::vector<int>{3, 2, 1});
  CHECK(built.tree.deg_t == std::vector<int>{1, 1, 2, 2});
  for (int v = 0; v < 4; ++v)
    CHECK(built.tree.deg_t[v] <= ldst::degree_ceiling_bound(g, v));
}

TEST_CASE("complete graph on four vertices, hand-traced") {
  const Graph g = test_util::k4();
  const BuildResult built = build_spanning_tree(g, compute_edge_dfs(g, 0), 0, true);
  CHECK(built.tree.tree_edges == std::vector<int>{1, 3, 5});
  CHECK(built.tree.deg_t == std::vector<int>{1, 1, 3, 1});
  CHECK(built.trace.enqueue_count == 12);
  CHECK(built.trace.dequeue_count == 6);
}

TEST_CASE("trace replays faithfully on the corpus") {
  for (const Graph& g : test_util::two_ec_corpus()) {
    const EdgeDfsList list = compute_edge_dfs(g, 0);
    const BuildResult built = build_spanning_tree(g, list, 0, true);
    replay_trace(g, list, 0, built.trace);
  }
}

TEST_CASE("queue accounting and outgoing-edge uniqueness") {
  auto check_graph = [](const Graph& g, int start, int root) {
    const EdgeDfsList list = compute_edge_dfs(g, start);
    const BuildResult built = build_spanning_tree(g, list, root, true);
    CHECK(built.trace.enqueue_count == 2LL * g.edge_count());
    CHECK(built.trace.dequeue_count <= built.trace.enqueue_count);
    // each vertex is the tail of at most one added item, and additions
    // introduce each non-root vertex exactly once
    std::set<int> new_vertices;
    for (const auto& addition : built.trace.additions) {
      CHECK(list.items[addition.item_index].tail == addition.new_vertex);
      CHECK(addition.new_vertex != root);
      CHECK(new_vertices.insert(addition.new_vertex).second);
    }
    CHECK(new_vertices.size() == static_cast<std::size_t>(g.vertex_count() - 1));
  };
  for (const Graph& g : test_util::two_ec_corpus()) check_graph(g, 0, 0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = ldst::gen_random_2ec(5 + static_cast<int>(seed * 3), 10, seed);
    check_graph(g, static_cast<int>(seed) % g.vertex_count(),
                static_cast<int>(seed * 7) % g.vertex_count());
  }
}

TEST_CASE("tree degree never exceeds incoming count plus one") {
  for (const Graph& g : test_util::two_ec_corpus()) {
    const EdgeDfsList list = compute_edge_dfs(g, 0);
    const ldst::OrientationStats stats = ldst::orientation_stats(g, list);
    const BuildResult built = build_spanning_tree(g, list, 0);
    for (int v = 0; v < g.vertex_count(); ++v)
      CHECK(built.tree.deg_t[v] <= stats.in_count[v] + 1);
  }
}

TEST_CASE("builder signals an exhausted queue on a bad precondition") {
  // the path graph admits an edge DFS but the queue starves immediately
  const Graph g = test_util::p3();
  CHECK_THROWS_AS(build_spanning_tree(g, compute_edge_dfs(g, 0), 0),
                  ldst::QueueExhaustedError);
  CHECK_THROWS_AS(build_spanning_tree(g, compute_edge_dfs(g, 0), 9),
                  std::invalid_argument);
}

TEST_CASE("end-to-end solve on cycles and wheels") {
  const ldst::LowDegreeResult c5 = low_degree_spanning_tree(test_util::c5(), {});
  CHECK(c5.report.ok);
  CHECK_FALSE(c5.trivial);
  for (const auto& row : c5.report.rows) CHECK(row.bound == 2);

  const ldst::LowDegreeResult wheel = low_degree_spanning_tree(ldst::gen_wheel(5), {});
  CHECK(wheel.report.ok);
  CHECK(wheel.report.rows[0].bound == 4);  // hub degree 5
  for (int v = 1; v <= 5; ++v) CHECK(wheel.report.rows[v].bound == 3);
}

TEST_CASE("solve with a root different from the start") {
  ldst::SolveOptions opts;
  opts.root = 3;
  const ldst::LowDegreeResult result = low_degree_spanning_tree(test_util::c5(), opts);
  CHECK(result.tree.root == 3);
  CHECK(result.report.ok);
  CHECK(ldst::validate_spanning_tree(test_util::c5(), result.tree).ok);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = ldst::gen_random_2ec(12, 9, seed);
    ldst::SolveOptions mixed;
    mixed.start = static_cast<int>(seed) % g.vertex_count();
    mixed.root = static_cast<int>(seed * 5 + 1) % g.vertex_count();
    CHECK(low_degree_spanning_tree(g, mixed).report.ok);
  }
}

TEST_CASE("solve rejects graphs that are not 2-edge-connected") {
  CHECK_THROWS_WITH_AS(low_degree_spanning_tree(test_util::p3(), {}),
                       doctest::Contains("bridge"), ldst::PreconditionError);
  const Graph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_THROWS_WITH_AS(low_degree_spanning_tree(two, {}),
                       doctest::Contains("disconnected"), ldst::PreconditionError);
  // forcing past the check surfaces the queue exhaustion instead
  ldst::SolveOptions forced;
  forced.force = true;
  CHECK_THROWS_AS(low_degree_spanning_tree(test_util::p3(), forced),
                  ldst::QueueExhaustedError);
}

TEST_CASE("single-vertex graph yields the trivial tree") {
  const ldst::LowDegreeResult result = low_degree_spanning_tree(Graph(1, {}), {});
  CHECK(result.trivial);
  CHECK(result.tree.tree_edges.empty());
  CHECK(result.report.ok);
  CHECK(result.report.rows[0].slack == 1);
  CHECK_THROWS_AS(low_degree_spanning_tree(Graph(0, {}), {}), ldst::PreconditionError);
}

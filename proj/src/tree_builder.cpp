#include "ldst/tree_builder.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hugepage.hpp"
#include "ldst/errors.hpp"

namespace ldst {

namespace {

// union-find used only by checked mode
struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

BuildResult build_spanning_tree(const Graph& g, const EdgeDfsList& list, int root,
                                bool checked) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
  if (checked) {
    const DfsValidation v = validate_edge_dfs(g, list);
    if (!v.ok) throw std::invalid_argument("traversal list invalid: " + v.detail);
  }

  const TraversalItem* items = list.items.data();
  const int item_count = static_cast<int>(list.items.size());

  // Z(v): positions of all items having v as an endpoint, in list order.
  std::vector<int> zone_offset(static_cast<std::size_t>(n) + 1, 0);
  for (int p = 0; p < item_count; ++p) {
    ++zone_offset[items[p].tail + 1];
    ++zone_offset[items[p].head + 1];
  }
  for (int v = 0; v < n; ++v) zone_offset[v + 1] += zone_offset[v];
  detail::HugeBuffer<int> zone(2 * static_cast<std::size_t>(item_count));
  {
    std::vector<int> next = zone_offset;
    for (int p = 0; p < item_count; ++p) {
      zone[next[items[p].tail]++] = p;
      zone[next[items[p].head]++] = p;
    }
  }

  SpanningTree tree;
  tree.root = root;
  tree.parent_vertex.assign(n, -1);
  tree.parent_edge.assign(n, -1);
  tree.deg_t.assign(n, 0);
  tree.tree_edges.reserve(n > 0 ? n - 1 : 0);

  BuilderTrace trace;
  trace.additions.reserve(n > 0 ? n - 1 : 0);

  std::vector<char> in_tree(n, 0);
  // every item position enters the queue at most twice (once per endpoint)
  detail::HugeBuffer<int> queue(2 * static_cast<std::size_t>(m));
  std::size_t queue_head = 0;
  std::size_t queue_tail = 0;

  Dsu dsu(checked ? n : 0);

  auto enqueue_endpoint_items = [&](int v) {
    for (int i = zone_offset[v]; i < zone_offset[v + 1]; ++i) queue[queue_tail++] = zone[i];
    trace.enqueue_count += zone_offset[v + 1] - zone_offset[v];
  };

  in_tree[root] = 1;
  int reached = 1;
  enqueue_endpoint_items(root);

  while (reached < n) {
    if (queue_head == queue_tail) {
      std::ostringstream msg;
      msg << "queue exhausted with " << reached << " of " << n
          << " vertices reached; the input is not 2-edge-connected or the "
             "traversal list is invalid";
      throw QueueExhaustedError(msg.str());
    }
    // upcoming dequeues are already known, so their items can be fetched early
    if (queue_head + 8 < queue_tail) __builtin_prefetch(&items[queue[queue_head + 8]]);
    const int pos = queue[queue_head++];
    ++trace.dequeue_count;
    const TraversalItem it = items[pos];
    if (!in_tree[it.tail] && in_tree[it.head]) {
      in_tree[it.tail] = 1;
      ++reached;
      tree.parent_vertex[it.tail] = it.head;
      tree.parent_edge[it.tail] = it.edge;
      ++tree.deg_t[it.tail];
      ++tree.deg_t[it.head];
      tree.tree_edges.push_back(it.edge);
      trace.additions.push_back({pos, it.edge, it.tail});
      if (checked && !dsu.unite(it.tail, it.head))
        throw InternalError("edge addition closed a cycle");
      enqueue_endpoint_items(it.tail);
    } else if (checked && !in_tree[it.tail]) {
      // A discarded item must have its tail inside the tree already; only
      // then can it never become usable later.
      throw InternalError("discarded an item whose tail is outside the tree");
    }
  }

  return {std::move(tree), std::move(trace)};
}

}  // namespace ldst

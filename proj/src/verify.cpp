#include "ldst/verify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ldst/errors.hpp"

namespace ldst {

namespace {

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

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const AdjEntry& entry : g.adjacency(v)) {
      if (!seen[entry.neighbor]) {
        seen[entry.neighbor] = 1;
        ++reached;
        stack.push_back(entry.neighbor);
      }
    }
  }
  return reached == n;
}

std::vector<int> find_bridges(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> bridges;
  int timer = 0;

  struct Frame {
    int vertex;
    std::size_t next;
    int via_edge;
  };
  std::vector<Frame> stack;

  for (int r = 0; r < n; ++r) {
    if (disc[r] >= 0) continue;
    disc[r] = low[r] = timer++;
    stack.push_back({r, 0, -1});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& adj = g.adjacency(f.vertex);
      if (f.next < adj.size()) {
        const AdjEntry entry = adj[f.next++];
        if (entry.edge == f.via_edge) continue;  // skip only the entering edge, by id
        if (disc[entry.neighbor] < 0) {
          disc[entry.neighbor] = low[entry.neighbor] = timer++;
          stack.push_back({entry.neighbor, 0, entry.edge});
        } else {
          low[f.vertex] = std::min(low[f.vertex], disc[entry.neighbor]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& up = stack.back();
          low[up.vertex] = std::min(low[up.vertex], low[done.vertex]);
          if (low[done.vertex] > disc[up.vertex]) bridges.push_back(done.via_edge);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

bool is_two_edge_connected(const Graph& g) {
  return g.vertex_count() >= 2 && is_connected(g) && find_bridges(g).empty();
}

int check_partition_cut(const Graph& g, const std::vector<int>& subset) {
  const int n = g.vertex_count();
  if (subset.empty()) throw std::invalid_argument("subset must be nonempty");
  std::vector<char> in_x(n, 0);
  for (const int v : subset) {
    if (v < 0 || v >= n) throw std::invalid_argument("subset vertex out of range");
    if (in_x[v]) throw std::invalid_argument("duplicate vertex in subset");
    in_x[v] = 1;
  }
  if (static_cast<int>(subset.size()) == n)
    throw std::invalid_argument("subset must be a proper subset");
  int crossing = 0;
  for (const auto& [u, v] : g.edges()) crossing += in_x[u] != in_x[v];
  return crossing;
}

TreeValidation validate_spanning_tree(const Graph& g, const SpanningTree& t) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  auto fail = [](std::string reason) { return TreeValidation{false, std::move(reason)}; };

  if (n == 0) return fail("graph has no vertices");
  if (t.root < 0 || t.root >= n) return fail("root out of range");
  if (static_cast<int>(t.tree_edges.size()) != n - 1)
    return fail("tree has " + std::to_string(t.tree_edges.size()) + " edges, expected " +
                std::to_string(n - 1));

  std::vector<char> used(m, 0);
  std::vector<int> deg(n, 0);
  Dsu dsu(n);
  for (const int e : t.tree_edges) {
    if (e < 0 || e >= m) return fail("edge id " + std::to_string(e) + " out of range");
    if (used[e]) return fail("edge " + std::to_string(e) + " repeated");
    used[e] = 1;
    const auto [u, v] = g.edge(e);
    ++deg[u];
    ++deg[v];
    if (!dsu.unite(u, v)) return fail("tree edges contain a cycle");
  }
  // n-1 acyclic edges on n vertices: connected and spanning.

  if (!t.deg_t.empty()) {
    if (t.deg_t.size() != static_cast<std::size_t>(n)) return fail("deg_t has wrong length");
    if (t.deg_t != deg) return fail("deg_t inconsistent with the tree edges");
  }

  if (!t.parent_vertex.empty() || !t.parent_edge.empty()) {
    if (t.parent_vertex.size() != static_cast<std::size_t>(n) ||
        t.parent_edge.size() != static_cast<std::size_t>(n))
      return fail("parent arrays have wrong length");
    if (t.parent_vertex[t.root] != -1 || t.parent_edge[t.root] != -1)
      return fail("root must not have a parent");
    for (int v = 0; v < n; ++v) {
      if (v == t.root) continue;
      const int pe = t.parent_edge[v];
      const int pv = t.parent_vertex[v];
      if (pe < 0 || pe >= m || !used[pe])
        return fail("parent edge of vertex " + std::to_string(v) + " is not a tree edge");
      const auto [a, b] = g.edge(pe);
      if (!((a == v && b == pv) || (a == pv && b == v)))
        return fail("parent edge of vertex " + std::to_string(v) +
                    " does not join it to its parent");
    }
    // every vertex must reach the root through parent links
    std::vector<int> state(n, 0);  // 0 unknown, 1 on current path, 2 reaches root
    state[t.root] = 2;
    for (int v = 0; v < n; ++v) {
      int w = v;
      std::vector<int> path;
      while (state[w] == 0) {
        state[w] = 1;
        path.push_back(w);
        w = t.parent_vertex[w];
      }
      if (state[w] == 1) return fail("parent links contain a cycle");
      for (const int p : path) state[p] = 2;
    }
  }

  return {};
}

OrientationStats orientation_stats(const Graph& g, const EdgeDfsList& list) {
  const DfsValidation v = validate_edge_dfs(g, list);
  if (!v.ok) throw std::invalid_argument("traversal list invalid: " + v.detail);

  const int n = g.vertex_count();
  OrientationStats stats;
  stats.in_count.assign(n, 0);
  stats.out_count.assign(n, 0);
  for (const TraversalItem& it : list.items) {
    ++stats.out_count[it.tail];
    ++stats.in_count[it.head];
  }
  stats.balanced_ok.assign(n, 1);
  for (int u = 0; u < n; ++u) {
    const int in = stats.in_count[u];
    const int out = stats.out_count[u];
    const int limit = (g.degree(u) % 2 == 1) ? out + 1 : out;
    if (in > limit) {
      stats.balanced_ok[u] = 0;
      stats.all_balanced = false;
    }
  }
  return stats;
}

DegreeReport check_degree_bound(const Graph& g, const SpanningTree& t) {
  const TreeValidation v = validate_spanning_tree(g, t);
  if (!v.ok) throw std::invalid_argument("invalid spanning tree: " + v.reason);

  const int n = g.vertex_count();
  std::vector<int> deg(n, 0);
  for (const int e : t.tree_edges) {
    const auto [a, b] = g.edge(e);
    ++deg[a];
    ++deg[b];
  }

  DegreeReport report;
  report.rows.reserve(n);
  report.worst_slack = std::numeric_limits<int>::max();
  for (int u = 0; u < n; ++u) {
    const int bound = degree_ceiling_bound(g, u);
    const int slack = bound - deg[u];
    report.rows.push_back({u, g.degree(u), deg[u], bound, slack});
    report.worst_slack = std::min(report.worst_slack, slack);
  }
  report.ok = report.worst_slack >= 0;
  return report;
}

bool orientation_strongly_connected(const Graph& g, const EdgeDfsList& list) {
  const int n = g.vertex_count();
  if (n <= 1) return true;

  auto reaches_all = [&](bool forward) {
    std::vector<int> offset(n + 1, 0);
    for (const TraversalItem& it : list.items) ++offset[(forward ? it.tail : it.head) + 1];
    for (int v = 0; v < n; ++v) offset[v + 1] += offset[v];
    std::vector<int> target(list.items.size());
    std::vector<int> next = offset;
    for (const TraversalItem& it : list.items) {
      if (forward)
        target[next[it.tail]++] = it.head;
      else
        target[next[it.head]++] = it.tail;
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{list.start_vertex};
    seen[list.start_vertex] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int i = offset[v]; i < offset[v + 1]; ++i) {
        if (!seen[target[i]]) {
          seen[target[i]] = 1;
          ++reached;
          stack.push_back(target[i]);
        }
      }
    }
    return reached == n;
  };

  return reaches_all(true) && reaches_all(false);
}

}  // namespace ldst

#include "ldst/io.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ldst/errors.hpp"

namespace ldst {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

std::string serialize_tree(const SpanningTree& tree, const DegreeReport& report) {
  const int n = static_cast<int>(tree.deg_t.size());
  std::ostringstream out;
  out << "t " << tree.root << " " << n << "\n";
  // the attached vertex of an edge is the one whose parent edge it is
  std::unordered_map<int, int> child_of;
  child_of.reserve(tree.parent_edge.size());
  for (int v = 0; v < n; ++v)
    if (tree.parent_edge[v] >= 0) child_of.emplace(tree.parent_edge[v], v);
  for (const int e : tree.tree_edges) {
    const auto it = child_of.find(e);
    if (it == child_of.end()) throw InternalError("tree edge without a parent link");
    out << "e " << it->second << " " << tree.parent_vertex[it->second] << " " << e << "\n";
  }
  out << "c degrees:\n";
  for (const DegreeRow& row : report.rows)
    out << "d " << row.vertex << " " << row.deg_t << " " << row.bound << "\n";
  return out.str();
}

SpanningTree parse_tree(const Graph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;

  SpanningTree tree;
  const int n = g.vertex_count();
  const int m = g.edge_count();
  long long expected_edges = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c' || line[0] == 'd') continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    std::string extra;
    if (!have_header) {
      if (kind != "t") parse_fail(line_no, "expected header `t <root> <n>`");
      long long root = 0;
      long long count = 0;
      if (!(fields >> root >> count) || (fields >> extra))
        parse_fail(line_no, "malformed header, expected `t <root> <n>`");
      if (count != n)
        parse_fail(line_no, "tree is over " + std::to_string(count) +
                                " vertices, graph has " + std::to_string(n));
      if (root < 0 || root >= n) parse_fail(line_no, "root out of range");
      tree.root = static_cast<int>(root);
      tree.parent_vertex.assign(n, -1);
      tree.parent_edge.assign(n, -1);
      tree.deg_t.assign(n, 0);
      expected_edges = n > 0 ? n - 1 : 0;
      have_header = true;
      continue;
    }
    if (kind != "e") parse_fail(line_no, "expected edge line `e <u> <v> <edge-id>`");
    long long u = 0, v = 0, e = 0;
    if (!(fields >> u >> v >> e) || (fields >> extra))
      parse_fail(line_no, "malformed edge line, expected `e <u> <v> <edge-id>`");
    if (static_cast<long long>(tree.tree_edges.size()) == expected_edges)
      parse_fail(line_no, "more tree edges than n-1");
    if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(line_no, "vertex id out of range");
    if (e < 0 || e >= m) parse_fail(line_no, "edge id out of range");
    const auto [a, b] = g.edge(static_cast<int>(e));
    if (!((a == u && b == v) || (a == v && b == u)))
      parse_fail(line_no, "edge " + std::to_string(e) + " does not join " +
                              std::to_string(u) + " and " + std::to_string(v));
    if (tree.parent_edge[u] != -1) parse_fail(line_no, "vertex attached twice");
    tree.parent_vertex[u] = static_cast<int>(v);
    tree.parent_edge[u] = static_cast<int>(e);
    ++tree.deg_t[u];
    ++tree.deg_t[v];
    tree.tree_edges.push_back(static_cast<int>(e));
  }

  if (!have_header) throw ParseError("missing header `t <root> <n>`");
  if (static_cast<long long>(tree.tree_edges.size()) != expected_edges)
    throw ParseError("tree has " + std::to_string(tree.tree_edges.size()) +
                     " edges, expected " + std::to_string(expected_edges));
  return tree;
}

std::string serialize_dfs(const EdgeDfsList& list) {
  std::ostringstream out;
  out << "l " << list.items.size() << "\n";
  for (const TraversalItem& it : list.items)
    out << it.tail << " " << it.head << " " << it.edge << "\n";
  return out.str();
}

}  // namespace ldst

#include "ldst/graph.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "hugepage.hpp"
#include "ldst/errors.hpp"

namespace ldst {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

bool is_comment(const std::string& line) {
  return line == "c" || line.rfind("c ", 0) == 0;
}

template <class T>
std::shared_ptr<T[]> make_shared_buffer(std::size_t count) {
  T* raw = static_cast<T*>(detail::hp_alloc_bytes(count * sizeof(T)));
  return std::shared_ptr<T[]>(raw, [count](T* p) {
    detail::hp_free_bytes(p, count * sizeof(T));
  });
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : n_(vertex_count), edges_(std::move(edge_list)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");

  auto offsets = make_shared_buffer<int>(static_cast<std::size_t>(n_) + 1);
  for (int v = 0; v <= n_; ++v) offsets[v] = 0;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge " + std::to_string(e) + " endpoint out of range");
    if (u == v) throw std::invalid_argument("edge " + std::to_string(e) + " is a self-loop");
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (int v = 0; v < n_; ++v) offsets[v + 1] += offsets[v];

  auto entries = make_shared_buffer<AdjEntry>(2 * edges_.size());
  std::vector<int> next(offsets.get(), offsets.get() + n_);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    entries[next[u]++] = {v, static_cast<int>(e)};
    entries[next[v]++] = {u, static_cast<int>(e)};
  }

  offsets_ = std::move(offsets);
  entries_ = std::move(entries);
}

std::pair<int, int> Graph::edge(int e) const {
  if (e < 0 || e >= edge_count()) throw std::invalid_argument("edge id out of range");
  return edges_[e];
}

std::span<const AdjEntry> Graph::adjacency(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  return {entries_.get() + offsets_[v],
          static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment(line)) continue;
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind)) parse_fail(line_no, "blank line");
    std::string extra;
    if (!have_header) {
      if (kind != "p") parse_fail(line_no, "expected header `p <n> <m>`");
      if (!(fields >> n >> m) || (fields >> extra))
        parse_fail(line_no, "malformed header, expected `p <n> <m>`");
      if (n < 0 || m < 0 || n > std::numeric_limits<int>::max() ||
          m > std::numeric_limits<int>::max())
        parse_fail(line_no, "vertex or edge count out of range");
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (kind != "e") parse_fail(line_no, "expected edge line `e <u> <v>`");
    long long u = 0;
    long long v = 0;
    if (!(fields >> u >> v) || (fields >> extra))
      parse_fail(line_no, "malformed edge line, expected `e <u> <v>`");
    if (static_cast<long long>(edges.size()) == m)
      parse_fail(line_no, "more edges than the header declares");
    if (u < 0 || u >= n || v < 0 || v >= n)
      parse_fail(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    if (u == v) parse_fail(line_no, "self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }

  if (!have_header) throw ParseError("missing header `p <n> <m>`");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

int degree_ceiling_bound(const Graph& g, int v) {
  const int deg = g.degree(v);  // range-checked
  return (deg + 1) / 2 + 1;
}

}  // namespace ldst

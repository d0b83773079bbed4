#include "ldst/generators.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace ldst {

std::optional<Family> family_from_string(std::string_view name) {
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "wheel") return Family::wheel;
  if (name == "hypercube") return Family::hypercube;
  if (name == "theta") return Family::theta;
  if (name == "random-2ec") return Family::random_2ec;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::wheel: return "wheel";
    case Family::hypercube: return "hypercube";
    case Family::theta: return "theta";
    case Family::random_2ec: return "random-2ec";
  }
  return "?";
}

Graph gen_cycle(int n) {
  if (n < 2) throw std::invalid_argument("cycle needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  if (n == 2) {
    edges = {{0, 1}, {0, 1}};  // digon: two parallel edges
  } else {
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  }
  return Graph(n, std::move(edges));
}

Graph gen_complete(int n) {
  if (n < 3) throw std::invalid_argument("complete graph needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph gen_wheel(int rim) {
  if (rim < 3) throw std::invalid_argument("wheel needs a rim of >= 3 vertices");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * static_cast<std::size_t>(rim));
  for (int i = 1; i <= rim; ++i) edges.emplace_back(0, i);  // spokes
  for (int i = 1; i < rim; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(rim, 1);
  return Graph(rim + 1, std::move(edges));
}

Graph gen_hypercube(int dim) {
  if (dim < 2) throw std::invalid_argument("hypercube needs dimension >= 2");
  if (dim > 20) throw std::invalid_argument("hypercube dimension too large");
  const int n = 1 << dim;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * dim / 2);
  for (int v = 0; v < n; ++v)
    for (int bit = 0; bit < dim; ++bit) {
      const int w = v ^ (1 << bit);
      if (w > v) edges.emplace_back(v, w);
    }
  return Graph(n, std::move(edges));
}

Graph gen_theta(int paths, int path_len) {
  if (paths < 2) throw std::invalid_argument("theta needs >= 2 paths");
  if (path_len < 0) throw std::invalid_argument("theta path length must be >= 0");
  const int n = 2 + paths * path_len;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(paths) * (path_len + 1));
  for (int p = 0; p < paths; ++p) {
    if (path_len == 0) {
      edges.emplace_back(0, 1);
      continue;
    }
    const int first = 2 + p * path_len;
    edges.emplace_back(0, first);
    for (int t = 1; t < path_len; ++t) edges.emplace_back(first + t - 1, first + t);
    edges.emplace_back(first + path_len - 1, 1);
  }
  return Graph(n, std::move(edges));
}

Graph gen_random_2ec(int n, int extra_edges, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random-2ec needs n >= 3");
  if (extra_edges < 0) throw std::invalid_argument("extra edge count must be >= 0");

  // Raw mt19937_64 draws with modulo reduction keep the construction
  // reproducible across standard libraries and languages.
  std::mt19937_64 rng(seed);
  auto draw = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[draw(i + 1)]);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) + extra_edges);
  for (int i = 0; i < n; ++i) edges.emplace_back(perm[i], perm[(i + 1) % n]);
  for (int c = 0; c < extra_edges; ++c) {
    int u = draw(n);
    int v = draw(n);
    while (u == v) {
      u = draw(n);
      v = draw(n);
    }
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph gen_family(const GenSpec& spec) {
  switch (spec.family) {
    case Family::cycle: return gen_cycle(spec.n);
    case Family::complete: return gen_complete(spec.n);
    case Family::wheel: return gen_wheel(spec.n);
    case Family::hypercube: return gen_hypercube(spec.n);
    case Family::theta: return gen_theta(spec.paths, spec.path_len);
    case Family::random_2ec: return gen_random_2ec(spec.n, spec.extra, spec.seed);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace ldst

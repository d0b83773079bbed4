#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ldst/graph.hpp"

namespace ldst {

enum class Family { cycle, complete, wheel, hypercube, theta, random_2ec };

std::optional<Family> family_from_string(std::string_view name);
std::string family_name(Family f);

// Parameter use per family: cycle/complete -> n; wheel -> n = rim size;
// hypercube -> n = dimension; theta -> paths, path_len; random_2ec -> n,
// extra, seed.
struct GenSpec {
  Family family = Family::cycle;
  int n = 0;
  int extra = 0;
  int paths = 0;
  int path_len = 1;
  std::uint64_t seed = 0;
};

Graph gen_family(const GenSpec& spec);

Graph gen_cycle(int n);      // n >= 3, or n == 2 as a pair of parallel edges
Graph gen_complete(int n);   // n >= 3, edges in lexicographic order
Graph gen_wheel(int rim);    // hub 0, rim 1..rim; spokes first, then rim edges
Graph gen_hypercube(int dim);  // dim >= 2
// Vertices 0 and 1 joined by `paths` >= 2 internally disjoint paths, each
// with path_len >= 0 interior vertices (path_len == 0 gives parallel edges).
Graph gen_theta(int paths, int path_len);

// A Hamiltonian cycle on an mt19937_64-shuffled permutation of 0..n-1 plus
// `extra_edges` uniformly sampled chords (self-loops rejected, duplicates
// kept as parallel edges). 2-edge-connected by construction and
// reproducible: Fisher-Yates with modulo reduction of raw mt19937_64 draws.
Graph gen_random_2ec(int n, int extra_edges, std::uint64_t seed);

}  // namespace ldst

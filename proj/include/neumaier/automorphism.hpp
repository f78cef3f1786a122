#pragma once

#include <optional>
#include <string>
#include <vector>

#include "neumaier/bigint.hpp"
#include "neumaier/graph.hpp"

namespace neumaier {

struct AutReport {
  std::vector<std::vector<int>> generators;  // vertex permutations
  BigInt order;                              // exact group order
  std::vector<std::vector<int>> orbits;      // sorted cells, ordered by minimum
};

// Generating set, exact order (orbit-stabilizer chain) and orbits of the
// automorphism group, by individualize-and-refine backtracking over a
// color-refinement-stabilized ordering. Requires n <= 40.
AutReport automorphism_group(const Graph& g);

struct TransitivityReport {
  bool transitive = false;
  std::vector<std::vector<int>> generators;
  // words[v] is a sequence of generator indices whose composition maps
  // vertex 0 to v (empty for vertex 0; meaningful only when transitive).
  std::vector<std::vector<int>> words;
};

TransitivityReport is_vertex_transitive(const Graph& g);

struct IsomorphismResult {
  // Maps vertices of the first graph onto the second.
  std::optional<std::vector<int>> bijection;
  // On failure: "vertex-count", "degree-sequence", "refinement",
  // "spectrum" or "exhausted-search".
  std::string refutation;
};

IsomorphismResult are_isomorphic(const Graph& g, const Graph& h);

// Certificate path: checks that the given permutations are automorphisms
// whose generated action has a single vertex orbit.
bool verify_transitive_subgroup(const Graph& g, const std::vector<std::vector<int>>& gens);

}  // namespace neumaier

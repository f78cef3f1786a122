#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neumaier/bitset.hpp"

namespace neumaier {

// Immutable simple undirected graph on at most kMaxVertices vertices,
// stored as one adjacency bitset row per vertex. Connectivity is computed
// once at construction; classification entry points reject disconnected
// input.
class Graph {
 public:
  Graph() = default;

  // Builds from an edge list. Duplicate edges collapse; loops and
  // out-of-range endpoints are errors.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::string label = {});

  // Builds from adjacency rows; validates symmetry, loop-freeness and range.
  static Graph from_rows(int n, std::vector<VertexSet> rows, std::string label = {});

  int vertex_count() const { return n_; }
  long edge_count() const;
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  bool connected() const { return connected_; }
  bool is_complete() const;
  // Number of common neighbors of u and v (the AND+popcount kernel).
  int common_neighbors(int u, int v) const { return (adj_[u] & adj_[v]).count(); }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::string label_;
  bool connected_ = false;
};

struct EdgeRegularParams {
  int n = 0, k = 0, lambda = 0;
  bool operator==(const EdgeRegularParams&) const = default;
};

struct SrgParams {
  int n = 0, k = 0, lambda = 0, mu = 0;
  // 0 < mu < k, the usual nondegeneracy condition.
  bool nontrivial = false;
  bool operator==(const SrgParams&) const = default;
};

// Outcome of the edge-regularity test. On failure the witness names either
// two vertices of unequal degree or two edges with different
// common-neighbor counts.
struct EdgeRegularity {
  std::optional<EdgeRegularParams> params;

  enum class Failure { None, NotRegular, CommonNeighborMismatch };
  Failure failure = Failure::None;
  // NotRegular: vertices u1,u2 with degrees c1,c2.
  // CommonNeighborMismatch: edges (u1,v1),(u2,v2) with counts c1,c2.
  int u1 = -1, v1 = -1, c1 = -1;
  int u2 = -1, v2 = -1, c2 = -1;
};

Graph complement(const Graph& g);

// Requires connected input. Returns params iff g is k-regular and every
// adjacent pair has the same number of common neighbors.
EdgeRegularity edge_regularity(const Graph& g);

// Requires connected, non-complete input.
std::optional<SrgParams> is_strongly_regular(const Graph& g);

// Exact diameter by BFS from every vertex; requires connected input.
int diameter(const Graph& g);

// Standard graph6 codec (short form, n <= 62).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Plain text edge list: first line n, then one "u v" line per edge.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

}  // namespace neumaier

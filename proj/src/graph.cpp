#include "neumaier/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace neumaier {

namespace {

bool compute_connected(int n, const std::vector<VertexSet>& adj) {
  if (n == 0) return false;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= adj[v];
    frontier = next.and_not(seen);
    seen |= frontier;
  }
  return seen == VertexSet::full(n);
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::string label) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph: vertex count must be in [1, 128]");
  std::vector<VertexSet> rows(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop edge");
    rows[u].set(v);
    rows[v].set(u);
  }
  return from_rows(n, std::move(rows), std::move(label));
}

Graph Graph::from_rows(int n, std::vector<VertexSet> rows, std::string label) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph: vertex count must be in [1, 128]");
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("graph: row count mismatch");
  VertexSet range = VertexSet::full(n);
  for (int v = 0; v < n; ++v) {
    if (!rows[v].is_subset_of(range))
      throw std::invalid_argument("graph: adjacency bit out of range");
    if (rows[v].test(v)) throw std::invalid_argument("graph: loop edge");
    for (int u = rows[v].first(); u >= 0; u = rows[v].next(u))
      if (!rows[u].test(v)) throw std::invalid_argument("graph: asymmetric adjacency");
  }
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(rows);
  g.label_ = std::move(label);
  g.connected_ = compute_connected(n, g.adj_);
  return g;
}

long Graph::edge_count() const {
  long total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

bool Graph::is_complete() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != n_ - 1) return false;
  return true;
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  VertexSet all = VertexSet::full(n);
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) {
    rows[v] = all.and_not(g.neighbors(v));
    rows[v].reset(v);
  }
  std::string label = g.label().empty() ? std::string{} : "complement(" + g.label() + ")";
  return Graph::from_rows(n, std::move(rows), std::move(label));
}

EdgeRegularity edge_regularity(const Graph& g) {
  if (!g.connected()) throw std::invalid_argument("edge_regularity: graph must be connected");
  int n = g.vertex_count();
  EdgeRegularity out;

  int k = g.degree(0);
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) != k) {
      out.failure = EdgeRegularity::Failure::NotRegular;
      out.u1 = 0;
      out.c1 = k;
      out.u2 = v;
      out.c2 = g.degree(v);
      return out;
    }
  }

  int lambda = -1;
  int wu = -1, wv = -1;
  for (int u = 0; u < n; ++u) {
    const VertexSet& nb = g.neighbors(u);
    for (int v = nb.next(u); v >= 0; v = nb.next(v)) {
      int c = g.common_neighbors(u, v);
      if (lambda < 0) {
        lambda = c;
        wu = u;
        wv = v;
      } else if (c != lambda) {
        out.failure = EdgeRegularity::Failure::CommonNeighborMismatch;
        out.u1 = wu;
        out.v1 = wv;
        out.c1 = lambda;
        out.u2 = u;
        out.v2 = v;
        out.c2 = c;
        return out;
      }
    }
  }
  if (lambda < 0) {
    // No edge at all: only K1, which the connectivity+range checks reduce to.
    out.failure = EdgeRegularity::Failure::NotRegular;
    return out;
  }
  out.params = EdgeRegularParams{n, k, lambda};
  return out;
}

std::optional<SrgParams> is_strongly_regular(const Graph& g) {
  if (!g.connected())
    throw std::invalid_argument("is_strongly_regular: graph must be connected");
  if (g.is_complete())
    throw std::invalid_argument("is_strongly_regular: graph must be non-complete");
  EdgeRegularity er = edge_regularity(g);
  if (!er.params) return std::nullopt;
  int n = g.vertex_count();
  int mu = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      int c = g.common_neighbors(u, v);
      if (mu < 0)
        mu = c;
      else if (c != mu)
        return std::nullopt;
    }
  }
  // Non-complete, so at least one non-adjacent pair exists.
  SrgParams p{n, er.params->k, er.params->lambda, mu, mu > 0 && mu < er.params->k};
  return p;
}

int diameter(const Graph& g) {
  if (!g.connected()) throw std::invalid_argument("diameter: graph must be connected");
  int n = g.vertex_count();
  int best = 0;
  for (int s = 0; s < n; ++s) {
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    int depth = 0;
    while (true) {
      VertexSet next;
      for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= g.neighbors(v);
      frontier = next.and_not(seen);
      if (frontier.empty()) break;
      seen |= frontier;
      ++depth;
    }
    if (depth > best) best = depth;
  }
  return best;
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("graph6: only the short form (n <= 62) is supported");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, bits = 0;
  // Upper triangle, column by column.
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  for (char ch : text)
    if (ch < 63 || ch > 126) throw std::invalid_argument("graph6: byte out of range");
  if (text[0] == 126) throw std::invalid_argument("graph6: long form not supported");
  int n = text[0] - 63;
  if (n < 1) throw std::invalid_argument("graph6: empty graph");
  long nbits = static_cast<long>(n) * (n - 1) / 2;
  long nbytes = (nbits + 5) / 6;
  if (static_cast<long>(text.size()) != 1 + nbytes)
    throw std::invalid_argument("graph6: length does not match header");
  std::vector<VertexSet> rows(n);
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = text[1 + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) {
        rows[i].set(j);
        rows[j].set(i);
      }
    }
  }
  // Trailing padding must be zero.
  for (long b = nbits; b < nbytes * 6; ++b) {
    int byte = text[1 + b / 6] - 63;
    if ((byte >> (5 - b % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding");
  }
  return Graph::from_rows(n, std::move(rows));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << "\n";
  for (int u = 0; u < g.vertex_count(); ++u) {
    const VertexSet& nb = g.neighbors(u);
    for (int v = nb.next(u); v >= 0; v = nb.next(v)) out << u << " " << v << "\n";
  }
  return out.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (in >> u >> v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace neumaier

#include "neumaier/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "neumaier/spectrum.hpp"

namespace neumaier {

namespace {

constexpr int kMaxAutVertices = 40;

// Joint 1-dimensional Weisfeiler-Leman refinement of two graphs with
// individualized vertex sequences. Color ids are assigned canonically from
// the sorted signatures of both graphs together, so equal ids mean equal
// signatures across the pair. Returns false when the color histograms
// diverge (no isomorphism extending the individualization exists).
bool refine_joint(const Graph& a, const std::vector<int>& fixed_a, const Graph& b,
                  const std::vector<int>& fixed_b, std::vector<int>& col_a,
                  std::vector<int>& col_b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  col_a.assign(na, 0);
  col_b.assign(nb, 0);
  for (size_t i = 0; i < fixed_a.size(); ++i) col_a[fixed_a[i]] = static_cast<int>(i) + 1;
  for (size_t i = 0; i < fixed_b.size(); ++i) col_b[fixed_b[i]] = static_cast<int>(i) + 1;

  int ncolors = static_cast<int>(fixed_a.size()) + 1;
  while (true) {
    using Sig = std::vector<int>;
    auto signature = [](const Graph& g, const std::vector<int>& col, int v) {
      Sig s{col[v]};
      const VertexSet& nb_set = g.neighbors(v);
      for (int u = nb_set.first(); u >= 0; u = nb_set.next(u)) s.push_back(col[u]);
      std::sort(s.begin() + 1, s.end());
      return s;
    };
    std::vector<Sig> sig_a(na), sig_b(nb);
    std::map<Sig, int> ids;
    for (int v = 0; v < na; ++v) {
      sig_a[v] = signature(a, col_a, v);
      ids.emplace(sig_a[v], 0);
    }
    for (int v = 0; v < nb; ++v) {
      sig_b[v] = signature(b, col_b, v);
      ids.emplace(sig_b[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int v = 0; v < na; ++v) col_a[v] = ids.at(sig_a[v]);
    for (int v = 0; v < nb; ++v) col_b[v] = ids.at(sig_b[v]);
    if (next == ncolors) break;
    ncolors = next;
  }

  std::map<int, int> hist_a, hist_b;
  for (int c : col_a) ++hist_a[c];
  for (int c : col_b) ++hist_b[c];
  return hist_a == hist_b;
}

// Backtracking extension of the partial map fixed_a[i] -> fixed_b[i] to a
// full isomorphism, individualizing one vertex per level inside the
// smallest unresolved color class.
std::optional<std::vector<int>> extend_map(const Graph& a, std::vector<int>& fixed_a,
                                           const Graph& b, std::vector<int>& fixed_b) {
  std::vector<int> col_a, col_b;
  if (!refine_joint(a, fixed_a, b, fixed_b, col_a, col_b)) return std::nullopt;

  int n = a.vertex_count();
  // Pick the smallest color class of size > 1 (ties: smallest color id).
  std::map<int, std::vector<int>> cells;
  for (int v = 0; v < n; ++v) cells[col_a[v]].push_back(v);
  int branch_color = -1;
  size_t branch_size = 0;
  for (const auto& [color, members] : cells)
    if (members.size() > 1 && (branch_color < 0 || members.size() < branch_size)) {
      branch_color = color;
      branch_size = members.size();
    }

  if (branch_color < 0) {
    // Discrete coloring: the map is forced by matching color ids.
    std::vector<int> image(n, -1);
    std::map<int, int> where_b;
    for (int v = 0; v < n; ++v) where_b[col_b[v]] = v;
    for (int v = 0; v < n; ++v) image[v] = where_b.at(col_a[v]);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (a.adjacent(u, v) != b.adjacent(image[u], image[v])) return std::nullopt;
    return image;
  }

  int v = cells[branch_color].front();
  std::vector<int> targets;
  for (int u = 0; u < b.vertex_count(); ++u)
    if (col_b[u] == branch_color) targets.push_back(u);

  for (int u : targets) {
    fixed_a.push_back(v);
    fixed_b.push_back(u);
    auto result = extend_map(a, fixed_a, b, fixed_b);
    fixed_a.pop_back();
    fixed_b.pop_back();
    if (result) return result;
  }
  return std::nullopt;
}

std::vector<int> orbit_closure(int start, const std::vector<std::vector<int>>& gens) {
  std::set<int> orbit{start};
  std::vector<int> frontier{start};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier)
      for (const auto& gen : gens) {
        if (orbit.insert(gen[v]).second) next.push_back(gen[v]);
      }
    frontier = std::move(next);
  }
  return std::vector<int>(orbit.begin(), orbit.end());
}

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
  int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
  return true;
}

}  // namespace

AutReport automorphism_group(const Graph& g) {
  int n = g.vertex_count();
  if (n > kMaxAutVertices)
    throw std::invalid_argument("automorphism_group: vertex count exceeds 40");

  AutReport report;
  report.order = 1;

  std::vector<int> fixed;  // base prefix, fixed pointwise at deeper levels
  while (true) {
    std::vector<int> col_a, col_b;
    refine_joint(g, fixed, g, fixed, col_a, col_b);

    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[col_a[v]].push_back(v);
    int branch_color = -1;
    size_t branch_size = 0;
    for (const auto& [color, members] : cells)
      if (members.size() > 1 && (branch_color < 0 || members.size() < branch_size)) {
        branch_color = color;
        branch_size = members.size();
      }
    if (branch_color < 0) break;  // discrete: the prefix stabilizer is trivial

    const std::vector<int>& cell = cells[branch_color];
    int base = cell.front();
    std::vector<std::vector<int>> level_gens;
    std::set<int> orbit{base};
    for (int u : cell) {
      if (u == base || orbit.count(u)) continue;
      std::vector<int> fa = fixed, fb = fixed;
      fa.push_back(base);
      fb.push_back(u);
      auto sigma = extend_map(g, fa, g, fb);
      if (sigma) {
        level_gens.push_back(*sigma);
        report.generators.push_back(*sigma);
        for (int v : orbit_closure(base, level_gens)) orbit.insert(v);
      }
    }
    report.order *= static_cast<long long>(orbit.size());
    fixed.push_back(base);
  }

  // Orbits of the full group.
  std::vector<bool> seen(n, false);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<int> orbit = orbit_closure(v, report.generators);
    for (int u : orbit) seen[u] = true;
    report.orbits.push_back(std::move(orbit));
  }
  return report;
}

TransitivityReport is_vertex_transitive(const Graph& g) {
  AutReport aut = automorphism_group(g);
  TransitivityReport out;
  out.generators = aut.generators;
  out.transitive = aut.orbits.size() == 1;
  if (!out.transitive) return out;

  int n = g.vertex_count();
  out.words.assign(n, {});
  std::vector<bool> known(n, false);
  known[0] = true;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier)
      for (size_t i = 0; i < out.generators.size(); ++i) {
        int u = out.generators[i][v];
        if (!known[u]) {
          known[u] = true;
          out.words[u] = out.words[v];
          out.words[u].push_back(static_cast<int>(i));
          next.push_back(u);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

IsomorphismResult are_isomorphic(const Graph& g, const Graph& h) {
  IsomorphismResult out;
  if (g.vertex_count() != h.vertex_count()) {
    out.refutation = "vertex-count";
    return out;
  }
  if (g.vertex_count() > kMaxAutVertices)
    throw std::invalid_argument("are_isomorphic: vertex count exceeds 40");

  auto degrees = [](const Graph& x) {
    std::vector<int> d(x.vertex_count());
    for (int v = 0; v < x.vertex_count(); ++v) d[v] = x.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g) != degrees(h)) {
    out.refutation = "degree-sequence";
    return out;
  }

  std::vector<int> fa, fb, col_a, col_b;
  if (!refine_joint(g, fa, h, fb, col_a, col_b)) {
    out.refutation = "refinement";
    return out;
  }

  if (!(char_poly(g) == char_poly(h))) {
    out.refutation = "spectrum";
    return out;
  }

  auto bijection = extend_map(g, fa, h, fb);
  if (!bijection) {
    out.refutation = "exhausted-search";
    return out;
  }
  out.bijection = std::move(bijection);
  return out;
}

bool verify_transitive_subgroup(const Graph& g, const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) return g.vertex_count() == 1;
  for (const auto& gen : gens)
    if (!is_automorphism(g, gen)) return false;
  return static_cast<int>(orbit_closure(0, gens).size()) == g.vertex_count();
}

}  // namespace neumaier

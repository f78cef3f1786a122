#include "neumaier/cliques.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace neumaier {

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   const std::function<void(const VertexSet&)>& emit) {
  if (p.empty() && x.empty()) {
    emit(r);
    return;
  }
  // Pivot on the vertex of P u X with the most neighbors in P.
  int pivot = -1, best = -1;
  VertexSet px = p | x;
  for (int u = px.first(); u >= 0; u = px.next(u)) {
    int cnt = (p & g.neighbors(u)).count();
    if (cnt > best) {
      best = cnt;
      pivot = u;
    }
  }
  VertexSet candidates = p.and_not(g.neighbors(pivot));
  for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
    VertexSet rv = r;
    rv.set(v);
    bron_kerbosch(g, rv, p & g.neighbors(v), x & g.neighbors(v), emit);
    p.reset(v);
    x.set(v);
  }
}

void require_clique(const Graph& g, const VertexSet& c) {
  for (int u = c.first(); u >= 0; u = c.next(u))
    for (int v = c.next(u); v >= 0; v = c.next(v))
      if (!g.adjacent(u, v)) throw std::invalid_argument("nexus_of: set is not a clique");
}

}  // namespace

void maximal_cliques(const Graph& g, const std::function<void(const VertexSet&)>& emit) {
  bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, emit);
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  maximal_cliques(g, [&](const VertexSet& c) { out.push_back(c); });
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.to_vector() < b.to_vector(); });
  return out;
}

std::optional<int> nexus_of(const Graph& g, const VertexSet& c, NexusWitness* witness) {
  int size = c.count();
  if (size < 2 || size >= g.vertex_count())
    throw std::invalid_argument("nexus_of: clique size must be in [2, n)");
  require_clique(g, c);

  int nexus = -1, seen_at = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (c.test(v)) continue;
    int cnt = (g.neighbors(v) & c).count();
    if (nexus < 0) {
      nexus = cnt;
      seen_at = v;
    } else if (cnt != nexus) {
      if (witness) *witness = NexusWitness{seen_at, nexus, v, cnt};
      return std::nullopt;
    }
  }
  return nexus;
}

std::vector<RegularCliqueReport> find_regular_cliques(const Graph& g) {
  if (!g.connected())
    throw std::invalid_argument("find_regular_cliques: graph must be connected");
  if (g.is_complete())
    throw std::invalid_argument("find_regular_cliques: graph must be non-complete");
  std::vector<RegularCliqueReport> out;
  maximal_cliques(g, [&](const VertexSet& c) {
    int size = c.count();
    if (size < 2 || size >= g.vertex_count()) return;
    auto nexus = nexus_of(g, c);
    // Nexus a = c is impossible for a maximal clique; a = 0 cannot happen
    // in a connected graph with a proper clique.
    if (nexus && *nexus >= 1 && *nexus < size)
      out.push_back(RegularCliqueReport{c, size, nexus, std::nullopt});
  });
  std::sort(out.begin(), out.end(), [](const RegularCliqueReport& a, const RegularCliqueReport& b) {
    return a.clique.to_vector() < b.clique.to_vector();
  });
  return out;
}

std::string to_string(NeumaierVerdict v) {
  switch (v) {
    case NeumaierVerdict::NotEdgeRegular:
      return "NotEdgeRegular";
    case NeumaierVerdict::EdgeRegularNoRegularClique:
      return "EdgeRegularNoRegularClique";
    case NeumaierVerdict::Neumaier:
      return "Neumaier";
    case NeumaierVerdict::StrictlyNeumaier:
      return "StrictlyNeumaier";
    case NeumaierVerdict::StronglyRegularNeumaier:
      return "StronglyRegularNeumaier";
  }
  return "?";
}

namespace {

// Structural check for Lemma-forced shapes; throws on violation since a
// failure would contradict a proved statement about an already-classified
// graph.
void verify_neumaier_laws(const Graph& g, const NeumaierParams& p,
                          std::vector<RuleResult>& laws) {
  RuleResult counting = check_counting(p);
  RuleResult dc1 = check_dc1(p);
  RuleResult dc2 = check_dc2(p);
  RuleResult nexus1 = check_nexus_one(p);
  for (const RuleResult* r : {&counting, &dc1, &dc2, &nexus1})
    if (!r->pass) throw std::logic_error("classify: identity " + r->rule + " violated");
  laws.push_back(counting);
  laws.push_back(dc1);
  laws.push_back(dc2);
  laws.push_back(nexus1);

  if (p.lambda == 0 || p.c == 2) {
    // Must be the complete bipartite graph K_{k,k}: the non-neighborhood of
    // vertex 0 (plus 0 itself) forms one side.
    bool ok = p.n == 2 * p.k && p.lambda == 0 && p.c == 2 && p.a == 1;
    VertexSet side1 = g.neighbors(0);
    VertexSet side0 = g.vertices().and_not(side1);
    if (side0.count() != p.k || side1.count() != p.k) ok = false;
    for (int u = side0.first(); ok && u >= 0; u = side0.next(u))
      ok = (g.neighbors(u) & side0).empty() && (g.neighbors(u) & side1).count() == p.k;
    for (int u = side1.first(); ok && u >= 0; u = side1.next(u))
      ok = (g.neighbors(u) & side1).empty() && (g.neighbors(u) & side0).count() == p.k;
    if (!ok) throw std::logic_error("classify: lambda=0/c=2 graph is not K_{k,k}");
    laws.push_back(RuleResult{"complete-bipartite", true, 0, 0, "K_{k,k} bipartition verified"});
  }
  if (p.c == p.k) {
    bool ok = p.n == 4 && p.k == 2;
    if (!ok) throw std::logic_error("classify: c=k graph is not C4");
    laws.push_back(RuleResult{"c-equals-k", true, 0, 0, "C4 verified"});
  }
}

}  // namespace

NeumaierClassification classify(const Graph& g, const ClassifyOptions& opts) {
  if (!g.connected()) throw std::invalid_argument("classify: graph must be connected");
  if (g.is_complete()) throw std::invalid_argument("classify: graph must be non-complete");

  NeumaierClassification out;
  out.edge_regularity = edge_regularity(g);
  if (!out.edge_regularity.params) {
    out.verdict = NeumaierVerdict::NotEdgeRegular;
    return out;
  }
  out.srg = is_strongly_regular(g);

  if (opts.first_witness_only) {
    // Stop the enumeration at the first regular clique.
    struct Found {};
    RegularCliqueReport first;
    try {
      maximal_cliques(g, [&](const VertexSet& c) {
        int size = c.count();
        if (size < 2 || size >= g.vertex_count()) return;
        auto nexus = nexus_of(g, c);
        if (nexus && *nexus >= 1 && *nexus < size) {
          first = RegularCliqueReport{c, size, nexus, std::nullopt};
          throw Found{};
        }
      });
    } catch (const Found&) {
      out.regular_cliques.push_back(first);
    }
  } else {
    out.regular_cliques = find_regular_cliques(g);
  }

  if (out.regular_cliques.empty()) {
    out.verdict = NeumaierVerdict::EdgeRegularNoRegularClique;
    return out;
  }

  // Size and nexus must be independent of the clique choice.
  int c = out.regular_cliques.front().size;
  int a = *out.regular_cliques.front().nexus;
  for (const RegularCliqueReport& r : out.regular_cliques)
    if (r.size != c || *r.nexus != a)
      throw std::logic_error("classify: regular cliques with different (c,a) found");

  const EdgeRegularParams& er = *out.edge_regularity.params;
  out.params = NeumaierParams{er.n, er.k, er.lambda, a, c};
  verify_neumaier_laws(g, *out.params, out.laws);

  out.verdict = out.srg ? NeumaierVerdict::StronglyRegularNeumaier
                        : NeumaierVerdict::StrictlyNeumaier;
  return out;
}

FourPartPartition equitable_partition(const Graph& g, const VertexSet& clique, int e) {
  if (!clique.test(e)) throw std::invalid_argument("equitable_partition: e must lie in the clique");
  require_clique(g, clique);

  FourPartPartition out;
  VertexSet pe = VertexSet::single(e);
  VertexSet s = g.neighbors(e);
  VertexSet c_minus = clique;
  c_minus.reset(e);
  VertexSet s_minus_c = s.and_not(clique);
  VertexSet rest = g.vertices().and_not(s | pe);
  out.parts = {pe, c_minus, s_minus_c, rest};

  // Rows 0..2 are forced by the proof; verify them against actual counts.
  for (int row = 0; row < 3; ++row) {
    const VertexSet& part = out.parts[row];
    std::array<int, 4> counts{-1, -1, -1, -1};
    for (int v = part.first(); v >= 0; v = part.next(v)) {
      for (int col = 0; col < 4; ++col) {
        int cnt = (g.neighbors(v) & out.parts[col]).count();
        if (counts[col] < 0)
          counts[col] = cnt;
        else if (counts[col] != cnt)
          throw std::logic_error("equitable_partition: forced row is not constant");
      }
    }
    out.quotient[row] = counts;
  }

  // Row 3 decides equitability: the count into S\C may vary.
  std::array<int, 4> row3{-1, -1, -1, -1};
  out.equitable = true;
  int seen_at = -1;
  for (int v = rest.first(); v >= 0; v = rest.next(v)) {
    int into_sc = (g.neighbors(v) & s_minus_c).count();
    if (row3[2] < 0) {
      for (int col = 0; col < 4; ++col) row3[col] = (g.neighbors(v) & out.parts[col]).count();
      seen_at = v;
    } else if (into_sc != row3[2]) {
      out.equitable = false;
      out.witness = NexusWitness{seen_at, row3[2], v, into_sc};
      break;
    }
  }
  if (out.equitable) {
    out.quotient[3] = row3;
  } else {
    out.quotient[3] = {row3[0], row3[1], -1, -1};
  }
  return out;
}

ConstancyVerdict srg_iff_constancy(const Graph& g, bool vertex_transitivity_certified) {
  if (!vertex_transitivity_certified)
    throw std::invalid_argument("srg_iff_constancy: vertex transitivity must be certified");
  NeumaierClassification cls = classify(g);
  if (!cls.neumaier())
    throw std::invalid_argument("srg_iff_constancy: graph is not Neumaier");

  ConstancyVerdict out;
  out.strongly_regular = cls.srg.has_value();
  out.constant = true;
  for (const RegularCliqueReport& r : cls.regular_cliques) {
    for (int e = r.clique.first(); e >= 0; e = r.clique.next(e)) {
      FourPartPartition part = equitable_partition(g, r.clique, e);
      if (!part.equitable) {
        out.constant = false;
        break;
      }
    }
    if (!out.constant) break;
  }
  out.consistent = out.strongly_regular == out.constant;
  return out;
}

EdgeBound edge_lower_bound(const NeumaierParams& p) {
  using Rational = boost::multiprecision::cpp_rational;
  Rational k = p.k, lambda = p.lambda, a = p.a, c = p.c;
  Rational half1 = (k - c + 1) * (lambda - a + 1) / 2;
  Rational half2 = (c - 1) * (c - 2) / 2;
  if (boost::multiprecision::denominator(half1) != 1)
    throw std::invalid_argument("edge_lower_bound: (k-c+1)(lambda-a+1)/2 is not an integer");
  if (boost::multiprecision::denominator(half2) != 1)
    throw std::invalid_argument("edge_lower_bound: (c-1)(c-2)/2 is not an integer");
  Rational bound = k * (k - lambda) + (k - c + 1) * (a - 1) + half1 + half2;

  EdgeBound out;
  out.bound = boost::multiprecision::numerator(bound).convert_to<long long>();
  out.edges = static_cast<long long>(p.n) * p.k / 2;
  out.holds = out.edges >= out.bound;
  return out;
}

}  // namespace neumaier

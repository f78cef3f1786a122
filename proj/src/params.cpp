#include "neumaier/params.hpp"

#include <algorithm>
#include <stdexcept>

#include "neumaier/spectrum.hpp"

namespace neumaier {

namespace {

RuleResult identity(std::string rule, long long lhs, long long rhs, std::string note = {}) {
  return RuleResult{std::move(rule), lhs == rhs, lhs, rhs, std::move(note)};
}

bool ranges_ok(const NeumaierParams& p) {
  return 1 <= p.a && p.a < p.c && p.c <= p.k && p.k < p.n && 0 <= p.lambda &&
         p.lambda <= p.k - 1;
}

}  // namespace

RuleResult check_counting(const NeumaierParams& p) {
  return identity("counting", static_cast<long long>(p.c) * (p.k - p.c + 1),
                  static_cast<long long>(p.n - p.c) * p.a);
}

RuleResult check_dc1(const NeumaierParams& p) {
  return identity("double-counting-1", static_cast<long long>(p.k - p.c + 1) * (p.a - 1),
                  static_cast<long long>(p.c - 1) * (p.lambda - p.c + 2));
}

RuleResult check_dc2(const NeumaierParams& p) {
  return identity("double-counting-2", static_cast<long long>(p.c - 1) * (p.k - p.lambda - 1),
                  static_cast<long long>(p.n - p.k - 1) * p.a);
}

RuleResult check_nexus_one(const NeumaierParams& p) {
  if (p.a != 1) return RuleResult{"nexus-one", true, 0, 0, "not applicable (a != 1)"};
  if (p.lambda != p.c - 2)
    return RuleResult{"nexus-one", false, p.lambda, p.c - 2, "lambda != c-2"};
  long long slack = static_cast<long long>(p.k) - 2 * p.c + 3;
  return RuleResult{"nexus-one", slack > 0, slack, 0,
                    slack > 0 ? "" : "k-2c+3 must be positive"};
}

RuleResult check_degenerate(const NeumaierParams& p) {
  if (p.c == p.k) {
    bool ok = p.n == 4 && p.k == 2 && p.lambda == 0 && p.a == 1 && p.c == 2;
    return RuleResult{"degenerate", ok, 0, 0, ok ? "c=k: C4" : "c=k forces (4,2,0;1,2)"};
  }
  if (p.lambda == 0 || p.c == 2) {
    bool ok = p.lambda == 0 && p.c == 2 && p.a == 1 && p.n == 2 * p.k;
    return RuleResult{"degenerate", ok, 0, 0,
                      ok ? "complete bipartite K_{k,k}" : "lambda=0 or c=2 forces K_{k,k}"};
  }
  return RuleResult{"degenerate", true, 0, 0, "not applicable"};
}

std::vector<RuleResult> check_srg_identities(const SrgNeumaierParams& p) {
  const auto& b = p.base;
  std::vector<RuleResult> out;
  out.push_back(identity("srg-eq1", static_cast<long long>(b.k - b.c + 1) * (b.k - b.lambda - 1),
                         static_cast<long long>(b.n - b.k - 1) * (p.mu - b.a)));
  out.push_back(identity("srg-eq2", static_cast<long long>(p.mu) * (b.c - b.a - 1),
                         static_cast<long long>(b.a) * (b.k - p.mu)));
  return out;
}

int max_vertices(int k, bool diameter2) {
  if (k < 2) throw std::invalid_argument("max_vertices: k must be at least 2");
  if (diameter2) {
    long long moore = 1 + static_cast<long long>(k) + static_cast<long long>(k) * (k - 2);
    return static_cast<int>(std::max(moore, 2LL * k));
  }
  // Counting bound n <= c(k-c+2), maximized over clique sizes; the paper's
  // small-valency lemma caps the k <= 10 case at 35.
  long long best = 0;
  for (int c = 2; c <= k; ++c)
    best = std::max(best, static_cast<long long>(c) * (k - c + 2));
  if (k <= 10) best = std::min(best, 35LL);
  return static_cast<int>(best);
}

FeasibilityReport feasibility(const NeumaierParams& p) {
  FeasibilityReport report;
  report.rules.push_back(
      RuleResult{"ranges", ranges_ok(p), 0, 0, "1 <= a < c <= k < n, 0 <= lambda <= k-1"});
  report.rules.push_back(check_counting(p));
  report.rules.push_back(check_dc1(p));
  report.rules.push_back(check_dc2(p));
  report.rules.push_back(check_nexus_one(p));
  report.rules.push_back(check_degenerate(p));
  report.feasible = std::all_of(report.rules.begin(), report.rules.end(),
                                [](const RuleResult& r) { return r.pass; });
  return report;
}

FeasibilityReport feasibility(const SrgNeumaierParams& p) {
  FeasibilityReport report = feasibility(p.base);
  report.rules.push_back(RuleResult{"mu-range", 0 < p.mu && p.mu <= p.base.k, p.mu, 0,
                                    "0 < mu <= k"});
  for (RuleResult& r : check_srg_identities(p)) report.rules.push_back(std::move(r));
  RatioCheck ratio = srg_integer_ratio(p);
  report.rules.push_back(RuleResult{"integer-eigenvalue-ratio", ratio.ok, ratio.m, 0,
                                    ratio.ok ? "" : ratio.reason});
  report.feasible = std::all_of(report.rules.begin(), report.rules.end(),
                                [](const RuleResult& r) { return r.pass; });
  return report;
}

std::vector<NeumaierParams> enumerate_feasible(int k_max) {
  if (k_max > 12) throw std::invalid_argument("enumerate_feasible: k_max exceeds 12");
  std::vector<NeumaierParams> out;
  for (int k = 2; k <= k_max; ++k) {
    int n_max = max_vertices(k, false);
    for (int n = k + 2; n <= n_max; ++n)
      for (int lambda = 0; lambda < k; ++lambda)
        for (int c = 2; c <= k; ++c)
          for (int a = 1; a < c; ++a) {
            NeumaierParams p{n, k, lambda, a, c};
            if (feasibility(p).feasible) out.push_back(p);
          }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SrgNeumaierParams> enumerate_srg_feasible(int k_max) {
  std::vector<SrgNeumaierParams> out;
  for (const NeumaierParams& base : enumerate_feasible(k_max))
    for (int mu = 1; mu <= base.k; ++mu) {
      SrgNeumaierParams p{base, mu};
      if (feasibility(p).feasible) out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace neumaier

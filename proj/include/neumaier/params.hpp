#pragma once

#include <string>
#include <vector>

namespace neumaier {

// Parameter tuple (n,k,lambda;a,c) of a Neumaier graph: edge-regular with
// parameters (n,k,lambda) and a regular clique of size c with nexus a.
struct NeumaierParams {
  int n = 0, k = 0, lambda = 0, a = 0, c = 0;
  bool operator==(const NeumaierParams&) const = default;
  auto operator<=>(const NeumaierParams&) const = default;
};

// (n,k,lambda,mu;a,c): additionally strongly regular with mu.
struct SrgNeumaierParams {
  NeumaierParams base;
  int mu = 0;
  bool operator==(const SrgNeumaierParams&) const = default;
  auto operator<=>(const SrgNeumaierParams&) const = default;
};

// One arithmetic rule applied to a tuple, reporting both sides for audit.
struct RuleResult {
  std::string rule;
  bool pass = false;
  long long lhs = 0, rhs = 0;
  std::string note;
};

struct FeasibilityReport {
  std::vector<RuleResult> rules;
  bool feasible = false;
};

// c(k-c+1) = (n-c)a
RuleResult check_counting(const NeumaierParams& p);
// (k-c+1)(a-1) = (c-1)(lambda-c+2)
RuleResult check_dc1(const NeumaierParams& p);
// (c-1)(k-lambda-1) = (n-k-1)a
RuleResult check_dc2(const NeumaierParams& p);
// When a = 1: lambda = c-2 and k-2c+3 > 0.
RuleResult check_nexus_one(const NeumaierParams& p);
// c = k forces (4,2,0;1,2); lambda = 0 or c = 2 forces the K_{k,k} tuple.
RuleResult check_degenerate(const NeumaierParams& p);
// (k-c+1)(k-lambda-1) = (n-k-1)(mu-a)  and  mu(c-a-1) = a(k-mu)
std::vector<RuleResult> check_srg_identities(const SrgNeumaierParams& p);

// Vertex bound: with diameter2, max{1+k+k(k-2), 2k}; otherwise the counting
// bound, capped at 35 for k <= 10.
int max_vertices(int k, bool diameter2);

// Every applicable rule for the tuple, plus range sanity.
FeasibilityReport feasibility(const NeumaierParams& p);
// Adds the two strongly regular identities and the integer-eigenvalue
// ratio test.
FeasibilityReport feasibility(const SrgNeumaierParams& p);

// All tuples with k <= k_max passing every rule, in lexicographic
// (n,k,lambda,a,c) order. k_max <= 12.
std::vector<NeumaierParams> enumerate_feasible(int k_max);
std::vector<SrgNeumaierParams> enumerate_srg_feasible(int k_max);

}  // namespace neumaier

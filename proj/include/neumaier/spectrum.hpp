#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "neumaier/bigint.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/params.hpp"

namespace neumaier {

// Monic polynomial with arbitrary-precision integer coefficients, stored
// low degree first. Characteristic polynomials have degree equal to the
// vertex count; residual factors may have any degree (constant 1 included).
class CharPoly {
 public:
  // Coefficients c[0] + c[1] x + ... ; the leading coefficient must be 1.
  explicit CharPoly(std::vector<BigInt> coeffs);

  static CharPoly one() { return CharPoly({BigInt(1)}); }
  // x - root
  static CharPoly linear(const BigInt& root) { return CharPoly({-root, BigInt(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& coeff(int i) const { return c_[i]; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt eval(const BigInt& x) const;
  CharPoly operator*(const CharPoly& o) const;
  // Exact division by (x - r); empty when the remainder is nonzero.
  std::optional<CharPoly> divide_linear(const BigInt& r) const;

  bool operator==(const CharPoly&) const = default;

 private:
  std::vector<BigInt> c_;
};

struct SpectrumReport {
  std::map<long long, int> integer_roots;  // eigenvalue -> multiplicity
  CharPoly residual = CharPoly::one();     // no integer roots remain

  // Re-expands prod (x-r)^mult * residual.
  CharPoly reconstruct() const;
};

// Exact characteristic polynomial of the adjacency matrix via the
// Faddeev-LeVerrier recurrence in big integers. Requires n <= 64.
CharPoly char_poly(const Graph& g);

// Strips the root 0 by valuation, then all integer roots with exact
// multiplicities by trial division over divisors of the constant term.
SpectrumReport integer_spectrum(const CharPoly& p);

struct EigenvalueCheck {
  bool ok = false;
  // The required eigenvalue that is absent from the spectrum, if any.
  std::optional<long long> missing;
  std::string reason;
};

// Asserts that k and c-a-1 are distinct integer roots of char_poly(g).
EigenvalueCheck verify_neumaier_eigenvalues(const Graph& g, const NeumaierParams& p);

struct RatioCheck {
  bool ok = false;
  long long m = 0;  // mu / a when integral
  std::string reason;
};

// Passes iff a | mu, the Hoffman identities c = 1 + k/m and a = mu/m hold
// with m = mu/a, and -m is a root of x^2 - (lambda-mu)x - (k-mu).
RatioCheck srg_integer_ratio(const SrgNeumaierParams& p);

}  // namespace neumaier

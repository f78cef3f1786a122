#include "neumaier/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace neumaier {

CharPoly::CharPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("polynomial: no coefficients");
  if (c_.back() != 1) throw std::invalid_argument("polynomial: must be monic");
}

BigInt CharPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

CharPoly CharPoly::operator*(const CharPoly& o) const {
  std::vector<BigInt> out(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return CharPoly(std::move(out));
}

std::optional<CharPoly> CharPoly::divide_linear(const BigInt& r) const {
  if (degree() < 1) return std::nullopt;
  // Synthetic division; the running value ends as the remainder p(r).
  std::vector<BigInt> q(static_cast<size_t>(degree()), BigInt(0));
  BigInt carry = 0;
  for (int i = degree(); i >= 1; --i) {
    carry = carry * r + c_[i];
    q[i - 1] = carry;
  }
  if (carry * r + c_[0] != 0) return std::nullopt;
  return CharPoly(std::move(q));
}

CharPoly SpectrumReport::reconstruct() const {
  CharPoly p = residual;
  for (const auto& [root, mult] : integer_roots)
    for (int i = 0; i < mult; ++i) p = p * CharPoly::linear(BigInt(root));
  return p;
}

CharPoly char_poly(const Graph& g) {
  int n = g.vertex_count();
  if (n > 64) throw std::invalid_argument("char_poly: vertex count exceeds 64");

  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  // All divisions are exact, so the computation stays in integers.
  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  coeffs[n] = 1;
  std::vector<std::vector<BigInt>> M(n, std::vector<BigInt>(n, BigInt(0)));
  std::vector<std::vector<BigInt>> AM(n, std::vector<BigInt>(n, BigInt(0)));

  for (int k = 1; k <= n; ++k) {
    // AM = A * M, using the bitset rows of A.
    for (int i = 0; i < n; ++i) {
      const VertexSet& row = g.neighbors(i);
      for (int j = 0; j < n; ++j) {
        BigInt sum = 0;
        for (int t = row.first(); t >= 0; t = row.next(t)) sum += M[t][j];
        AM[i][j] = sum;
      }
    }
    // M_k = AM + c_{n-k+1} I
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) M[i][j] = AM[i][j];
      M[i][i] += coeffs[n - k + 1];
    }
    // trace(A * M_k)
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) {
      const VertexSet& row = g.neighbors(i);
      for (int t = row.first(); t >= 0; t = row.next(t)) tr += M[t][i];
    }
    BigInt c = -tr / k;
    if (c * k != -tr) throw std::logic_error("char_poly: non-exact division");
    coeffs[n - k] = c;
  }
  return CharPoly(std::move(coeffs));
}

namespace {

// Integer k-th root (floor) by binary search.
BigInt iroot(const BigInt& v, int k) {
  if (v <= 1) return v;
  BigInt lo = 1, hi = 2;
  while (boost::multiprecision::pow(hi, static_cast<unsigned>(k)) <= v) hi <<= 1;
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(k)) <= v)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// Fujiwara bound: every root z of a monic p satisfies
// |z| <= 2 * max_j |c_{deg-j}|^{1/j}.
BigInt root_bound(const CharPoly& p) {
  BigInt best = 0;
  int deg = p.degree();
  for (int j = 1; j <= deg; ++j) {
    BigInt a = boost::multiprecision::abs(p.coeff(deg - j));
    if (a == 0) continue;
    BigInt r = iroot(a, j) + 1;
    if (r > best) best = r;
  }
  return 2 * best;
}

}  // namespace

SpectrumReport integer_spectrum(const CharPoly& p) {
  SpectrumReport report;
  CharPoly cur = p;

  // Root 0 by valuation.
  int zeros = 0;
  while (cur.degree() >= 1 && cur.coeff(0) == 0) {
    cur = *cur.divide_linear(BigInt(0));
    ++zeros;
  }
  if (zeros > 0) report.integer_roots[0] = zeros;

  if (cur.degree() >= 1) {
    BigInt bound = root_bound(cur);
    for (BigInt r = -bound; r <= bound; ++r) {
      if (r == 0 || cur.degree() < 1) continue;
      if (cur.coeff(0) % r != 0) continue;
      int mult = 0;
      while (auto q = cur.divide_linear(r)) {
        cur = *q;
        ++mult;
      }
      if (mult > 0) report.integer_roots[static_cast<long long>(r)] = mult;
    }
  }
  report.residual = cur;
  return report;
}

EigenvalueCheck verify_neumaier_eigenvalues(const Graph& g, const NeumaierParams& p) {
  EigenvalueCheck out;
  long long theta = static_cast<long long>(p.c) - p.a - 1;
  if (theta == p.k) {
    out.reason = "k and c-a-1 are not distinct";
    return out;
  }
  SpectrumReport sp = integer_spectrum(char_poly(g));
  if (!sp.integer_roots.count(p.k)) {
    out.missing = p.k;
    out.reason = "k is not an integer eigenvalue";
    return out;
  }
  if (!sp.integer_roots.count(theta)) {
    out.missing = theta;
    out.reason = "c-a-1 is not an integer eigenvalue";
    return out;
  }
  out.ok = true;
  return out;
}

RatioCheck srg_integer_ratio(const SrgNeumaierParams& p) {
  RatioCheck out;
  const auto& b = p.base;
  if (p.mu < 1 || b.a < 1) {
    out.reason = "requires mu >= 1 and a >= 1";
    return out;
  }
  if (p.mu % b.a != 0) {
    out.reason = "a does not divide mu";
    return out;
  }
  long long m = p.mu / b.a;
  out.m = m;
  // Hoffman identities: c = 1 + k/m and a = mu/m.
  if (m == 0 || b.k % m != 0 || b.c != 1 + b.k / m) {
    out.reason = "Hoffman identity c = 1 + k/m fails";
    return out;
  }
  if (p.mu % m != 0 || b.a != p.mu / m) {
    out.reason = "Hoffman identity a = mu/m fails";
    return out;
  }
  // -m must be an eigenvalue: root of x^2 - (lambda-mu)x - (k-mu).
  long long lm = b.lambda - p.mu;
  if (m * m + lm * m - (b.k - p.mu) != 0) {
    out.reason = "-mu/a is not a root of x^2-(lambda-mu)x-(k-mu)";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace neumaier

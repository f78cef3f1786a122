#include "neumaier/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace neumaier {

namespace {

constexpr int kMaxOrder = 64;

// --- permutation helpers (vectors mapping point -> image, 0-based) ---

std::vector<std::vector<int>> all_permutations(int n, bool even_only) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // Lexicographic order puts the identity first.
  return out;
}

std::string cycle_notation(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p[i] == i) continue;
    any = true;
    out << "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ",";
      out << (j + 1);
      first = false;
      j = p[j];
    }
    out << ")";
  }
  return any ? out.str() : "e";
}

// Parses cycle notation like "(1,2,4)(3,5)" on points 1..n; "e" or "()" is
// the identity. Rejects out-of-range or repeated points.
std::optional<std::vector<int>> parse_cycles(std::string_view text, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s == "e" || s == "()" || s.empty()) return p;
  std::vector<bool> used(n, false);
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') return std::nullopt;
    size_t close = s.find(')', i);
    if (close == std::string::npos) return std::nullopt;
    std::vector<int> cyc;
    std::stringstream body(s.substr(i + 1, close - i - 1));
    std::string tok;
    while (std::getline(body, tok, ',')) {
      if (tok.empty()) return std::nullopt;
      int v;
      try {
        v = std::stoi(tok);
      } catch (...) {
        return std::nullopt;
      }
      if (v < 1 || v > n || used[v - 1]) return std::nullopt;
      used[v - 1] = true;
      cyc.push_back(v - 1);
    }
    if (cyc.size() < 2) return std::nullopt;
    for (size_t j = 0; j < cyc.size(); ++j) p[cyc[j]] = cyc[(j + 1) % cyc.size()];
    i = close + 1;
  }
  return p;
}

bool is_even(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::optional<long long> parse_int(std::string_view text) {
  if (text.empty()) return std::nullopt;
  size_t pos = 0;
  try {
    std::string s(text);
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) return std::nullopt;
    return v;
  } catch (...) {
    return std::nullopt;
  }
}

int mod(long long v, int m) { return static_cast<int>(((v % m) + m) % m); }

}  // namespace

GroupSpec GroupSpec::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("group: cyclic modulus must be positive");
  GroupSpec s;
  s.kind = Kind::Cyclic;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::dihedral(int order) {
  if (order < 4 || order % 2) throw std::invalid_argument("group: dihedral order must be even and >= 4");
  GroupSpec s;
  s.kind = Kind::Dihedral;
  s.n = order;
  return s;
}

GroupSpec GroupSpec::sym(int letters) {
  if (letters < 1 || letters > 5) throw std::invalid_argument("group: sym supports 1..5 letters");
  GroupSpec s;
  s.kind = Kind::Sym;
  s.n = letters;
  return s;
}

GroupSpec GroupSpec::alt(int letters) {
  if (letters < 1 || letters > 5) throw std::invalid_argument("group: alt supports 1..5 letters");
  GroupSpec s;
  s.kind = Kind::Alt;
  s.n = letters;
  return s;
}

GroupSpec GroupSpec::product(GroupSpec l, GroupSpec r) {
  GroupSpec s;
  s.kind = Kind::Product;
  s.left = std::make_shared<GroupSpec>(std::move(l));
  s.right = std::make_shared<GroupSpec>(std::move(r));
  return s;
}

GroupSpec GroupSpec::parse(std::string_view text) {
  // Split on 'x' between factor atoms: "A4xZ2" -> product(alt 4, cyclic 2).
  std::vector<std::string> atoms;
  std::string cur;
  for (char ch : text) {
    if (ch == 'x' || ch == 'X') {
      atoms.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  atoms.push_back(cur);

  auto atom = [](const std::string& a) -> GroupSpec {
    if (a.size() < 2) throw std::invalid_argument("group: bad spec atom \"" + a + "\"");
    auto num = parse_int(std::string_view(a).substr(1));
    if (!num) throw std::invalid_argument("group: bad spec atom \"" + a + "\"");
    int n = static_cast<int>(*num);
    switch (a[0]) {
      case 'Z':
      case 'z':
        return cyclic(n);
      case 'D':
      case 'd':
        return dihedral(n);
      case 'S':
      case 's':
        return sym(n);
      case 'A':
      case 'a':
        return alt(n);
      default:
        throw std::invalid_argument("group: bad spec atom \"" + a + "\"");
    }
  };

  GroupSpec result = atom(atoms[0]);
  for (size_t i = 1; i < atoms.size(); ++i) result = product(std::move(result), atom(atoms[i]));
  return result;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Cyclic:
      return "Z" + std::to_string(n);
    case Kind::Dihedral:
      return "D" + std::to_string(n);
    case Kind::Sym:
      return "S" + std::to_string(n);
    case Kind::Alt:
      return "A" + std::to_string(n);
    case Kind::Product:
      return left->to_string() + "x" + right->to_string();
  }
  return {};
}

FiniteGroup FiniteGroup::make(const GroupSpec& spec) {
  FiniteGroup g;
  g.spec_ = spec;

  auto build_names_and_mul = [&](auto&& self, const GroupSpec& s, std::vector<std::string>& names,
                                 std::vector<int>& mul) -> int {
    switch (s.kind) {
      case GroupSpec::Kind::Cyclic: {
        int n = s.n;
        names.resize(n);
        for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
        mul.resize(n * n);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
        return n;
      }
      case GroupSpec::Kind::Dihedral: {
        // Elements b^s a^i with a^m = b^2 = (ba)^2 = e; index = s*m + i.
        int m = s.n / 2, n = s.n;
        names.resize(n);
        for (int i = 0; i < m; ++i) {
          names[i] = (i == 0) ? "e" : (i == 1 ? "a" : "a" + std::to_string(i));
          names[m + i] = (i == 0) ? "b" : (i == 1 ? "ba" : "ba" + std::to_string(i));
        }
        mul.resize(n * n);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            int sx = x / m, ix = x % m, sy = y / m, iy = y % m;
            // (b^sx a^ix)(b^sy a^iy) = b^(sx+sy) a^(iy + (-1)^sy ix)
            int sign = sy ? -1 : 1;
            int iz = ((iy + sign * ix) % m + m) % m;
            mul[x * n + y] = ((sx + sy) % 2) * m + iz;
          }
        return n;
      }
      case GroupSpec::Kind::Sym:
      case GroupSpec::Kind::Alt: {
        auto perms = all_permutations(s.n, s.kind == GroupSpec::Kind::Alt);
        int n = static_cast<int>(perms.size());
        std::map<std::vector<int>, int> index;
        names.resize(n);
        for (int i = 0; i < n; ++i) {
          index[perms[i]] = i;
          names[i] = cycle_notation(perms[i]);
        }
        mul.resize(n * n);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            // (p*q)(x) = p(q(x))
            std::vector<int> prod(s.n);
            for (int x = 0; x < s.n; ++x) prod[x] = perms[a][perms[b][x]];
            mul[a * n + b] = index.at(prod);
          }
        return n;
      }
      case GroupSpec::Kind::Product: {
        std::vector<std::string> ln, rn;
        std::vector<int> lm, rm;
        int lo = self(self, *s.left, ln, lm);
        int ro = self(self, *s.right, rn, rm);
        int n = lo * ro;
        names.resize(n);
        mul.resize(n * n);
        for (int a = 0; a < n; ++a) {
          names[a] = "(" + ln[a / ro] + "," + rn[a % ro] + ")";
          for (int b = 0; b < n; ++b) {
            int l = lm[(a / ro) * lo + b / ro];
            int r = rm[(a % ro) * ro + b % ro];
            mul[a * n + b] = l * ro + r;
          }
        }
        return n;
      }
    }
    throw std::logic_error("group: unreachable");
  };

  g.order_ = build_names_and_mul(build_names_and_mul, spec, g.names_, g.mul_);
  if (g.order_ > kMaxOrder)
    throw std::invalid_argument("group: order " + std::to_string(g.order_) + " exceeds 64");

  int n = g.order_;
  // Identity must sit at index 0 by construction.
  for (int a = 0; a < n; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      throw std::logic_error("group: element 0 is not the identity");

  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0) throw std::logic_error("group: missing inverse");
  }

  // Exhaustive associativity check; orders are tiny.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw std::logic_error("group: associativity violated");

  return g;
}

std::optional<int> FiniteGroup::find_element(std::string_view text) const {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());

  // Exact name match first.
  for (int i = 0; i < order_; ++i)
    if (names_[i] == s) return i;

  switch (spec_.kind) {
    case GroupSpec::Kind::Cyclic: {
      auto v = parse_int(s);
      if (!v) return std::nullopt;
      return mod(*v, spec_.n);
    }
    case GroupSpec::Kind::Dihedral: {
      int m = spec_.n / 2;
      int refl = 0;
      std::string_view rest = s;
      if (!rest.empty() && (rest[0] == 'b' || rest[0] == 'B')) {
        refl = 1;
        rest.remove_prefix(1);
      }
      long long exp = 0;
      if (!rest.empty()) {
        if (rest[0] != 'a' && rest[0] != 'A') return std::nullopt;
        rest.remove_prefix(1);
        if (!rest.empty() && rest[0] == '^') rest.remove_prefix(1);
        if (rest.empty()) {
          exp = 1;
        } else {
          auto v = parse_int(rest);
          if (!v) return std::nullopt;
          exp = *v;
        }
      } else if (!s.empty() && (s == "e" || s == "E")) {
        exp = 0;
      } else if (refl == 0) {
        return std::nullopt;
      }
      return refl * m + mod(exp, m);
    }
    case GroupSpec::Kind::Sym:
    case GroupSpec::Kind::Alt: {
      auto p = parse_cycles(s, spec_.n);
      if (!p) return std::nullopt;
      if (spec_.kind == GroupSpec::Kind::Alt && !is_even(*p)) return std::nullopt;
      for (int i = 0; i < order_; ++i)
        if (names_[i] == cycle_notation(*p)) return i;
      return std::nullopt;
    }
    case GroupSpec::Kind::Product: {
      const GroupSpec& l = *spec_.left;
      const GroupSpec& r = *spec_.right;
      // Products of two cyclic groups accept "(x,y)".
      if (l.kind == GroupSpec::Kind::Cyclic && r.kind == GroupSpec::Kind::Cyclic &&
          s.size() >= 5 && s.front() == '(' && s.back() == ')') {
        size_t comma = s.find(',');
        if (comma == std::string::npos) return std::nullopt;
        auto x = parse_int(std::string_view(s).substr(1, comma - 1));
        auto y = parse_int(std::string_view(s).substr(comma + 1, s.size() - comma - 2));
        if (!x || !y) return std::nullopt;
        return mod(*x, l.n) * r.n + mod(*y, r.n);
      }
      // (Sym|Alt)(n) x Z2 accepts cycle notation on n+2 points, the last
      // two points realizing the Z2 factor (the paper's A4 x <(5,6)> style).
      if ((l.kind == GroupSpec::Kind::Sym || l.kind == GroupSpec::Kind::Alt) &&
          r.kind == GroupSpec::Kind::Cyclic && r.n == 2) {
        int pts = l.n + 2;
        auto p = parse_cycles(s, pts);
        if (!p) return std::nullopt;
        std::vector<int> head(p->begin(), p->begin() + l.n);
        for (int i = 0; i < l.n; ++i)
          if (head[i] >= l.n) return std::nullopt;
        int tail0 = (*p)[l.n];
        int z2 = (tail0 == l.n) ? 0 : 1;
        if ((*p)[l.n + 1] != (z2 ? l.n : l.n + 1)) return std::nullopt;
        if (l.kind == GroupSpec::Kind::Alt && !is_even(head)) return std::nullopt;
        std::string want = "(" + cycle_notation(head) + "," + std::to_string(z2) + ")";
        for (int i = 0; i < order_; ++i)
          if (names_[i] == want) return i;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

ConnectionSet connection_set_from_names(const FiniteGroup& g,
                                        const std::vector<std::string>& names) {
  std::set<int> elems;
  for (const std::string& name : names) {
    auto e = g.find_element(name);
    if (!e) throw std::invalid_argument("connection set: unknown element \"" + name + "\"");
    elems.insert(*e);
  }
  ConnectionSet s;
  s.elements.assign(elems.begin(), elems.end());
  return s;
}

ConnectionSetVerdict validate_connection_set(const FiniteGroup& g, const ConnectionSet& s) {
  ConnectionSetVerdict v;
  std::set<int> elems(s.elements.begin(), s.elements.end());
  for (int e : elems)
    if (e < 0 || e >= g.order()) throw std::invalid_argument("connection set: index out of range");

  v.identity_free = !elems.count(g.identity());
  v.inverse_closed = true;
  for (int e : elems)
    if (!elems.count(g.inv(e))) {
      v.inverse_closed = false;
      break;
    }

  // Closure of <S> by BFS over right multiplication.
  std::set<int> gen{g.identity()};
  std::vector<int> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int e : elems) {
        int y = g.mul(e, x);
        if (gen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  v.generates = static_cast<int>(gen.size()) == g.order();

  v.ok = v.identity_free && v.inverse_closed;
  if (!v.identity_free)
    v.reason = "contains the identity";
  else if (!v.inverse_closed)
    v.reason = "not inverse-closed";
  else if (!v.generates)
    v.reason = "does not generate the group (graph would be disconnected)";
  return v;
}

Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& s) {
  ConnectionSetVerdict v = validate_connection_set(g, s);
  if (!v.ok || !v.generates)
    throw std::invalid_argument("cayley_graph: invalid connection set: " + v.reason);
  int n = g.order();
  std::set<int> elems(s.elements.begin(), s.elements.end());
  std::vector<VertexSet> rows(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && elems.count(g.mul(x, g.inv(y)))) rows[x].set(y);
  return Graph::from_rows(n, std::move(rows), "Cay(" + g.spec().to_string() + ")");
}

SubgroupCliqueVerdict subgroup_clique_identity(const FiniteGroup& g,
                                               const std::vector<int>& subgroup,
                                               const ConnectionSet& s, int nexus) {
  SubgroupCliqueVerdict out;
  std::set<int> c(subgroup.begin(), subgroup.end());
  if (c.size() < 2) {
    out.reason = "subgroup must have at least 2 elements";
    return out;
  }
  if (!c.count(g.identity())) {
    out.reason = "subgroup must contain the identity";
    return out;
  }
  for (int a : c) {
    if (!c.count(g.inv(a))) {
      out.reason = "not closed under inverse";
      return out;
    }
    for (int b : c)
      if (!c.count(g.mul(a, b))) {
        out.reason = "not closed under multiplication";
        return out;
      }
  }
  // C \ {e} must lie inside S so that C is a clique of Cay(G,S).
  std::set<int> elems(s.elements.begin(), s.elements.end());
  for (int a : c)
    if (a != g.identity() && !elems.count(a)) {
      out.reason = "subgroup minus identity is not contained in the connection set";
      return out;
    }

  long long csize = static_cast<long long>(c.size());
  long long index = g.order() / csize;
  out.lhs = static_cast<long long>(elems.size());
  out.rhs = (index - 1) * nexus + csize - 1;
  if (out.lhs != out.rhs) {
    out.reason = "|S| != ([G:C]-1)a + |C|-1";
    return out;
  }

  // Every right coset Cg must be a regular clique with the given nexus.
  Graph graph = cayley_graph(g, s);
  std::set<int> done;
  for (int rep = 0; rep < g.order(); ++rep) {
    if (done.count(rep)) continue;
    VertexSet coset;
    for (int a : c) {
      int x = g.mul(a, rep);
      coset.set(x);
      done.insert(x);
    }
    for (int u = coset.first(); u >= 0; u = coset.next(u))
      for (int v = coset.next(u); v >= 0; v = coset.next(v))
        if (!graph.adjacent(u, v)) {
          out.ok = false;
          out.reason = "coset is not a clique";
          return out;
        }
    for (int v = 0; v < graph.vertex_count(); ++v) {
      if (coset.test(v)) continue;
      if ((graph.neighbors(v) & coset).count() != nexus) {
        out.reason = "coset is not a regular clique with the stated nexus";
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

std::vector<std::vector<int>> right_multiplications(const FiniteGroup& g) {
  int n = g.order();
  std::vector<std::vector<int>> maps;
  maps.reserve(n);
  for (int h = 0; h < n; ++h) {
    std::vector<int> map(n);
    for (int x = 0; x < n; ++x) map[x] = g.mul(x, h);
    maps.push_back(std::move(map));
  }
  return maps;
}

}  // namespace neumaier

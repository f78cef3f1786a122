#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neumaier/graph.hpp"

namespace neumaier {

// Constructor description for the supported finite groups. The text form
// is the CLI mini-language: "Z28", "D16", "S4", "A4", and products joined
// with "x" such as "A4xZ2" or "Z4xZ4".
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Sym, Alt, Product };
  Kind kind = Kind::Cyclic;
  int n = 0;  // modulus for cyclic, group order for dihedral, letters for sym/alt
  std::shared_ptr<GroupSpec> left, right;

  static GroupSpec cyclic(int n);
  static GroupSpec dihedral(int order);
  static GroupSpec sym(int letters);
  static GroupSpec alt(int letters);
  static GroupSpec product(GroupSpec l, GroupSpec r);
  static GroupSpec parse(std::string_view text);

  std::string to_string() const;
};

// Finite group materialized as a multiplication table with named elements.
// The identity always has index 0. Group laws are verified exhaustively at
// construction (orders are at most 64).
class FiniteGroup {
 public:
  static FiniteGroup make(const GroupSpec& spec);

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return 0; }
  const std::string& name(int a) const { return names_[a]; }
  const GroupSpec& spec() const { return spec_; }

  // Resolves an element from text according to the group's structure:
  // integers for cyclic groups, "(x,y)" pairs for products of cyclic
  // groups, words like "ba3" or "a^-1" for dihedral groups, and cycle
  // notation for symmetric/alternating groups (extended to products with
  // Z2 by treating the two extra points as the Z2 factor).
  std::optional<int> find_element(std::string_view text) const;

 private:
  GroupSpec spec_;
  int order_ = 0;
  std::vector<int> mul_, inv_;
  std::vector<std::string> names_;
};

// Inverse-closed, identity-free subset of group elements.
struct ConnectionSet {
  std::vector<int> elements;  // sorted, unique indices
};

ConnectionSet connection_set_from_names(const FiniteGroup& g,
                                        const std::vector<std::string>& names);

struct ConnectionSetVerdict {
  bool ok = false;
  bool identity_free = false;
  bool inverse_closed = false;
  bool generates = false;
  std::string reason;
};

ConnectionSetVerdict validate_connection_set(const FiniteGroup& g, const ConnectionSet& s);

// Cay(G,S): vertices are group elements, x ~ y iff x * y^-1 in S.
// Requires a valid generating connection set.
Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& s);

struct SubgroupCliqueVerdict {
  bool ok = false;
  long long lhs = 0, rhs = 0;  // |S| vs ([G:C]-1)a + |C|-1
  std::string reason;
};

// Checks |S| = ([G:C]-1)a + |C|-1 for a subgroup C that is a clique in
// Cay(G,S), and verifies every right coset of C is a regular clique with
// nexus a in the constructed graph. Requires |C| >= 2.
SubgroupCliqueVerdict subgroup_clique_identity(const FiniteGroup& g,
                                               const std::vector<int>& subgroup,
                                               const ConnectionSet& s, int nexus);

// Right-multiplication maps x -> x*h, which are automorphisms of any
// Cayley graph over g; they certify vertex-transitivity.
std::vector<std::vector<int>> right_multiplications(const FiniteGroup& g);

}  // namespace neumaier

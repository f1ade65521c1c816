#pragma once

#include <string>
#include <vector>

namespace hx {

/// Finite group as a multiplication table. validate() checks the full group
/// axioms (closure by construction, identity, inverses, associativity).
struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;  // table[i][j] = i*j
  int identity = 0;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const;
  int conj(int a, int x) const { return mul(mul(a, x), inv(a)); }  // a x a^-1
  void validate() const;

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric3();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  static FiniteGroup klein4();
  /// Named lookup: c1..c12, v4, s3; throws otherwise.
  static FiniteGroup named(const std::string& name);

  /// Smallest subgroup containing the given elements, as sorted indices.
  std::vector<int> subgroup(const std::vector<int>& gens) const;
  bool is_normal_subset(const std::vector<int>& elems) const;
};

}  // namespace hx

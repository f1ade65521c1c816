#include "hx/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hx {

int FiniteGroup::inv(int a) const {
  for (int b = 0; b < order; ++b)
    if (table[a][b] == identity) return b;
  throw std::runtime_error("no inverse for element " + std::to_string(a));
}

void FiniteGroup::validate() const {
  if ((int)table.size() != order) throw std::runtime_error("group table: wrong row count");
  for (auto& row : table) {
    if ((int)row.size() != order) throw std::runtime_error("group table: wrong column count");
    for (int v : row)
      if (v < 0 || v >= order) throw std::runtime_error("group table: entry out of range");
  }
  for (int a = 0; a < order; ++a)
    if (table[identity][a] != a || table[a][identity] != a)
      throw std::runtime_error("group table: identity fails");
  for (int a = 0; a < order; ++a) inv(a);  // throws if missing
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::runtime_error("group table: associativity fails");
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
  FiniteGroup g;
  g.name = "c" + std::to_string(n);
  g.order = n;
  g.identity = 0;
  g.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    g.labels.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  }
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  // permutations of {0,1,2}: index = position in the list below
  static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                  {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  static const char* names[6] = {"e", "r", "rr", "s01", "s12", "s02"};
  FiniteGroup g;
  g.name = "s3";
  g.order = 6;
  g.identity = 0;
  g.table.assign(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i) {
    g.labels.push_back(names[i]);
    for (int j = 0; j < 6; ++j) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      for (int k = 0; k < 6; ++k)
        if (comp[0] == perms[k][0] && comp[1] == perms[k][1] && comp[2] == perms[k][2])
          g.table[i][j] = k;
    }
  }
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.name = a.name + "x" + b.name;
  g.order = a.order * b.order;
  g.identity = a.identity * b.order + b.identity;
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int i = 0; i < g.order; ++i) {
    g.labels.push_back("(" + a.labels[i / b.order] + "," + b.labels[i % b.order] + ")");
    for (int j = 0; j < g.order; ++j)
      g.table[i][j] = a.mul(i / b.order, j / b.order) * b.order + b.mul(i % b.order, j % b.order);
  }
  return g;
}

FiniteGroup FiniteGroup::klein4() {
  FiniteGroup g = direct_product(cyclic(2), cyclic(2));
  g.name = "v4";
  return g;
}

FiniteGroup FiniteGroup::named(const std::string& name) {
  if (name == "v4") return klein4();
  if (name == "s3") return symmetric3();
  if (name.size() > 1 && name[0] == 'c') {
    int n = std::stoi(name.substr(1));
    if (n >= 1 && n <= 64) return cyclic(n);
  }
  throw std::runtime_error("unknown group: " + name);
}

std::vector<int> FiniteGroup::subgroup(const std::vector<int>& gens) const {
  std::set<int> s{identity};
  s.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> next = s;
    for (int a : s)
      for (int b : s) next.insert(mul(a, b));
    for (int a : s) next.insert(inv(a));
    if (next.size() != s.size()) {
      s = std::move(next);
      grew = true;
    }
  }
  return std::vector<int>(s.begin(), s.end());
}

bool FiniteGroup::is_normal_subset(const std::vector<int>& elems) const {
  std::set<int> s(elems.begin(), elems.end());
  for (int a = 0; a < order; ++a)
    for (int x : s)
      if (!s.count(conj(a, x))) return false;
  return true;
}

}  // namespace hx

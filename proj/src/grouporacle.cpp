#include "hx/grouporacle.hpp"

#include <algorithm>
#include <stdexcept>

namespace hx {

static bool is_hom(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& f) {
  if ((int)f.size() != a.order) return false;
  for (int i = 0; i < a.order; ++i)
    for (int j = 0; j < a.order; ++j)
      if (f[a.mul(i, j)] != b.mul(f[i], f[j])) return false;
  return true;
}

static bool is_action(const FiniteGroup& b, const FiniteGroup& x, const GroupAction& a) {
  if ((int)a.table.size() != b.order) return false;
  for (auto& row : a.table)
    if ((int)row.size() != x.order) return false;
  for (int i = 0; i < x.order; ++i)
    if (a.apply(b.identity, i) != i) return false;
  for (int p = 0; p < b.order; ++p)
    for (int q = 0; q < b.order; ++q)
      for (int i = 0; i < x.order; ++i)
        if (a.apply(b.mul(p, q), i) != a.apply(p, a.apply(q, i))) return false;
  for (int p = 0; p < b.order; ++p)
    for (int i = 0; i < x.order; ++i)
      for (int j = 0; j < x.order; ++j)
        if (a.apply(p, x.mul(i, j)) != x.mul(a.apply(p, i), a.apply(p, j))) return false;
  return true;
}

Report check_group_xmod(const GroupXMod& m) {
  Report r;
  r.subject = "group crossed module " + m.top.name + " -> " + m.base.name;
  r.add("d-homomorphism", is_hom(m.top, m.base, m.d));
  r.add("action", is_action(m.base, m.top, m.act));
  bool eq = true, pf = true;
  for (int b = 0; b < m.base.order && eq; ++b)
    for (int x = 0; x < m.top.order; ++x)
      if (m.d[m.act.apply(b, x)] != m.base.conj(b, m.d[x])) {
        eq = false;
        break;
      }
  r.add("equivariance", eq);
  for (int y = 0; y < m.top.order && pf; ++y)
    for (int x = 0; x < m.top.order; ++x)
      if (m.act.apply(m.d[y], x) != m.top.conj(y, x)) {
        pf = false;
        break;
      }
  r.add("peiffer", pf);
  return r;
}

FiniteGroup group_semidirect(const FiniteGroup& top, const FiniteGroup& base, const GroupAction& act) {
  FiniteGroup g;
  g.name = top.name + ":" + base.name;
  g.order = top.order * base.order;
  g.identity = top.identity * base.order + base.identity;
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int i = 0; i < g.order; ++i) {
    g.labels.push_back("(" + top.labels[i / base.order] + "|" + base.labels[i % base.order] + ")");
    for (int j = 0; j < g.order; ++j) {
      int x = i / base.order, b = i % base.order, y = j / base.order, c = j % base.order;
      g.table[i][j] = top.mul(x, act.apply(b, y)) * base.order + base.mul(b, c);
    }
  }
  return g;
}

long group_cat1_pullback_order(const GroupXMod& m) {
  int nb = m.base.order, nx = m.top.order;
  long count = 0;
  for (int x = 0; x < nx; ++x)
    for (int b = 0; b < nb; ++b)
      for (int y = 0; y < nx; ++y)
        for (int c = 0; c < nb; ++c)
          if (b == m.base.mul(m.d[y], c)) ++count;  // delta(x,b) = gamma(y,c)
  return count;
}

GroupXMod group_inclusion_xmod(const FiniteGroup& g, const std::vector<int>& sub_elems) {
  if (!g.is_normal_subset(sub_elems))
    throw std::runtime_error("group_inclusion_xmod: subgroup is not normal");
  GroupXMod m;
  m.base = g;
  FiniteGroup& n = m.top;
  n.name = "sub" + std::to_string(sub_elems.size()) + "(" + g.name + ")";
  n.order = (int)sub_elems.size();
  std::vector<int> pos(g.order, -1);
  for (int i = 0; i < n.order; ++i) pos[sub_elems[i]] = i;
  n.table.assign(n.order, std::vector<int>(n.order));
  for (int i = 0; i < n.order; ++i) {
    n.labels.push_back(g.labels[sub_elems[i]]);
    if (sub_elems[i] == g.identity) n.identity = i;
    for (int j = 0; j < n.order; ++j) {
      int prod = g.mul(sub_elems[i], sub_elems[j]);
      if (pos[prod] < 0) throw std::runtime_error("group_inclusion_xmod: subset is not closed");
      n.table[i][j] = pos[prod];
    }
  }
  m.d = sub_elems;
  m.act.table.assign(g.order, std::vector<int>(n.order));
  for (int b = 0; b < g.order; ++b)
    for (int x = 0; x < n.order; ++x) m.act.table[b][x] = pos[g.conj(b, sub_elems[x])];
  return m;
}

Report check_group_crossed_square(const GroupCrossedSquare& s) {
  Report r;
  r.subject = "group crossed square over " + s.p.name;
  r.add("lambda-hom", is_hom(s.l, s.m, s.lambda));
  r.add("lambdap-hom", is_hom(s.l, s.n, s.lambdap));
  bool comm = true;
  std::vector<int> kappa(s.l.order);
  for (int i = 0; i < s.l.order; ++i) {
    kappa[i] = s.mu[s.lambda[i]];
    if (kappa[i] != s.nu[s.lambdap[i]]) comm = false;
  }
  r.add("square-commutes", comm);
  r.merge("mu", check_group_xmod({s.p, s.m, s.mu, s.act_pm}));
  r.merge("nu", check_group_xmod({s.p, s.n, s.nu, s.act_pn}));
  r.merge("kappa", check_group_xmod({s.p, s.l, kappa, s.act_pl}));

  bool lam_eq = true, lamp_eq = true;
  for (int p = 0; p < s.p.order; ++p)
    for (int i = 0; i < s.l.order; ++i) {
      if (s.lambda[s.act_pl.apply(p, i)] != s.act_pm.apply(p, s.lambda[i])) lam_eq = false;
      if (s.lambdap[s.act_pl.apply(p, i)] != s.act_pn.apply(p, s.lambdap[i])) lamp_eq = false;
    }
  r.add("lambda-equivariant", lam_eq);
  r.add("lambdap-equivariant", lamp_eq);

  auto m_on_l = [&](int m, int l) { return s.act_pl.apply(s.mu[m], l); };
  auto n_on_l = [&](int n, int l) { return s.act_pl.apply(s.nu[n], l); };
  auto m_on_n = [&](int m, int n) { return s.act_pn.apply(s.mu[m], n); };
  auto n_on_m = [&](int n, int m) { return s.act_pm.apply(s.nu[n], m); };

  bool ii = true, iii = true, iv = true, v = true;
  for (int m = 0; m < s.m.order; ++m)
    for (int n = 0; n < s.n.order; ++n) {
      int hmn = s.h[m][n];
      if (s.lambda[hmn] != s.m.mul(m, n_on_m(n, s.m.inv(m)))) ii = false;
      if (s.lambdap[hmn] != s.n.mul(m_on_n(m, n), s.n.inv(n))) ii = false;
    }
  r.add("pairing-targets", ii);  // axiom (ii)
  for (int l = 0; l < s.l.order; ++l) {
    for (int n = 0; n < s.n.order; ++n)
      if (s.h[s.lambda[l]][n] != s.l.mul(l, n_on_l(n, s.l.inv(l)))) iii = false;
    for (int m = 0; m < s.m.order; ++m)
      if (s.h[m][s.lambdap[l]] != s.l.mul(m_on_l(m, l), s.l.inv(l))) iii = false;
  }
  r.add("pairing-on-images", iii);  // axiom (iii)
  for (int m = 0; m < s.m.order; ++m)
    for (int n = 0; n < s.n.order; ++n) {
      for (int n2 = 0; n2 < s.n.order; ++n2)
        if (s.h[m][s.n.mul(n, n2)] != s.l.mul(s.h[m][n], n_on_l(n, s.h[m][n2]))) iv = false;
      for (int m2 = 0; m2 < s.m.order; ++m2)
        if (s.h[s.m.mul(m, m2)][n] != s.l.mul(m_on_l(m, s.h[m2][n]), s.h[m][n])) iv = false;
    }
  r.add("pairing-multiplicative", iv);  // axiom (iv)
  for (int p = 0; p < s.p.order; ++p)
    for (int m = 0; m < s.m.order; ++m)
      for (int n = 0; n < s.n.order; ++n)
        if (s.act_pl.apply(p, s.h[m][n]) !=
            s.h[s.act_pm.apply(p, m)][s.act_pn.apply(p, n)])
          v = false;
  r.add("pairing-equivariant", v);  // axiom (v)
  return r;
}

GroupCrossedSquare group_normal_pair_square(const FiniteGroup& p, const std::vector<int>& m_elems,
                                            const std::vector<int>& n_elems) {
  GroupXMod mm = group_inclusion_xmod(p, m_elems);
  GroupXMod nn = group_inclusion_xmod(p, n_elems);
  std::vector<int> meet;
  for (int e : m_elems)
    if (std::find(n_elems.begin(), n_elems.end(), e) != n_elems.end()) meet.push_back(e);
  GroupXMod ll = group_inclusion_xmod(p, meet);

  std::vector<int> pos_m(p.order, -1), pos_n(p.order, -1), pos_l(p.order, -1);
  for (int i = 0; i < mm.top.order; ++i) pos_m[m_elems[i]] = i;
  for (int i = 0; i < nn.top.order; ++i) pos_n[n_elems[i]] = i;
  for (int i = 0; i < ll.top.order; ++i) pos_l[meet[i]] = i;

  GroupCrossedSquare s;
  s.l = ll.top;
  s.m = mm.top;
  s.n = nn.top;
  s.p = p;
  for (int i = 0; i < s.l.order; ++i) {
    s.lambda.push_back(pos_m[meet[i]]);
    s.lambdap.push_back(pos_n[meet[i]]);
  }
  s.mu = mm.d;
  s.nu = nn.d;
  s.act_pl = ll.act;
  s.act_pm = mm.act;
  s.act_pn = nn.act;
  s.h.assign(s.m.order, std::vector<int>(s.n.order));
  for (int i = 0; i < s.m.order; ++i)
    for (int j = 0; j < s.n.order; ++j) {
      int a = m_elems[i], b = n_elems[j];
      int comm = p.mul(p.mul(a, b), p.mul(p.inv(a), p.inv(b)));
      if (pos_l[comm] < 0)
        throw std::runtime_error("normal pair: commutator leaves the intersection");
      s.h[i][j] = pos_l[comm];
    }
  return s;
}

}  // namespace hx

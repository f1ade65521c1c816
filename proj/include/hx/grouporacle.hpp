#pragma once

#include "hx/group.hpp"
#include "hx/report.hpp"

namespace hx {

/// Group action by automorphisms, tabulated: table[b][x] = b.x.
struct GroupAction {
  std::vector<std::vector<int>> table;
  int apply(int b, int x) const { return table[b][x]; }
};

/// Crossed module of groups: d : top -> base with a base-action on top.
struct GroupXMod {
  FiniteGroup base, top;
  std::vector<int> d;  // top index -> base index
  GroupAction act;
};

/// Brute force over all tuples: d is a homomorphism, the action is by
/// automorphisms, equivariance d(b.x) = b d(x) b^-1, Peiffer d(y).x = yxy^-1.
Report check_group_xmod(const GroupXMod& m);

/// Semidirect product top ⋊ base, element (x, b) at index x*|base| + b,
/// (x,b)(y,c) = (x (b.y), bc).
FiniteGroup group_semidirect(const FiniteGroup& top, const FiniteGroup& base, const GroupAction& act);

/// Number of composable arrow pairs of the cat1 group of the crossed module:
/// #{(p, q) : delta(p) = gamma(q)} with delta(x,b) = b, gamma(x,b) = d(x)b.
long group_cat1_pullback_order(const GroupXMod& m);

/// Inclusion crossed module of a normal subgroup (conjugation action).
GroupXMod group_inclusion_xmod(const FiniteGroup& g, const std::vector<int>& sub_elems);

/// Crossed square of groups, corners L, M, N, P.
struct GroupCrossedSquare {
  FiniteGroup l, m, n, p;
  std::vector<int> lambda, lambdap, mu, nu;  // L->M, L->N, M->P, N->P
  GroupAction act_pl, act_pm, act_pn;        // P acting on each corner
  std::vector<std::vector<int>> h;           // h[m][n] in L
};

/// Brute-force group crossed-square axioms: commutativity of the square,
/// crossed modules (P,M,mu), (P,N,nu), (P,L,kappa) with kappa = mu.lambda,
/// P-equivariance of lambda and lambda', and the pairing identities
///   lambda h(m,n) = m (nu(n).m^-1),     lambda' h(m,n) = (mu(m).n) n^-1,
///   h(lambda(l), n) = l (nu(n).l^-1),   h(m, lambda'(l)) = (mu(m).l) l^-1,
///   h(m, nn') = h(m,n) (nu(n).h(m,n')), h(mm', n) = (mu(m).h(m',n)) h(m,n),
///   p.h(m,n) = h(p.m, p.n),
/// where corner elements act on other corners through mu/nu and the P-action.
Report check_group_crossed_square(const GroupCrossedSquare& s);

/// Normal-pair square: two normal subgroups M, N of P, L = M ∩ N,
/// all maps inclusions, conjugation actions, h(m, n) = [m, n] = m n m^-1 n^-1.
GroupCrossedSquare group_normal_pair_square(const FiniteGroup& p, const std::vector<int>& m_elems,
                                            const std::vector<int>& n_elems);

}  // namespace hx

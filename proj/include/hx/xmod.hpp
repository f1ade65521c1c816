#pragma once

#include "hx/action.hpp"
#include "hx/grouporacle.hpp"

namespace hx {

/// Crossed module of Hopf algebras: d : X -> B equivariant for the action of
/// B on X, with the Peiffer condition.
struct CrossedModule {
  HopfPtr base;       // B
  HopfPtr top;        // X
  HopfMorphism d;     // X -> B
  HopfAction action;  // B on X
};

/// Equivariance d(b.x) = b1 d(x) S(b2) and Peiffer d(y).x = y1 x S(y2),
/// plus (optionally) the morphism and action axioms of the pieces.
Report check_crossed_module(const CrossedModule& cm, bool check_components = true);

/// cat1 structure: a reflexive graph (delta, gamma : A1 -> A0 with common
/// section iota) whose two Hopf kernels commute elementwise.
struct Cat1 {
  HopfPtr total;  // A1
  HopfPtr base;   // A0
  HopfMorphism delta, gamma;  // source, target
  HopfMorphism iota;
};

Report check_cat1(const Cat1& c, bool check_components = true);

Cat1 xmod_to_cat1(const CrossedModule& cm, bool verify = true);
CrossedModule cat1_to_xmod(const Cat1& c, bool verify = true);

/// Pullback of f : A -> C against g : B -> C inside A (x) B: the largest
/// subcoalgebra of the equalizer {t : f(t'1) x t'2 x t'' = g(t''1) x t' x t''2},
/// verified as a sub-Hopf-algebra. `ambient` receives tensor_hopf(A, B).
SubHopf hopf_pullback(const HopfMorphism& f, const HopfMorphism& g, HopfPtr* ambient = nullptr);

/// Internal groupoid structure carried by the cat1 object of a crossed
/// module: composition m((x,b),(y,c)) = xy (x) eps(b)c and inversion
/// i(x,b) = S(x1) (x) d(x2)b, together with the composability pullback.
struct GroupoidData {
  Cat1 c;
  HopfPtr ambient;   // total (x) total
  SubHopf composable;  // pullback of delta against gamma
  LinMap m;    // on the whole ambient; restricted statements use `composable`
  LinMap inv;  // total -> total
};

GroupoidData groupoid_data(const CrossedModule& cm, bool verify = true);

/// Unit, compatibility, associativity and inverse identities of the groupoid.
Report groupoid_check(const GroupoidData& g);

/// Round trips of the two functors, compared through the canonical maps
/// (x -> x (x) 1 and the crossed-product decomposition phi).
Report xmod_roundtrip(const CrossedModule& cm);
Report cat1_roundtrip(const Cat1& c);

/// Group algebra functor on crossed modules.
CrossedModule lift_group_xmod(const Field& f, const GroupXMod& m);
/// Group-like extraction; requires fully flagged group-algebra-shaped data.
GroupXMod extract_group_xmod(const CrossedModule& cm);

/// (B, B, id, adjoint action)
CrossedModule conjugation_xmod(const HopfPtr& b);
/// trivial algebra as the top, d = unit, trivial action
CrossedModule discrete_xmod(const HopfPtr& b);

}  // namespace hx

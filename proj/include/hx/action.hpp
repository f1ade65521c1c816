#pragma once

#include "hx/morphism.hpp"

namespace hx {

/// Action of a Hopf algebra B on a Hopf algebra X, as xi : B(x)X -> X.
struct HopfAction {
  HopfPtr acting;  // B
  HopfPtr acted;   // X
  LinMap xi;

  Vec act(const Vec& b, const Vec& x) const { return xi.apply(Vec::kron(b, x)); }
};

/// Module-algebra + module-coalgebra axioms for a Hopf action.
Report check_action(const HopfAction& a);

/// A split epimorphism of Hopf algebras: delta.iota = id on the base.
struct SplitEpi {
  HopfPtr total;            // A
  HopfPtr base;             // B
  HopfMorphism retraction;  // delta : A -> B
  HopfMorphism section;     // iota : B -> A
};

Report check_split_epi(const SplitEpi& s);

/// Smash product X ⋊ B. Basis is X-major: (x, b) -> x*dim(B) + b.
/// mult((x,b),(y,c)) = x(b1.y) (x) b2c, antipode S(x,b) = S(b1).S(x) (x) S(b2).
HopfPtr smash(const HopfAction& a, const std::string& name = "");

/// trivial action b.x = eps(b) x
HopfAction trivial_action(const HopfPtr& acting, const HopfPtr& acted);
/// Linearized group action by automorphisms: table[b][x] is the image index.
/// The group algebras must share the given basis order.
HopfAction group_action_algebra(const HopfPtr& kb, const HopfPtr& kx,
                                const std::vector<std::vector<int>>& table);
/// adjoint action of h on itself, b.x = b1 x S(b2)
HopfAction adjoint_action(const HopfPtr& h);

struct ConjugationData {
  SubHopf ker;       // HKer(delta) inside the total algebra
  HopfPtr ker_hopf;  // the kernel as a standalone Hopf algebra
  HopfAction action; // base acting on ker_hopf by iota(b1) k iota(S(b2))
};
ConjugationData conjugation_action(const SplitEpi& s);

/// (X ⋊ B, p2, e) with p2(x,b) = eps(x) b and e(b) = 1 (x) b.
SplitEpi action_to_split_epi(const HopfAction& a, bool verify = true);

/// Crossed-product decomposition of a split epi:
/// phi : HKer(delta) ⋊ B -> A, k (x) b -> k iota(b), a bijective morphism.
struct CrossedProductDecomp {
  ConjugationData conj;
  HopfPtr smash_total;
  HopfMorphism phi;
  LinMap phi_inv;
};
CrossedProductDecomp phi_iso(const SplitEpi& s, bool verify = true);

}  // namespace hx

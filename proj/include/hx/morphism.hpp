#pragma once

#include "hx/hopf.hpp"

namespace hx {

struct HopfMorphism {
  HopfPtr dom, cod;
  LinMap map;

  Vec operator()(const Vec& v) const { return map.apply(v); }
};

HopfMorphism identity_morphism(const HopfPtr& h);
/// f.g (g first)
HopfMorphism compose(const HopfMorphism& f, const HopfMorphism& g);

/// Bialgebra morphism axioms plus antipode compatibility.
Report check_morphism(const HopfMorphism& f);

/// Sub-Hopf-algebra of an ambient algebra, stored as an echelonized span.
/// Structure maps restrict through the linear coordinate extraction, which
/// agrees with true coordinates exactly on the span.
struct SubHopf {
  HopfPtr ambient;
  Echelon span;

  int dim() const { return span.rank(); }
  bool contains(const Vec& v) const { return span.contains(v); }
  /// unit membership and closure under mult, comult, antipode
  Report verify() const;
  HopfPtr as_hopf(const std::string& name = "") const;
  HopfMorphism inclusion(const std::string& name = "") const;
  /// Linear coordinate extraction ambient -> sub coordinates.
  LinMap coords_map() const;
};

SubHopf sub_from_vectors(const HopfPtr& h, const std::vector<Vec>& gens);
/// Span of the images of the basis under f, inside f's codomain.
SubHopf image_sub(const HopfMorphism& f);

/// Hopf kernel {a : f(a_1) x a_2 = 1 x a}. The mirrored form
/// {a : a_1 x f(a_2) = a x 1} is computed too and must agree (cocommutative
/// setting); throws on disagreement. The result is verified as a sub-Hopf.
SubHopf hker(const HopfMorphism& f);

/// Stability of the span under a_1 u S(a_2) for every ambient basis a.
bool is_normal(const SubHopf& u);

bool commute_elementwise(const SubHopf& u, const SubHopf& v);

SubHopf sub_intersect(const SubHopf& a, const SubHopf& b);

/// Largest subspace W' of W with Delta(W') inside W' x H + ... refined until
/// Delta(W') lies in W' x H and H x W'.
Echelon largest_subcoalgebra_in(const FinHopf& h, Echelon w);

}  // namespace hx

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hx/morphism.hpp"

using namespace hx;

static Field Q = Field::rationals();

// sign map S3 -> C2 as a Hopf morphism of group algebras
static HopfMorphism sign_morphism(const HopfPtr& ks3, const HopfPtr& kc2) {
  std::vector<Vec> cols;
  for (int i = 0; i < 6; ++i) cols.push_back(Vec::basis(Q, 2, i < 3 ? 0 : 1));
  return {ks3, kc2, LinMap::from_columns(Q, 2, cols)};
}

TEST_CASE("group hom induces a Hopf morphism; non-hom fails") {
  HopfPtr ks3 = group_algebra(Q, FiniteGroup::symmetric3());
  HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
  Report r = check_morphism(sign_morphism(ks3, kc2));
  INFO(r.text());
  CHECK(r.all_pass());

  // swapping two images breaks multiplicativity but not counit
  std::vector<Vec> cols;
  for (int i = 0; i < 6; ++i) cols.push_back(Vec::basis(Q, 2, i < 3 ? 0 : 1));
  std::swap(cols[1], cols[3]);
  Report bad = check_morphism({ks3, kc2, LinMap::from_columns(Q, 2, cols)});
  CHECK(!bad.all_pass());
  for (auto& e : bad.entries)
    if (e.axiom == "coalgebra-counit") CHECK(e.pass);
}

TEST_CASE("hopf kernel of the sign map is k[A3]") {
  HopfPtr ks3 = group_algebra(Q, FiniteGroup::symmetric3());
  HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
  SubHopf k = hker(sign_morphism(ks3, kc2));
  CHECK(k.dim() == 3);  // |A3| = 3, and A3 = {e, r, rr} sits at indices 0..2
  for (int i = 0; i < 3; ++i) CHECK(k.contains(Vec::basis(Q, 6, i)));
  CHECK(!k.contains(Vec::basis(Q, 6, 3)));
  CHECK(is_normal(k));

  HopfPtr sub = k.as_hopf("k[a3]");
  Report r = check_hopf(*sub);
  INFO(r.text());
  CHECK(r.all_pass());
  CHECK(sub->grouplike_flags.size() == 3);
  GrouplikeGroup gg = grouplike_group(*sub);
  CHECK(gg.group.table == FiniteGroup::cyclic(3).table);

  Report ri = check_morphism(k.inclusion());
  CHECK(ri.all_pass());
}

TEST_CASE("hopf kernel of identity and of counit-like collapse") {
  HopfPtr kc4 = group_algebra(Q, FiniteGroup::cyclic(4));
  SubHopf k_id = hker(identity_morphism(kc4));
  CHECK(k_id.dim() == 1);  // only scalars of the unit
  CHECK(k_id.contains(kc4->unit));

  // collapse to the trivial group algebra: kernel is everything
  HopfPtr k1 = group_algebra(Q, FiniteGroup::trivial());
  std::vector<Vec> cols(4, Vec::basis(Q, 1, 0));
  SubHopf k_all = hker({kc4, k1, LinMap::from_columns(Q, 1, cols)});
  CHECK(k_all.dim() == 4);
}

TEST_CASE("non-normal subalgebra is detected") {
  HopfPtr ks3 = group_algebra(Q, FiniteGroup::symmetric3());
  // span of {e, s01}: subgroup of order 2, not normal in S3
  SubHopf u = sub_from_vectors(ks3, {Vec::basis(Q, 6, 0), Vec::basis(Q, 6, 3)});
  CHECK(u.verify().all_pass());
  CHECK(!is_normal(u));
  // group-level cross-check
  CHECK(!FiniteGroup::symmetric3().is_normal_subset({0, 3}));
}

TEST_CASE("elementwise commutation of subalgebras") {
  HopfPtr ks3 = group_algebra(Q, FiniteGroup::symmetric3());
  SubHopf center = sub_from_vectors(ks3, {Vec::basis(Q, 6, 0)});
  SubHopf a3 = sub_from_vectors(ks3, {Vec::basis(Q, 6, 0), Vec::basis(Q, 6, 1), Vec::basis(Q, 6, 2)});
  CHECK(commute_elementwise(center, a3));
  CHECK(commute_elementwise(a3, a3));  // A3 is abelian
  SubHopf refl = sub_from_vectors(ks3, {Vec::basis(Q, 6, 0), Vec::basis(Q, 6, 3)});
  CHECK(!commute_elementwise(a3, refl));
}

TEST_CASE("subspace intersection of subalgebras") {
  HopfPtr kv4 = group_algebra(Q, FiniteGroup::klein4());
  SubHopf a = sub_from_vectors(kv4, {Vec::basis(Q, 4, 0), Vec::basis(Q, 4, 1)});
  SubHopf b = sub_from_vectors(kv4, {Vec::basis(Q, 4, 0), Vec::basis(Q, 4, 2)});
  SubHopf meet = sub_intersect(a, b);
  CHECK(meet.dim() == 1);
  CHECK(meet.contains(kv4->unit));
}

TEST_CASE("largest subcoalgebra refinement") {
  HopfPtr kc4 = group_algebra(Q, FiniteGroup::cyclic(4));
  // e0 + e1 spans a line that is not a subcoalgebra; adding e0, e1 separately is
  Echelon w = echelonize(Q, 4, {Vec::basis(Q, 4, 0) + Vec::basis(Q, 4, 1)});
  CHECK(largest_subcoalgebra_in(*kc4, w).rank() == 0);
  Echelon w2 = echelonize(Q, 4, {Vec::basis(Q, 4, 0), Vec::basis(Q, 4, 1)});
  CHECK(largest_subcoalgebra_in(*kc4, w2).rank() == 2);
}

TEST_CASE("verify rejects a non-closed span") {
  HopfPtr kc4 = group_algebra(Q, FiniteGroup::cyclic(4));
  SubHopf u = sub_from_vectors(kc4, {Vec::basis(Q, 4, 0), Vec::basis(Q, 4, 1)});
  Report r = u.verify();
  CHECK(!r.all_pass());  // g*g = g^2 leaves {e, g}
  for (auto& e : r.entries)
    if (e.axiom == "mult-closed") CHECK(!e.pass);
}

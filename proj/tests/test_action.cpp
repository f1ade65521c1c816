#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hx/action.hpp"

using namespace hx;

static Field Q = Field::rationals();

// C2 acting on C3 by inversion
static HopfAction c2_on_c3() {
  HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
  HopfPtr kc3 = group_algebra(Q, FiniteGroup::cyclic(3));
  return group_action_algebra(kc2, kc3, {{0, 1, 2}, {0, 2, 1}});
}

TEST_CASE("inversion action of C2 on C3 satisfies the module axioms") {
  Report r = check_action(c2_on_c3());
  INFO(r.text());
  CHECK(r.all_pass());
}

TEST_CASE("a non-automorphism table fails the algebra compatibility") {
  HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
  HopfPtr kc3 = group_algebra(Q, FiniteGroup::cyclic(3));
  // swapping e and g under the action is not multiplicative
  HopfAction bad = group_action_algebra(kc2, kc3, {{0, 1, 2}, {1, 0, 2}});
  Report r = check_action(bad);
  CHECK(!r.all_pass());
}

TEST_CASE("trivial and adjoint actions check out") {
  HopfPtr ks3 = group_algebra(Q, FiniteGroup::symmetric3());
  HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
  CHECK(check_action(trivial_action(kc2, ks3)).all_pass());
  CHECK(check_action(adjoint_action(ks3)).all_pass());
}

TEST_CASE("smash of the inversion action is the group algebra of S3") {
  HopfPtr sm = smash(c2_on_c3());
  CHECK(sm->dim == 6);
  Report r = check_hopf(*sm);
  INFO(r.text());
  CHECK(r.all_pass());
  GrouplikeGroup gg = grouplike_group(*sm);
  CHECK(gg.group.order == 6);
  // nonabelian of order 6, hence S3
  bool abelian = true;
  for (int i = 0; i < 6 && abelian; ++i)
    for (int j = 0; j < 6; ++j)
      if (gg.group.mul(i, j) != gg.group.mul(j, i)) {
        abelian = false;
        break;
      }
  CHECK(!abelian);
}

TEST_CASE("smash with the trivial action is the tensor product") {
  HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
  HopfPtr kc3 = group_algebra(Q, FiniteGroup::cyclic(3));
  HopfPtr sm = smash(trivial_action(kc2, kc3));
  HopfPtr tp = tensor_hopf(kc3, kc2);
  CHECK(sm->dim == tp->dim);
  CHECK(sm->mult.equals(tp->mult));
  CHECK(sm->comult.equals(tp->comult));
  CHECK(sm->antipode.equals(tp->antipode));
}

TEST_CASE("action to split epi and back") {
  HopfAction a = c2_on_c3();
  SplitEpi s = action_to_split_epi(a);
  Report r = check_split_epi(s);
  INFO(r.text());
  CHECK(r.all_pass());
  // kernel of the projection is a copy of the acted algebra
  ConjugationData cd = conjugation_action(s);
  CHECK(cd.ker.dim() == 3);
  CHECK(check_action(cd.action).all_pass());
  // conjugation inside the smash recovers the original action through
  // x -> x (x) 1
  const FinHopf& X = *a.acted;
  for (int b = 0; b < 2; ++b)
    for (int x = 0; x < 3; ++x) {
      Vec emb = Vec::kron(X.basis(x), a.acting->unit);
      Vec got = cd.ker.span.reconstruct(cd.action.act(a.acting->basis(b), cd.ker.span.coords(emb)));
      Vec want = Vec::kron(a.act(a.acting->basis(b), X.basis(x)), a.acting->unit);
      CHECK(got == want);
    }
}

TEST_CASE("crossed product decomposition of the sign split epi") {
  HopfPtr ks3 = group_algebra(Q, FiniteGroup::symmetric3());
  HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
  std::vector<Vec> dcols;
  for (int i = 0; i < 6; ++i) dcols.push_back(Vec::basis(Q, 2, i < 3 ? 0 : 1));
  // section sends g to the transposition s01 (index 3)
  std::vector<Vec> icols = {Vec::basis(Q, 6, 0), Vec::basis(Q, 6, 3)};
  SplitEpi s{ks3, kc2,
             {ks3, kc2, LinMap::from_columns(Q, 2, dcols)},
             {kc2, ks3, LinMap::from_columns(Q, 6, icols)}};
  REQUIRE(check_split_epi(s).all_pass());
  CrossedProductDecomp d = phi_iso(s);
  CHECK(d.conj.ker.dim() == 3);
  CHECK(d.smash_total->dim == 6);
  CHECK(compose(d.phi.map, d.phi_inv).equals(LinMap::identity(Q, 6)));
  // phi is already verified inside phi_iso; spot-check one value:
  // phi(r (x) g) = r * s01 = s02? r=(012): r s01 ... r*s01 index
  FiniteGroup g = FiniteGroup::symmetric3();
  int want = g.mul(1, 3);
  bool hit = d.phi.map.column(0 * 2 + 1) == Vec::basis(Q, 6, want) ||
             d.phi.map.column(1 * 2 + 1) == Vec::basis(Q, 6, want);
  CHECK(hit);
}

TEST_CASE("phi fails to exist for a non-split map") {
  // retraction onto the trivial algebra has no bijective phi unless dims match;
  // here hker = everything and smash has dim 6*1: phi is k (x) 1 -> k, bijective.
  // Instead corrupt the section so retraction.section != id and expect failure.
  HopfPtr kc4 = group_algebra(Q, FiniteGroup::cyclic(4));
  HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
  std::vector<Vec> dcols;
  for (int i = 0; i < 4; ++i) dcols.push_back(Vec::basis(Q, 2, i % 2));
  std::vector<Vec> icols = {Vec::basis(Q, 4, 0), Vec::basis(Q, 4, 1)};  // g -> generator: not a hom into C4? g^2=e but gen^2 != e
  SplitEpi s{kc4, kc2,
             {kc4, kc2, LinMap::from_columns(Q, 2, dcols)},
             {kc2, kc4, LinMap::from_columns(Q, 4, icols)}};
  CHECK(!check_split_epi(s).all_pass());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hx/xmod.hpp"

using namespace hx;

static Field Q = Field::rationals();

static CrossedModule a3_in_s3() {
  return lift_group_xmod(Q, group_inclusion_xmod(FiniteGroup::symmetric3(), {0, 1, 2}));
}

TEST_CASE("corpus crossed modules satisfy the axioms") {
  HopfPtr ks3 = group_algebra(Q, FiniteGroup::symmetric3());
  for (const CrossedModule& cm : {a3_in_s3(), conjugation_xmod(ks3), discrete_xmod(ks3)}) {
    Report r = check_crossed_module(cm);
    INFO(r.text());
    CHECK(r.all_pass());
  }
}

TEST_CASE("trivial action with a nontrivial d breaks equivariance") {
  CrossedModule cm = a3_in_s3();
  cm.action = trivial_action(cm.base, cm.top);
  Report r = check_crossed_module(cm);
  CHECK(!r.all_pass());
  for (auto& e : r.entries) {
    if (e.axiom == "equivariance") CHECK(!e.pass);
    if (e.axiom == "d/algebra-mult") CHECK(e.pass);
  }
}

TEST_CASE("group-level oracle agrees axiom by axiom") {
  GroupXMod gm = group_inclusion_xmod(FiniteGroup::symmetric3(), {0, 1, 2});
  Report gr = check_group_xmod(gm);
  CHECK(gr.all_pass());
  CHECK(check_crossed_module(lift_group_xmod(Q, gm)).all_pass());

  // corrupt the differential the same way on both levels: d(r) = e
  GroupXMod bad = gm;
  bad.d[1] = 0;
  Report bad_g = check_group_xmod(bad);
  Report bad_h = check_crossed_module(lift_group_xmod(Q, bad));
  auto failed = [](const Report& r, const std::string& name) {
    for (auto& e : r.entries)
      if (e.axiom.find(name) != std::string::npos && !e.pass) return true;
    return false;
  };
  CHECK(failed(bad_g, "d-homomorphism") == failed(bad_h, "d/algebra-mult"));
  CHECK(failed(bad_g, "peiffer") == failed(bad_h, "peiffer"));
  CHECK(failed(bad_g, "equivariance") == failed(bad_h, "equivariance"));
}

TEST_CASE("lift then extract is the identity") {
  GroupXMod gm = group_inclusion_xmod(FiniteGroup::symmetric3(), {0, 1, 2});
  GroupXMod back = extract_group_xmod(lift_group_xmod(Q, gm));
  CHECK(back.base.table == gm.base.table);
  CHECK(back.top.table == gm.top.table);
  CHECK(back.d == gm.d);
  CHECK(back.act.table == gm.act.table);
}

TEST_CASE("crossed module to cat1 and back") {
  CrossedModule cm = a3_in_s3();
  Cat1 c = xmod_to_cat1(cm);  // verifies check_cat1 internally
  CHECK(c.total->dim == 18);
  Report r = xmod_roundtrip(cm);
  INFO(r.text());
  CHECK(r.all_pass());
  Report r2 = cat1_roundtrip(c);
  INFO(r2.text());
  CHECK(r2.all_pass());
}

TEST_CASE("cat1 kernel commutation fails when it should") {
  // delta = gamma = p2 on the smash of the S3 conjugation action: both kernels
  // are the (noncommutative) copy of K[S3], so this is a reflexive graph but
  // not a cat1 object.
  HopfPtr ks3 = group_algebra(Q, FiniteGroup::symmetric3());
  CrossedModule cm = conjugation_xmod(ks3);
  SplitEpi s = action_to_split_epi(cm.action);
  Cat1 fake{s.total, s.base, s.retraction, s.retraction, s.section};
  Report r = check_cat1(fake);
  CHECK(!r.all_pass());
  bool kc = false;
  for (auto& e : r.entries)
    if (e.axiom == "kernel-commute" && !e.pass) kc = true;
  CHECK(kc);
}

TEST_CASE("pullback dimension matches the group count") {
  GroupXMod gm = group_inclusion_xmod(FiniteGroup::symmetric3(), {0, 1, 2});
  CrossedModule cm = lift_group_xmod(Q, gm);
  GroupoidData g = groupoid_data(cm);
  CHECK((long)g.composable.dim() == group_cat1_pullback_order(gm));  // 3*3*6 = 54
  CHECK(g.composable.dim() == 54);
  Report r = groupoid_check(g);
  INFO(r.text());
  CHECK(r.all_pass());
}

TEST_CASE("corrupted composition map fails the groupoid identities") {
  HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
  CrossedModule cm = conjugation_xmod(kc2);
  GroupoidData g = groupoid_data(cm);
  REQUIRE(groupoid_check(g).all_pass());
  int d1 = g.c.total->dim;
  g.m = LinMap::from_oracle(Q, d1 * d1, d1, [d1, g](int t) {
    return g.c.total->mul(g.c.total->basis(t / d1), g.c.total->basis(t % d1));  // plain product, wrong
  });
  Report r = groupoid_check(g);
  CHECK(!r.all_pass());
}

TEST_CASE("pullback of the sign map against itself") {
  HopfPtr ks3 = group_algebra(Q, FiniteGroup::symmetric3());
  HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
  std::vector<Vec> dcols;
  for (int i = 0; i < 6; ++i) dcols.push_back(Vec::basis(Q, 2, i < 3 ? 0 : 1));
  HopfMorphism sgn{ks3, kc2, LinMap::from_columns(Q, 2, dcols)};
  SubHopf p = hopf_pullback(sgn, sgn);
  CHECK(p.dim() == 18);  // 6*6/2 matching pairs of group-likes
  CHECK(p.verify().all_pass());
}

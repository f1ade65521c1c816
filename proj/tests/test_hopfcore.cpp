#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hx/hopf.hpp"

using namespace hx;

static Field Q = Field::rationals();

TEST_CASE("finite group constructors validate") {
  for (auto name : {"c2", "c3", "c4", "v4", "s3"}) {
    FiniteGroup g = FiniteGroup::named(name);
    CHECK_NOTHROW(g.validate());
  }
  FiniteGroup s3 = FiniteGroup::symmetric3();
  CHECK(s3.order == 6);
  CHECK(s3.mul(1, 1) == 2);        // r*r = rr
  CHECK(s3.inv(1) == 2);           // r^-1 = rr
  CHECK(s3.mul(3, 4) != s3.mul(4, 3));  // nonabelian
  auto a3 = s3.subgroup({1});
  CHECK(a3 == std::vector<int>{0, 1, 2});
  CHECK(s3.is_normal_subset(a3));
  CHECK(!s3.is_normal_subset(s3.subgroup({3})));
}

TEST_CASE("group algebra of C2 has the expected structure maps") {
  HopfPtr h = group_algebra(Q, FiniteGroup::cyclic(2));
  CHECK(h->dim == 2);
  CHECK(h->unit == Vec::basis(Q, 2, 0));
  CHECK(h->mul_basis(1, 1) == Vec::basis(Q, 2, 0));            // g*g = e
  CHECK(h->comult.column(1) == Vec::basis(Q, 4, 1 * 2 + 1));   // Delta(g) = g x g
  CHECK(h->antipode.column(1) == Vec::basis(Q, 2, 1));         // g^-1 = g
  CHECK(h->eps(h->basis(1)) == Scalar::one(Q));
  CHECK(require_pass(check_hopf(*h)).all_pass());
}

TEST_CASE("group algebras over Q and F7 satisfy all axioms") {
  for (auto name : {"c2", "c3", "c4", "v4", "s3"}) {
    HopfPtr h = group_algebra(Q, FiniteGroup::named(name));
    Report r = check_hopf(*h);
    INFO(r.text());
    CHECK(r.all_pass());
    CHECK(r.mode == "full");
  }
  HopfPtr h7 = group_algebra(Field::prime(7), FiniteGroup::symmetric3());
  CHECK(check_hopf(*h7).all_pass());
}

TEST_CASE("corrupted antipode is caught and localized") {
  auto h = std::make_shared<FinHopf>(*group_algebra(Q, FiniteGroup::cyclic(3)));
  h->antipode = LinMap::identity(Q, 3);  // wrong: should send g -> g^2
  Report r = check_hopf(*h);
  CHECK(!r.all_pass());
  for (auto& e : r.entries) {
    if (e.axiom == "antipode")
      CHECK(!e.pass);
    else if (e.axiom == "antipode-involutive" || e.axiom == "assoc" || e.axiom == "coassoc")
      CHECK(e.pass);
  }
  CHECK_THROWS_AS(require_pass(r), AxiomFailure);
}

TEST_CASE("tensor product of Hopf algebras") {
  HopfPtr c2 = group_algebra(Q, FiniteGroup::cyclic(2));
  HopfPtr t = tensor_hopf(c2, c2);
  CHECK(t->dim == 4);
  Report r = check_hopf(*t);
  INFO(r.text());
  CHECK(r.all_pass());
  // group of group-likes is elementary abelian of order 4
  GrouplikeGroup gg = grouplike_group(*t);
  CHECK(gg.group.order == 4);
  for (int i = 0; i < 4; ++i) CHECK(gg.group.mul(i, i) == gg.group.identity);
}

TEST_CASE("group-likes and primitives of a group algebra") {
  HopfPtr h = group_algebra(Q, FiniteGroup::symmetric3());
  CHECK(grouplikes(*h).size() == 6);
  CHECK(primitives(*h).rank() == 0);
  GrouplikeGroup gg = grouplike_group(*h);
  CHECK(gg.group.table == FiniteGroup::symmetric3().table);
  Report r = grouplike_span_check(*h);
  INFO(r.text());
  CHECK(r.all_pass());
}

TEST_CASE("bogus group-like flag is rejected") {
  auto h = std::make_shared<FinHopf>(*group_algebra(Q, FiniteGroup::cyclic(2)));
  Vec sum = h->basis(0) + h->basis(1);
  std::vector<Vec> cc = {h->comult.column(0), Vec::kron(sum, sum)};
  h->comult = LinMap::from_columns(Q, 4, cc);  // e1 no longer group-like (and not even counital)
  CHECK_THROWS(grouplikes(*h));
  Report r = check_hopf(*h);
  bool flag_entry_failed = false;
  for (auto& e : r.entries)
    if (e.axiom == "grouplike-flags" && !e.pass) flag_entry_failed = true;
  CHECK(flag_entry_failed);
}

TEST_CASE("sampling mode kicks in above the ceiling") {
  int saved = config().full_check_ceiling;
  config().full_check_ceiling = 1;
  HopfPtr h = group_algebra(Q, FiniteGroup::symmetric3());
  Report r = check_hopf(*h);
  config().full_check_ceiling = saved;
  CHECK(r.mode == "sampled");
  CHECK(r.all_pass());
}

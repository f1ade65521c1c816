#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hx/tensorexpr.hpp"

#include <random>

using namespace hx;

static Field Q = Field::rationals();

TEST_CASE("scalar arithmetic over Q") {
  Scalar a = Scalar::parse("2/3", Q);
  Scalar b = Scalar::parse("1/6", Q);
  CHECK((a + b).str() == "5/6");
  CHECK((a * b).str() == "1/9");
  CHECK((a - a).is_zero());
  CHECK(a.inv().str() == "3/2");
  CHECK(Scalar::parse("-7/2", Q).str() == "-7/2");
  CHECK(Scalar::parse("4/6", Q) == a);
}

TEST_CASE("scalar arithmetic over F5") {
  Field f5 = Field::prime(5);
  Scalar three = Scalar::of(3, f5);
  CHECK(three.inv() == Scalar::of(2, f5));  // 3*2 = 6 = 1 mod 5
  CHECK((three + three) == Scalar::of(1, f5));
  CHECK((-three) == Scalar::of(2, f5));
  CHECK_THROWS(Field::prime(6));
  CHECK_THROWS((void)(three + Scalar::of(3, Q)));
}

TEST_CASE("kron index convention is row-major") {
  Vec a = Vec::basis(Q, 2, 1);
  Vec b = Vec::basis(Q, 3, 2);
  Vec k = Vec::kron(a, b);
  CHECK(k.dim() == 6);
  CHECK(k.at(1 * 3 + 2) == Scalar::one(Q));
}

TEST_CASE("twist swaps tensor factors") {
  LinMap tw = LinMap::twist(Q, 2, 3);
  Vec a(Q, 2), b(Q, 3);
  a.set(0, Scalar::of(2, Q));
  a.set(1, Scalar::of(3, Q));
  b.set(2, Scalar::of(5, Q));
  CHECK(tw.apply(Vec::kron(a, b)) == Vec::kron(b, a));
  // involution
  CHECK(compose(tw, LinMap::twist(Q, 3, 2)).equals(LinMap::identity(Q, 6)));
}

TEST_CASE("compose and tensor of maps") {
  // f = [[1,1],[0,1]], g = [[1,0],[2,1]] acting on columns
  LinMap f = LinMap::from_columns(Q, 2, {Vec::basis(Q, 2, 0), [] {
                                           Vec v(Q, 2);
                                           v.set(0, Scalar::one(Q));
                                           v.set(1, Scalar::one(Q));
                                           return v;
                                         }()});
  LinMap g = LinMap::from_columns(Q, 2, {[] {
                                           Vec v(Q, 2);
                                           v.set(0, Scalar::one(Q));
                                           v.set(1, Scalar::of(2, Q));
                                           return v;
                                         }(),
                                         Vec::basis(Q, 2, 1)});
  // (f.g)(e0) = f(e0 + 2 e1) = e0 + 2(e0+e1) = 3 e0 + 2 e1
  Vec got = compose(f, g).column(0);
  CHECK(got.at(0) == Scalar::of(3, Q));
  CHECK(got.at(1) == Scalar::of(2, Q));
  LinMap ff = tensor(f, g);
  CHECK(ff.dom() == 4);
  CHECK(ff.column(0) == Vec::kron(f.column(0), g.column(0)));
}

TEST_CASE("kernel of a fixed matrix") {
  // rows: x + 2y + 3z and its double; kernel is a plane
  Vec c0(Q, 2), c1(Q, 2), c2(Q, 2);
  c0.set(0, Scalar::of(1, Q));
  c0.set(1, Scalar::of(2, Q));
  c1.set(0, Scalar::of(2, Q));
  c1.set(1, Scalar::of(4, Q));
  c2.set(0, Scalar::of(3, Q));
  c2.set(1, Scalar::of(6, Q));
  LinMap m = LinMap::from_columns(Q, 2, {c0, c1, c2});
  Echelon k = kernel(m);
  CHECK(k.rank() == 2);
  for (const Vec& v : k.rows) CHECK(m.apply(v).is_zero());
  Vec w(Q, 3);  // (-2, 1, 0) is in the kernel
  w.set(0, Scalar::of(-2, Q));
  w.set(1, Scalar::of(1, Q));
  CHECK(k.contains(w));
  w.set(2, Scalar::of(1, Q));
  CHECK(!k.contains(Vec::basis(Q, 3, 0)));
}

TEST_CASE("rank-nullity on seeded random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int dom = 1 + (int)(rng() % 8), cod = 1 + (int)(rng() % 8);
    std::vector<Vec> cols;
    for (int j = 0; j < dom; ++j) {
      Vec c(Q, cod);
      for (int i = 0; i < cod; ++i)
        if (rng() % 3 == 0) c.set(i, Scalar::of((long)(rng() % 7) - 3, Q));
      cols.push_back(c);
    }
    LinMap m = LinMap::from_columns(Q, cod, cols);
    CHECK(rank_of(m) + kernel(m).rank() == dom);
  }
}

TEST_CASE("echelon basis is canonical") {
  Vec a(Q, 3), b(Q, 3), c(Q, 3);
  a.set(0, Scalar::of(1, Q));
  a.set(1, Scalar::of(1, Q));
  b.set(1, Scalar::of(1, Q));
  b.set(2, Scalar::of(1, Q));
  c = a + b.scaled(Scalar::of(3, Q));
  Echelon e1 = echelonize(Q, 3, {a, b});
  Echelon e2 = echelonize(Q, 3, {c, b, a});
  CHECK(e1 == e2);
  CHECK(e1.rank() == 2);
  // coords/reconstruct round trip
  Vec v = a.scaled(Scalar::of(2, Q)) - b;
  CHECK(e1.reconstruct(e1.coords(v)) == v);
}

TEST_CASE("subspace intersection") {
  Echelon xy = echelonize(Q, 3, {Vec::basis(Q, 3, 0), Vec::basis(Q, 3, 1)});
  Echelon yz = echelonize(Q, 3, {Vec::basis(Q, 3, 1), Vec::basis(Q, 3, 2)});
  Echelon meet = subspace_intersect(xy, yz);
  CHECK(meet.rank() == 1);
  CHECK(meet.rows[0] == Vec::basis(Q, 3, 1));
  CHECK(subspace_sum(xy, yz).rank() == 3);
}

TEST_CASE("invert") {
  Vec c1(Q, 2);
  c1.set(0, Scalar::one(Q));
  c1.set(1, Scalar::one(Q));
  LinMap f = LinMap::from_columns(Q, 2, {Vec::basis(Q, 2, 0), c1});
  LinMap fi = invert(f);
  CHECK(compose(f, fi).equals(LinMap::identity(Q, 2)));
  CHECK(compose(fi, f).equals(LinMap::identity(Q, 2)));
  CHECK_THROWS(invert(LinMap::zero(Q, 2, 2)));
}

TEST_CASE("materialization budget") {
  long saved = config().budget;
  config().budget = 10;
  CHECK_THROWS_AS(kernel(LinMap::identity(Q, 16)), BudgetExceeded);
  config().budget = saved;
}

TEST_CASE("tensor expression evaluator") {
  // manual comultiplication on dim 2: e0 group-like, e1 primitive-ish
  std::vector<Vec> cc;
  cc.push_back(Vec::basis(Q, 4, 0));                      // e0 -> e0 x e0
  cc.push_back(Vec::basis(Q, 4, 1) + Vec::basis(Q, 4, 2));  // e1 -> e0 x e1 + e1 x e0
  LinMap delta = LinMap::from_columns(Q, 4, cc);
  Tensor t = Tensor::of_vec(Vec::basis(Q, 2, 1)).comult_at(0, delta);
  CHECK(t.legs() == 2);
  CHECK(t == t.permute({1, 0}));  // cocommutative by construction
  CHECK(t.to_vec() == cc[1]);
  // insert + apply collapses correctly
  Tensor s = t.insert_vec(1, Vec::basis(Q, 3, 2));
  CHECK(s.dims() == std::vector<int>{2, 3, 2});
  LinMap ones = LinMap::from_oracle(Q, 3, 1, [](int) { return Vec::basis(Q, 1, 0); });
  CHECK(s.counit_at(1, ones).to_vec() == t.to_vec());
  // apply on two legs at once: multiply-by-flatten
  LinMap flat = LinMap::identity(Q, 4);
  Tensor u = t.apply(flat, {0, 1}, 0);
  CHECK(u.dims() == std::vector<int>{4});
  CHECK(u.to_vec() == t.to_vec());
}

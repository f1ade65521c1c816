#pragma once

#include <memory>

#include "hx/group.hpp"
#include "hx/report.hpp"
#include "hx/tensorexpr.hpp"

namespace hx {

/// Finite-dimensional Hopf algebra by structure maps on a fixed basis.
/// grouplike_flags lists basis indices claimed group-like; flags are only
/// trusted after verification (grouplikes() or check_hopf).
struct FinHopf {
  std::string name;
  Field field;
  int dim = 0;
  std::vector<std::string> labels;
  LinMap mult;      // dim*dim -> dim
  Vec unit;         // dim
  LinMap comult;    // dim -> dim*dim
  LinMap counit;    // dim -> 1
  LinMap antipode;  // dim -> dim
  std::vector<int> grouplike_flags;

  FinHopf()
      : field(Field::rationals()),
        unit(field, 0),
        mult(LinMap::zero(field, 0, 0)),
        comult(LinMap::zero(field, 0, 0)),
        counit(LinMap::zero(field, 0, 0)),
        antipode(LinMap::zero(field, 0, 0)) {}

  Vec basis(int i) const { return Vec::basis(field, dim, i); }
  const Vec& mul_basis(int i, int j) const { return mult.column(i * dim + j); }
  Vec mul(const Vec& a, const Vec& b) const { return mult.apply(Vec::kron(a, b)); }
  Scalar eps(const Vec& v) const { return counit.apply(v).at(0); }
  /// a_1 x S(a_2)
  Vec adjoint(const Vec& a, const Vec& x) const;
};

using HopfPtr = std::shared_ptr<const FinHopf>;

/// All Hopf axioms plus cocommutativity, involutive antipode and the
/// group-like flags. Heavy loops honor the paranoid/sampling config.
Report check_hopf(const FinHopf& h);

HopfPtr group_algebra(const Field& f, const FiniteGroup& g);
HopfPtr tensor_hopf(const HopfPtr& a, const HopfPtr& b);

/// Verified group-like basis indices. Throws if a flagged vector fails the
/// defining equations.
std::vector<int> grouplikes(const FinHopf& h);

/// Kernel of x -> Delta(x) - x(x)1 - 1(x)x.
Echelon primitives(const FinHopf& h);

/// Group structure carried by the verified group-like basis vectors.
struct GrouplikeGroup {
  FiniteGroup group;
  std::vector<int> basis_index;  // group element -> basis index in h
};
GrouplikeGroup grouplike_group(const FinHopf& h);

/// Degenerate structure-theorem check over Q: no primitives, and the span of
/// the verified group-likes is all of h (so the group algebra of the
/// group-likes maps isomorphically onto h by multiplication).
Report grouplike_span_check(const FinHopf& h);

}  // namespace hx

#pragma once

#include "hx/linalg.hpp"

namespace hx {

/// Sparse element of a tensor product of coordinate spaces, one "leg" per
/// factor. All the structural formulas (smash products, induced actions,
/// pairing maps) are evaluated by chaining the small operations below.
///
/// Flattening convention everywhere: legs are row-major left to right, so a
/// pair (i, j) on legs of dimensions (d1, d2) sits at index i*d2 + j.
class Tensor {
 public:
  Tensor(Field f, std::vector<int> dims) : f_(f), dims_(std::move(dims)) {}
  static Tensor of_vec(const Vec& v);
  static Tensor scalar(const Field& f, const Scalar& c);

  const Field& field() const { return f_; }
  int legs() const { return (int)dims_.size(); }
  const std::vector<int>& dims() const { return dims_; }
  bool is_zero() const { return ent_.empty(); }

  /// Apply f to the listed legs (their dims, in the listed order, flatten to
  /// f's domain). The listed legs are removed and one new leg of dimension
  /// f.cod() is inserted at position `at` (counted in the shrunken tensor).
  Tensor apply(const LinMap& f, const std::vector<int>& legs_in, int at) const;

  /// Replace leg with two legs of dimensions d1, d2 (leg dim must be d1*d2).
  Tensor split(int leg, int d1, int d2) const;

  /// apply + split: the usual comultiplication step on one leg.
  Tensor comult_at(int leg, const LinMap& comult) const;

  /// Apply a functional (cod dim 1) to a leg and absorb it as a scale.
  Tensor counit_at(int leg, const LinMap& counit) const;

  /// perm[i] = index in the old tensor of the new leg i.
  Tensor permute(const std::vector<int>& perm) const;

  Tensor insert_vec(int pos, const Vec& v) const;
  Tensor scaled(const Scalar& c) const;
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  bool operator==(const Tensor& o) const;

  /// Flatten all legs row-major into a single vector.
  Vec to_vec() const;

 private:
  Field f_;
  std::vector<int> dims_;
  std::map<std::vector<int>, Scalar> ent_;
  void put(std::vector<int> key, const Scalar& c);
};

}  // namespace hx

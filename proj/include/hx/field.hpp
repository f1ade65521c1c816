#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hx {

/// Ground field descriptor: the rationals or a prime field F_p.
struct Field {
  enum class Kind { Q, Fp };
  Kind kind = Kind::Q;
  long p = 0;

  bool operator==(const Field&) const = default;

  static Field rationals() { return Field{Kind::Q, 0}; }
  static Field prime(long p);

  std::string str() const;
  static Field parse(const std::string& s);
};

struct FieldMismatch : std::runtime_error {
  FieldMismatch() : std::runtime_error("field mismatch") {}
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (mpq_class canonicalizes); prime-field values live in [0, p).
class Scalar {
 public:
  Scalar() : f_(Field::rationals()) {}
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of(long n, const Field& f);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;

  std::string str() const;
  static Scalar parse(const std::string& s, const Field& f);

 private:
  Scalar(Field f) : f_(f) {}
  void check(const Scalar& o) const {
    if (!(f_ == o.f_)) throw FieldMismatch{};
  }
  Field f_;
  mpq_class q_;  // Q payload
  long r_ = 0;   // Fp payload
};

}  // namespace hx

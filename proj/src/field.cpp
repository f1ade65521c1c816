#include "hx/field.hpp"

namespace hx {

static bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(long p) {
  if (!is_prime(p)) throw std::runtime_error("modulus is not prime: " + std::to_string(p));
  return Field{Kind::Fp, p};
}

std::string Field::str() const {
  return kind == Kind::Q ? "q" : "fp:" + std::to_string(p);
}

Field Field::parse(const std::string& s) {
  if (s == "q" || s == "Q") return rationals();
  if (s.rfind("fp:", 0) == 0) return prime(std::stol(s.substr(3)));
  throw std::runtime_error("bad field spec: " + s);
}

Scalar Scalar::zero(const Field& f) { return Scalar(f); }

Scalar Scalar::one(const Field& f) { return of(1, f); }

Scalar Scalar::of(long n, const Field& f) {
  Scalar s(f);
  if (f.kind == Field::Kind::Q) {
    s.q_ = n;
  } else {
    s.r_ = n % f.p;
    if (s.r_ < 0) s.r_ += f.p;
  }
  return s;
}

bool Scalar::is_zero() const {
  return f_.kind == Field::Kind::Q ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::operator==(const Scalar& o) const {
  check(o);
  return f_.kind == Field::Kind::Q ? q_ == o.q_ : r_ == o.r_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar s(f_);
  if (f_.kind == Field::Kind::Q)
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % f_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar s(f_);
  if (f_.kind == Field::Kind::Q)
    s.q_ = q_ * o.q_;
  else
    s.r_ = (long)(((unsigned long long)r_ * (unsigned long long)o.r_) % (unsigned long long)f_.p);
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(f_);
  if (f_.kind == Field::Kind::Q)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : f_.p - r_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::runtime_error("inverse of zero");
  Scalar s(f_);
  if (f_.kind == Field::Kind::Q) {
    s.q_ = 1 / q_;
  } else {
    // extended Euclid
    long a = r_, b = f_.p, x0 = 1, x1 = 0;
    while (b) {
      long q = a / b;
      long t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    s.r_ = x0 % f_.p;
    if (s.r_ < 0) s.r_ += f_.p;
  }
  return s;
}

std::string Scalar::str() const {
  if (f_.kind == Field::Kind::Q) return q_.get_str();
  return std::to_string(r_);
}

Scalar Scalar::parse(const std::string& s, const Field& f) {
  Scalar r(f);
  if (f.kind == Field::Kind::Q) {
    r.q_ = mpq_class(s);
    r.q_.canonicalize();
  } else {
    mpz_class z(s);
    mpz_class m = z % f.p;
    r.r_ = m.get_si();
    if (r.r_ < 0) r.r_ += f.p;
  }
  return r;
}

}  // namespace hx

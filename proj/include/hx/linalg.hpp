#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hx/field.hpp"

namespace hx {

/// Global knobs for checking behaviour, settable from the CLI.
struct Config {
  long budget = 50'000'000;  // max dense entries before bailing out
  enum class Paranoid { Auto, On, Off } paranoid = Paranoid::Auto;
  int full_check_ceiling = 200;  // full assertion up to this ambient dim
  unsigned long long sample_seed = 1;
  int sample_percent = 10;
};

Config& config();

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(long need, long have);
};

/// Sparse vector over an exact field; only nonzero entries are stored.
class Vec {
 public:
  Vec(Field f, int dim) : f_(f), dim_(dim) {}
  static Vec basis(const Field& f, int dim, int i);

  const Field& field() const { return f_; }
  int dim() const { return dim_; }
  const std::map<int, Scalar>& entries() const { return ent_; }
  bool is_zero() const { return ent_.empty(); }
  Scalar at(int i) const;
  void add_to(int i, const Scalar& c);
  void set(int i, const Scalar& c);

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec scaled(const Scalar& c) const;
  bool operator==(const Vec& o) const;
  bool operator!=(const Vec& o) const { return !(*this == o); }

  /// Kronecker product; index of (i,j) in the result is i*o.dim()+j.
  static Vec kron(const Vec& a, const Vec& b);

  std::string str(const std::vector<std::string>* labels = nullptr) const;

 private:
  Field f_;
  int dim_;
  std::map<int, Scalar> ent_;
};

/// Linear map given either by materialized columns or by a basis-image
/// oracle. Oracle results are memoized; equality compares images of every
/// domain basis vector.
class LinMap {
 public:
  using Oracle = std::function<Vec(int)>;

  static LinMap from_columns(const Field& f, int cod, std::vector<Vec> cols);
  static LinMap from_oracle(const Field& f, int dom, int cod, Oracle fn);
  static LinMap identity(const Field& f, int n);
  static LinMap zero(const Field& f, int dom, int cod);
  /// The flip A⊗B → B⊗A on a tensor of dimensions (da, db).
  static LinMap twist(const Field& f, int da, int db);

  const Field& field() const { return b_->field; }
  int dom() const { return b_->dom; }
  int cod() const { return b_->cod; }

  const Vec& column(int i) const;
  Vec apply(const Vec& v) const;
  bool equals(const LinMap& o) const;

  /// All nonzero matrix entries (row, col, value), column by column.
  std::vector<std::tuple<int, int, Scalar>> triples() const;

 private:
  struct Body {
    Field field;
    int dom, cod;
    Oracle oracle;
    mutable std::vector<std::optional<Vec>> cache;
    mutable std::mutex mu;
  };
  std::shared_ptr<Body> b_;
};

/// f∘g
LinMap compose(const LinMap& f, const LinMap& g);
LinMap tensor(const LinMap& f, const LinMap& g);
LinMap add(const LinMap& f, const LinMap& g);
LinMap sub(const LinMap& f, const LinMap& g);

/// Row-reduced echelon basis of a subspace. Rows are pivot-sorted and fully
/// reduced, so equal subspaces have identical bases.
struct Echelon {
  Field field;
  int dim = 0;
  std::vector<Vec> rows;
  std::vector<int> pivots;

  int rank() const { return (int)rows.size(); }
  /// v minus its projection onto the span, by elimination against the rows.
  Vec residual(const Vec& v) const;
  bool contains(const Vec& v) const { return residual(v).is_zero(); }
  /// Coordinates of v in the row basis (only meaningful when contains(v)).
  Vec coords(const Vec& v) const;
  Vec reconstruct(const Vec& coords) const;
  bool operator==(const Echelon& o) const;
};

Echelon echelonize(const Field& f, int dim, const std::vector<Vec>& gens);

/// Kernel basis of f, echelonized. Respects the materialization budget.
Echelon kernel(const LinMap& f);

Echelon subspace_intersect(const Echelon& a, const Echelon& b);
Echelon subspace_sum(const Echelon& a, const Echelon& b);

/// Inverse of a bijective map; throws if f is not square and invertible.
LinMap invert(const LinMap& f);
int rank_of(const LinMap& f);

}  // namespace hx

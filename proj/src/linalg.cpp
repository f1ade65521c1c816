#include "hx/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace hx {

Config& config() {
  static Config c;
  return c;
}

BudgetExceeded::BudgetExceeded(long need, long have)
    : std::runtime_error("materialization budget exceeded: need " + std::to_string(need) +
                         " entries, budget " + std::to_string(have)) {}

Vec Vec::basis(const Field& f, int dim, int i) {
  Vec v(f, dim);
  v.ent_.emplace(i, Scalar::one(f));
  return v;
}

Scalar Vec::at(int i) const {
  auto it = ent_.find(i);
  return it == ent_.end() ? Scalar::zero(f_) : it->second;
}

void Vec::add_to(int i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = ent_.emplace(i, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) ent_.erase(it);
  }
}

void Vec::set(int i, const Scalar& c) {
  if (c.is_zero())
    ent_.erase(i);
  else
    ent_.insert_or_assign(i, c);
}

Vec Vec::operator+(const Vec& o) const {
  Vec r = *this;
  for (auto& [i, c] : o.ent_) r.add_to(i, c);
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  Vec r = *this;
  for (auto& [i, c] : o.ent_) r.add_to(i, -c);
  return r;
}

Vec Vec::scaled(const Scalar& c) const {
  Vec r(f_, dim_);
  if (c.is_zero()) return r;
  for (auto& [i, v] : ent_) r.ent_.emplace(i, v * c);
  return r;
}

bool Vec::operator==(const Vec& o) const { return dim_ == o.dim_ && ent_ == o.ent_; }

Vec Vec::kron(const Vec& a, const Vec& b) {
  Vec r(a.f_, a.dim_ * b.dim_);
  for (auto& [i, c] : a.ent_)
    for (auto& [j, d] : b.ent_) r.ent_.emplace(i * b.dim_ + j, c * d);
  return r;
}

std::string Vec::str(const std::vector<std::string>* labels) const {
  if (ent_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [i, c] : ent_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*";
    if (labels && i < (int)labels->size())
      os << (*labels)[i];
    else
      os << "e" << i;
  }
  return os.str();
}

LinMap LinMap::from_columns(const Field& f, int cod, std::vector<Vec> cols) {
  LinMap m;
  m.b_ = std::make_shared<Body>();
  m.b_->field = f;
  m.b_->dom = (int)cols.size();
  m.b_->cod = cod;
  m.b_->cache.resize(cols.size());
  for (size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].dim() != cod) throw std::runtime_error("column dimension mismatch");
    m.b_->cache[i] = std::move(cols[i]);
  }
  return m;
}

LinMap LinMap::from_oracle(const Field& f, int dom, int cod, Oracle fn) {
  LinMap m;
  m.b_ = std::make_shared<Body>();
  m.b_->field = f;
  m.b_->dom = dom;
  m.b_->cod = cod;
  m.b_->oracle = std::move(fn);
  m.b_->cache.resize(dom);
  return m;
}

LinMap LinMap::identity(const Field& f, int n) {
  return from_oracle(f, n, n, [f, n](int i) { return Vec::basis(f, n, i); });
}

LinMap LinMap::zero(const Field& f, int dom, int cod) {
  return from_oracle(f, dom, cod, [f, cod](int) { return Vec(f, cod); });
}

LinMap LinMap::twist(const Field& f, int da, int db) {
  return from_oracle(f, da * db, da * db, [f, da, db](int k) {
    int i = k / db, j = k % db;
    return Vec::basis(f, da * db, j * da + i);
  });
}

const Vec& LinMap::column(int i) const {
  auto& b = *b_;
  {
    std::lock_guard<std::mutex> lk(b.mu);
    if (b.cache[i]) return *b.cache[i];
  }
  Vec v = b.oracle(i);
  if (v.dim() != b.cod) throw std::runtime_error("oracle image dimension mismatch");
  std::lock_guard<std::mutex> lk(b.mu);
  if (!b.cache[i]) b.cache[i] = std::move(v);
  return *b.cache[i];
}

Vec LinMap::apply(const Vec& v) const {
  if (v.dim() != dom()) throw std::runtime_error("apply: dimension mismatch");
  Vec r(field(), cod());
  for (auto& [i, c] : v.entries())
    for (auto& [j, d] : column(i).entries()) r.add_to(j, d * c);
  return r;
}

bool LinMap::equals(const LinMap& o) const {
  if (dom() != o.dom() || cod() != o.cod()) return false;
  for (int i = 0; i < dom(); ++i)
    if (column(i) != o.column(i)) return false;
  return true;
}

std::vector<std::tuple<int, int, Scalar>> LinMap::triples() const {
  std::vector<std::tuple<int, int, Scalar>> out;
  for (int j = 0; j < dom(); ++j)
    for (auto& [i, c] : column(j).entries()) out.emplace_back(i, j, c);
  return out;
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (g.cod() != f.dom()) throw std::runtime_error("compose: dimension mismatch");
  return LinMap::from_oracle(f.field(), g.dom(), f.cod(),
                             [f, g](int i) { return f.apply(g.column(i)); });
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  int gd = g.dom();
  return LinMap::from_oracle(f.field(), f.dom() * gd, f.cod() * g.cod(), [f, g, gd](int k) {
    return Vec::kron(f.column(k / gd), g.column(k % gd));
  });
}

LinMap add(const LinMap& f, const LinMap& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) throw std::runtime_error("add: shape mismatch");
  return LinMap::from_oracle(f.field(), f.dom(), f.cod(),
                             [f, g](int i) { return f.column(i) + g.column(i); });
}

LinMap sub(const LinMap& f, const LinMap& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) throw std::runtime_error("sub: shape mismatch");
  return LinMap::from_oracle(f.field(), f.dom(), f.cod(),
                             [f, g](int i) { return f.column(i) - g.column(i); });
}

Vec Echelon::residual(const Vec& v) const {
  Vec r = v;
  for (size_t k = 0; k < rows.size(); ++k) {
    Scalar c = r.at(pivots[k]);
    if (!c.is_zero()) r = r - rows[k].scaled(c);
  }
  return r;
}

Vec Echelon::coords(const Vec& v) const {
  Vec out(field, rank());
  Vec r = v;
  for (size_t k = 0; k < rows.size(); ++k) {
    Scalar c = r.at(pivots[k]);
    if (!c.is_zero()) {
      out.set((int)k, c);
      r = r - rows[k].scaled(c);
    }
  }
  return out;
}

Vec Echelon::reconstruct(const Vec& c) const {
  Vec out(field, dim);
  for (auto& [k, v] : c.entries()) out = out + rows[k].scaled(v);
  return out;
}

bool Echelon::operator==(const Echelon& o) const {
  return dim == o.dim && pivots == o.pivots && rows == o.rows;
}

Echelon echelonize(const Field& f, int dim, const std::vector<Vec>& gens) {
  Echelon e{f, dim, {}, {}};
  for (const Vec& g : gens) {
    Vec r = e.residual(g);
    if (r.is_zero()) continue;
    int piv = r.entries().begin()->first;
    r = r.scaled(r.entries().begin()->second.inv());
    // back-substitute into existing rows, keep the basis fully reduced
    for (size_t k = 0; k < e.rows.size(); ++k) {
      Scalar c = e.rows[k].at(piv);
      if (!c.is_zero()) e.rows[k] = e.rows[k] - r.scaled(c);
    }
    e.rows.push_back(std::move(r));
    e.pivots.push_back(piv);
  }
  // sort by pivot column
  std::vector<size_t> order(e.rows.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return e.pivots[a] < e.pivots[b]; });
  Echelon s{f, dim, {}, {}};
  for (size_t i : order) {
    s.rows.push_back(std::move(e.rows[i]));
    s.pivots.push_back(e.pivots[i]);
  }
  return s;
}

Echelon kernel(const LinMap& f) {
  const Field& F = f.field();
  int n = f.dom();
  // Gaussian elimination on rows of the matrix, tracked sparsely.
  long nnz = 0;
  std::map<int, Vec> rows;  // row index -> sparse row over domain coords
  for (int j = 0; j < n; ++j)
    for (auto& [i, c] : f.column(j).entries()) {
      if (++nnz > config().budget) throw BudgetExceeded(nnz, config().budget);
      auto it = rows.find(i);
      if (it == rows.end()) it = rows.emplace(i, Vec(F, n)).first;
      it->second.set(j, c);
    }
  Echelon rr = echelonize(F, n, [&] {
    std::vector<Vec> v;
    v.reserve(rows.size());
    for (auto& [i, r] : rows) v.push_back(std::move(r));
    return v;
  }());
  // free columns give the kernel basis
  std::vector<bool> is_pivot(n, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> ker;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v(F, n);
    v.set(j, Scalar::one(F));
    for (size_t k = 0; k < rr.rows.size(); ++k) {
      Scalar c = rr.rows[k].at(j);
      if (!c.is_zero()) v.set(rr.pivots[k], -c);
    }
    ker.push_back(std::move(v));
  }
  return echelonize(F, n, ker);
}

Echelon subspace_intersect(const Echelon& a, const Echelon& b) {
  if (a.dim != b.dim) throw std::runtime_error("intersect: ambient dimension mismatch");
  const Field& F = a.field;
  // kernel of (x, y) -> sum_i x_i a_i - sum_j y_j b_j, read off the a-part
  int ka = a.rank(), kb = b.rank();
  std::vector<Vec> cols;
  cols.reserve(ka + kb);
  for (int i = 0; i < ka; ++i) cols.push_back(a.rows[i]);
  for (int j = 0; j < kb; ++j) cols.push_back(b.rows[j].scaled(-Scalar::one(F)));
  Echelon ker = kernel(LinMap::from_columns(F, a.dim, std::move(cols)));
  std::vector<Vec> gens;
  for (const Vec& v : ker.rows) {
    Vec w(F, a.dim);
    for (auto& [i, c] : v.entries())
      if (i < ka) w = w + a.rows[i].scaled(c);
    gens.push_back(std::move(w));
  }
  return echelonize(F, a.dim, gens);
}

Echelon subspace_sum(const Echelon& a, const Echelon& b) {
  if (a.dim != b.dim) throw std::runtime_error("sum: ambient dimension mismatch");
  std::vector<Vec> gens = a.rows;
  gens.insert(gens.end(), b.rows.begin(), b.rows.end());
  return echelonize(a.field, a.dim, gens);
}

int rank_of(const LinMap& f) {
  std::vector<Vec> cols;
  cols.reserve(f.dom());
  for (int i = 0; i < f.dom(); ++i) cols.push_back(f.column(i));
  return echelonize(f.field(), f.cod(), cols).rank();
}

LinMap invert(const LinMap& f) {
  if (f.dom() != f.cod()) throw std::runtime_error("invert: map is not square");
  const Field& F = f.field();
  int n = f.dom();
  // eliminate on augmented rows [f^T | I] column-wise: run echelonize over
  // vectors (column of f, e_j) in dimension cod+dom
  std::vector<Vec> aug;
  for (int j = 0; j < n; ++j) {
    Vec v(F, 2 * n);
    for (auto& [i, c] : f.column(j).entries()) v.set(i, c);
    v.set(n + j, Scalar::one(F));
    aug.push_back(std::move(v));
  }
  Echelon e = echelonize(F, 2 * n, aug);
  if (e.rank() != n) throw std::runtime_error("invert: map is singular");
  std::vector<Vec> inv_cols(n, Vec(F, n));
  for (int k = 0; k < n; ++k) {
    if (e.pivots[k] != k) throw std::runtime_error("invert: map is singular");
    // row k reads: e_k (in first block) = sum over second block of coeffs * f^{-1}
    Vec col(F, n);
    for (auto& [i, c] : e.rows[k].entries())
      if (i >= n) col.set(i - n, c);
    inv_cols[k] = std::move(col);
  }
  return LinMap::from_columns(F, n, std::move(inv_cols));
}

}  // namespace hx

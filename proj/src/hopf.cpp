#include "hx/hopf.hpp"

#include <sstream>

namespace hx {

Vec FinHopf::adjoint(const Vec& a, const Vec& x) const {
  Tensor t = Tensor::of_vec(a).comult_at(0, comult);  // [a1, a2]
  t = t.apply(antipode, {1}, 1);                      // [a1, S(a2)]
  t = t.insert_vec(1, x);                             // [a1, x, S(a2)]
  t = t.apply(mult, {0, 1}, 0).apply(mult, {0, 1}, 0);
  return t.to_vec();
}

Report check_hopf(const FinHopf& h) {
  Report r;
  r.subject = "hopf " + h.name;
  const int d = h.dim;
  const Field& F = h.field;
  if (h.mult.dom() != d * d || h.mult.cod() != d || h.comult.dom() != d ||
      h.comult.cod() != d * d || h.counit.dom() != d || h.counit.cod() != 1 ||
      h.antipode.dom() != d || h.antipode.cod() != d || h.unit.dim() != d) {
    r.add("shapes", false, "structure map dimensions are inconsistent");
    return r;
  }
  r.add("shapes", true);

  auto mulv = [&](const Vec& a, const Vec& b) { return h.mul(a, b); };

  check_tuples(r, "assoc", d, {d, d, d}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    const Vec& ij = h.mul_basis(t[0], t[1]);
    const Vec& jk = h.mul_basis(t[1], t[2]);
    Vec lhs(F, d), rhs(F, d);
    for (auto& [m, c] : ij.entries())
      for (auto& [x, v] : h.mul_basis(m, t[2]).entries()) lhs.add_to(x, v * c);
    for (auto& [m, c] : jk.entries())
      for (auto& [x, v] : h.mul_basis(t[0], m).entries()) rhs.add_to(x, v * c);
    if (lhs != rhs) return "(ab)c != a(bc)";
    return std::nullopt;
  });

  check_tuples(r, "unit", d, {d}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    Vec e = h.basis(t[0]);
    if (mulv(h.unit, e) != e) return "1*a != a";
    if (mulv(e, h.unit) != e) return "a*1 != a";
    return std::nullopt;
  });

  check_tuples(r, "coassoc", d, {d}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    Tensor x = Tensor::of_vec(h.basis(t[0]));
    Tensor l = x.comult_at(0, h.comult).comult_at(0, h.comult);
    Tensor rr = x.comult_at(0, h.comult).comult_at(1, h.comult);
    if (!(l == rr)) return "(Delta x id)Delta != (id x Delta)Delta";
    return std::nullopt;
  });

  check_tuples(r, "counit", d, {d}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    Tensor x = Tensor::of_vec(h.basis(t[0])).comult_at(0, h.comult);
    if (x.counit_at(0, h.counit).to_vec() != h.basis(t[0])) return "(eps x id)Delta != id";
    if (x.counit_at(1, h.counit).to_vec() != h.basis(t[0])) return "(id x eps)Delta != id";
    return std::nullopt;
  });

  check_tuples(r, "comult-mult", d, {d, d}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    Vec lhs = h.comult.apply(h.mul_basis(t[0], t[1]));
    Tensor rt = Tensor::of_vec(h.basis(t[0])).comult_at(0, h.comult);
    rt = rt.insert_vec(2, h.basis(t[1])).comult_at(2, h.comult);  // [a1,a2,b1,b2]
    rt = rt.apply(h.mult, {0, 2}, 0).apply(h.mult, {1, 2}, 1);    // [a1b1, a2b2]
    if (lhs != rt.to_vec()) return "Delta(ab) != Delta(a)Delta(b)";
    return std::nullopt;
  });

  r.add("comult-unit", h.comult.apply(h.unit) == Vec::kron(h.unit, h.unit));
  r.add("counit-unit", h.eps(h.unit) == Scalar::one(F));

  check_tuples(r, "counit-mult", d, {d, d}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    if (h.eps(h.mul_basis(t[0], t[1])) != h.eps(h.basis(t[0])) * h.eps(h.basis(t[1])))
      return "eps(ab) != eps(a)eps(b)";
    return std::nullopt;
  });

  check_tuples(r, "antipode", d, {d}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    Tensor x = Tensor::of_vec(h.basis(t[0])).comult_at(0, h.comult);
    Vec l = x.apply(h.antipode, {0}, 0).apply(h.mult, {0, 1}, 0).to_vec();
    Vec rr = x.apply(h.antipode, {1}, 1).apply(h.mult, {0, 1}, 0).to_vec();
    Vec want = h.unit.scaled(h.eps(h.basis(t[0])));
    if (l != want) return "m(S x id)Delta != unit.eps";
    if (rr != want) return "m(id x S)Delta != unit.eps";
    return std::nullopt;
  });

  check_tuples(r, "cocommutative", d, {d}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    Tensor x = Tensor::of_vec(h.basis(t[0])).comult_at(0, h.comult);
    if (!(x == x.permute({1, 0}))) return "twist.Delta != Delta";
    return std::nullopt;
  });

  check_tuples(r, "antipode-involutive", d, {d}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    if (h.antipode.apply(h.antipode.column(t[0])) != h.basis(t[0])) return "S(S(x)) != x";
    return std::nullopt;
  });

  bool flags_ok = true;
  std::string flag_detail;
  for (int i : h.grouplike_flags) {
    if (h.comult.column(i) != Vec::kron(h.basis(i), h.basis(i)) ||
        h.eps(h.basis(i)) != Scalar::one(F)) {
      flags_ok = false;
      flag_detail = "basis " + std::to_string(i) + " flagged but not group-like";
      break;
    }
  }
  r.add("grouplike-flags", flags_ok, flag_detail);
  return r;
}

HopfPtr group_algebra(const Field& f, const FiniteGroup& g) {
  auto h = std::make_shared<FinHopf>();
  h->name = "k[" + g.name + "]";
  h->field = f;
  h->dim = g.order;
  h->labels = g.labels;
  int d = g.order;
  std::vector<Vec> mcols, ccols, ecols, scols;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) mcols.push_back(Vec::basis(f, d, g.mul(i, j)));
  for (int i = 0; i < d; ++i) {
    ccols.push_back(Vec::basis(f, d * d, i * d + i));
    ecols.push_back(Vec::basis(f, 1, 0));
    scols.push_back(Vec::basis(f, d, g.inv(i)));
    h->grouplike_flags.push_back(i);
  }
  h->mult = LinMap::from_columns(f, d, std::move(mcols));
  h->comult = LinMap::from_columns(f, d * d, std::move(ccols));
  h->counit = LinMap::from_columns(f, 1, std::move(ecols));
  h->antipode = LinMap::from_columns(f, d, std::move(scols));
  h->unit = Vec::basis(f, d, g.identity);
  return h;
}

HopfPtr tensor_hopf(const HopfPtr& a, const HopfPtr& b) {
  auto h = std::make_shared<FinHopf>();
  const Field& F = a->field;
  if (!(F == b->field)) throw FieldMismatch{};
  int da = a->dim, db = b->dim, d = da * db;
  h->name = a->name + "(x)" + b->name;
  h->field = F;
  h->dim = d;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) h->labels.push_back("(" + a->labels[i] + "," + b->labels[j] + ")");
  HopfPtr A = a, B = b;
  h->unit = Vec::kron(a->unit, b->unit);
  h->mult = LinMap::from_oracle(F, d * d, d, [A, B, da, db, d, F](int k) {
    // k indexes ((i1,j1),(i2,j2)); multiply componentwise
    int left = k / d, right = k % d;
    return Vec::kron(A->mul_basis(left / db, right / db), B->mul_basis(left % db, right % db));
  });
  h->comult = LinMap::from_oracle(F, d, d * d, [A, B, db, d](int k) {
    Tensor t = Tensor::of_vec(A->comult.column(k / db)).split(0, A->dim, A->dim);
    t = t.insert_vec(2, B->comult.column(k % db)).split(2, B->dim, B->dim);
    return t.permute({0, 2, 1, 3}).to_vec();  // [a1,b1,a2,b2]
  });
  h->counit = LinMap::from_oracle(F, d, 1, [A, B, db, F](int k) {
    Vec v(F, 1);
    v.set(0, A->eps(A->basis(k / db)) * B->eps(B->basis(k % db)));
    return v;
  });
  h->antipode = LinMap::from_oracle(F, d, d, [A, B, db](int k) {
    return Vec::kron(A->antipode.column(k / db), B->antipode.column(k % db));
  });
  for (int i : a->grouplike_flags)
    for (int j : b->grouplike_flags) h->grouplike_flags.push_back(i * db + j);
  return h;
}

std::vector<int> grouplikes(const FinHopf& h) {
  for (int i : h.grouplike_flags) {
    if (h.comult.column(i) != Vec::kron(h.basis(i), h.basis(i)) ||
        h.eps(h.basis(i)) != Scalar::one(h.field))
      throw std::runtime_error("group-like flag fails verification at basis " + std::to_string(i));
  }
  return h.grouplike_flags;
}

Echelon primitives(const FinHopf& h) {
  const Field& F = h.field;
  int d = h.dim;
  const FinHopf* H = &h;
  LinMap delta_minus = LinMap::from_oracle(F, d, d * d, [H, d](int i) {
    return H->comult.column(i) - Vec::kron(H->basis(i), H->unit) - Vec::kron(H->unit, H->basis(i));
  });
  return kernel(delta_minus);
}

GrouplikeGroup grouplike_group(const FinHopf& h) {
  std::vector<int> gl = grouplikes(h);
  GrouplikeGroup out;
  out.basis_index = gl;
  std::vector<int> pos(h.dim, -1);
  for (size_t k = 0; k < gl.size(); ++k) pos[gl[k]] = (int)k;
  FiniteGroup& g = out.group;
  g.name = "g(" + h.name + ")";
  g.order = (int)gl.size();
  g.table.assign(g.order, std::vector<int>(g.order, -1));
  g.identity = -1;
  for (size_t k = 0; k < gl.size(); ++k) {
    g.labels.push_back(h.labels[gl[k]]);
    if (h.basis(gl[k]) == h.unit) g.identity = (int)k;
  }
  if (g.identity < 0) throw std::runtime_error("unit is not a flagged group-like basis vector");
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j) {
      const Vec& p = h.mul_basis(gl[i], gl[j]);
      if (p.entries().size() != 1 || !(p.entries().begin()->second == Scalar::one(h.field)))
        throw std::runtime_error("product of group-likes is not a basis vector");
      int b = p.entries().begin()->first;
      if (pos[b] < 0) throw std::runtime_error("product of group-likes is not flagged group-like");
      g.table[i][j] = pos[b];
    }
  g.validate();
  return out;
}

Report grouplike_span_check(const FinHopf& h) {
  Report r;
  r.subject = "grouplike-span " + h.name;
  Echelon prim = primitives(h);
  r.add("primitives-trivial", prim.rank() == 0,
        prim.rank() ? "primitive subspace has dimension " + std::to_string(prim.rank()) : "");
  try {
    GrouplikeGroup gg = grouplike_group(h);
    r.add("grouplikes-form-group", true);
    r.add("grouplike-span-full", gg.group.order == h.dim,
          gg.group.order == h.dim
              ? ""
              : std::to_string(gg.group.order) + " group-likes in dimension " + std::to_string(h.dim));
  } catch (const std::exception& ex) {
    r.add("grouplikes-form-group", false, ex.what());
  }
  return r;
}

}  // namespace hx

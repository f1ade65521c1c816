#include "hx/morphism.hpp"

namespace hx {

HopfMorphism identity_morphism(const HopfPtr& h) {
  return {h, h, LinMap::identity(h->field, h->dim)};
}

HopfMorphism compose(const HopfMorphism& f, const HopfMorphism& g) {
  if (g.cod.get() != f.dom.get() && g.cod->dim != f.dom->dim)
    throw std::runtime_error("morphism compose: domain mismatch");
  return {g.dom, f.cod, compose(f.map, g.map)};
}

Report check_morphism(const HopfMorphism& f) {
  Report r;
  const FinHopf& A = *f.dom;
  const FinHopf& B = *f.cod;
  r.subject = "morphism " + A.name + " -> " + B.name;
  if (f.map.dom() != A.dim || f.map.cod() != B.dim) {
    r.add("shapes", false, "matrix shape does not match domain/codomain");
    return r;
  }
  r.add("shapes", true);
  int d = A.dim;

  check_tuples(r, "algebra-mult", d, {d, d}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    Vec lhs = f.map.apply(A.mul_basis(t[0], t[1]));
    Vec rhs = B.mul(f.map.column(t[0]), f.map.column(t[1]));
    if (lhs != rhs) return "f(ab) != f(a)f(b)";
    return std::nullopt;
  });
  r.add("algebra-unit", f.map.apply(A.unit) == B.unit);

  check_tuples(r, "coalgebra-comult", d, {d}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    Vec lhs = Tensor::of_vec(f.map.column(t[0])).comult_at(0, B.comult).to_vec();
    Vec rhs = Tensor::of_vec(A.basis(t[0]))
                  .comult_at(0, A.comult)
                  .apply(f.map, {0}, 0)
                  .apply(f.map, {1}, 1)
                  .to_vec();
    if (lhs != rhs) return "Delta f != (f x f) Delta";
    return std::nullopt;
  });

  check_tuples(r, "coalgebra-counit", d, {d}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    if (B.eps(f.map.column(t[0])) != A.eps(A.basis(t[0]))) return "eps f != eps";
    return std::nullopt;
  });

  check_tuples(r, "antipode-compat", d, {d}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    if (f.map.apply(A.antipode.column(t[0])) != B.antipode.apply(f.map.column(t[0])))
      return "f S != S f";
    return std::nullopt;
  });
  return r;
}

LinMap SubHopf::coords_map() const {
  Echelon sp = span;
  const Field& F = ambient->field;
  return LinMap::from_oracle(F, ambient->dim, sp.rank(),
                             [sp](int i) { return sp.coords(Vec::basis(sp.field, sp.dim, i)); });
}

Report SubHopf::verify() const {
  Report r;
  const FinHopf& H = *ambient;
  r.subject = "sub of " + H.name + " (dim " + std::to_string(dim()) + ")";
  r.add("unit", span.contains(H.unit));

  int k = dim();
  check_tuples(r, "mult-closed", H.dim, {k, k}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    if (!span.contains(H.mul(span.rows[t[0]], span.rows[t[1]]))) return "product leaves the span";
    return std::nullopt;
  });

  // residual against the span, as a linear map
  Echelon sp = span;
  LinMap R = LinMap::from_oracle(H.field, H.dim, H.dim,
                                 [sp](int i) { return sp.residual(Vec::basis(sp.field, sp.dim, i)); });
  check_tuples(r, "comult-closed", H.dim, {k}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    Tensor d = Tensor::of_vec(span.rows[t[0]]).comult_at(0, H.comult);
    if (!d.apply(R, {0}, 0).is_zero()) return "Delta(w) is not in span x H";
    if (!d.apply(R, {1}, 1).is_zero()) return "Delta(w) is not in H x span";
    return std::nullopt;
  });

  check_tuples(r, "antipode-closed", H.dim, {k}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    if (!span.contains(H.antipode.apply(span.rows[t[0]]))) return "S(w) leaves the span";
    return std::nullopt;
  });
  return r;
}

HopfPtr SubHopf::as_hopf(const std::string& name) const {
  const FinHopf& H = *ambient;
  const Field& F = H.field;
  int k = dim();
  auto out = std::make_shared<FinHopf>();
  out->name = name.empty() ? "sub(" + H.name + "," + std::to_string(k) + ")" : name;
  out->field = F;
  out->dim = k;
  for (int i = 0; i < k; ++i) out->labels.push_back(span.rows[i].str(&H.labels));
  Echelon sp = span;
  HopfPtr amb = ambient;
  out->unit = sp.coords(H.unit);
  if (sp.reconstruct(out->unit) != H.unit)
    throw std::runtime_error("sub_as_hopf: unit is not in the span");
  out->mult = LinMap::from_oracle(F, k * k, k, [amb, sp, k](int t) {
    Vec p = amb->mul(sp.rows[t / k], sp.rows[t % k]);
    Vec c = sp.coords(p);
    if (sp.reconstruct(c) != p) throw std::runtime_error("sub_as_hopf: span is not mult-closed");
    return c;
  });
  LinMap C = coords_map();
  out->comult = LinMap::from_oracle(F, k, k * k, [amb, sp, C](int i) {
    Tensor d = Tensor::of_vec(sp.rows[i]).comult_at(0, amb->comult);
    return d.apply(C, {0}, 0).apply(C, {1}, 1).to_vec();
  });
  out->counit = LinMap::from_oracle(F, k, 1, [amb, sp](int i) {
    Vec v(sp.field, 1);
    v.set(0, amb->eps(sp.rows[i]));
    return v;
  });
  out->antipode = LinMap::from_oracle(F, k, k, [amb, sp](int i) {
    Vec s = amb->antipode.apply(sp.rows[i]);
    Vec c = sp.coords(s);
    if (sp.reconstruct(c) != s) throw std::runtime_error("sub_as_hopf: span is not antipode-closed");
    return c;
  });
  for (int i = 0; i < k; ++i) {
    if (H.comult.apply(span.rows[i]) == Vec::kron(span.rows[i], span.rows[i]) &&
        H.eps(span.rows[i]) == Scalar::one(F))
      out->grouplike_flags.push_back(i);
  }
  return out;
}

HopfMorphism SubHopf::inclusion(const std::string& name) const {
  HopfPtr sub = as_hopf(name);
  Echelon sp = span;
  LinMap inc = LinMap::from_oracle(ambient->field, sp.rank(), ambient->dim,
                                   [sp](int i) { return sp.rows[i]; });
  return {sub, ambient, inc};
}

SubHopf sub_from_vectors(const HopfPtr& h, const std::vector<Vec>& gens) {
  return SubHopf{h, echelonize(h->field, h->dim, gens)};
}

SubHopf image_sub(const HopfMorphism& f) {
  std::vector<Vec> cols;
  for (int i = 0; i < f.map.dom(); ++i) cols.push_back(f.map.column(i));
  return sub_from_vectors(f.cod, cols);
}

SubHopf hker(const HopfMorphism& f) {
  const FinHopf& A = *f.dom;
  const FinHopf& B = *f.cod;
  const Field& F = A.field;
  int da = A.dim, db = B.dim;
  LinMap fm = f.map;
  HopfPtr Ap = f.dom;
  // T1(a) = f(a_1) x a_2 - 1_B x a
  LinMap t1 = LinMap::from_oracle(F, da, db * da, [Ap, fm, &B](int i) {
    Tensor d = Tensor::of_vec(Ap->basis(i)).comult_at(0, Ap->comult).apply(fm, {0}, 0);
    return d.to_vec() - Vec::kron(B.unit, Ap->basis(i));
  });
  // T2(a) = a_1 x f(a_2) - a x 1_B
  LinMap t2 = LinMap::from_oracle(F, da, da * db, [Ap, fm, &B](int i) {
    Tensor d = Tensor::of_vec(Ap->basis(i)).comult_at(0, Ap->comult).apply(fm, {1}, 1);
    return d.to_vec() - Vec::kron(Ap->basis(i), B.unit);
  });
  Echelon k1 = kernel(t1);
  Echelon k2 = kernel(t2);
  if (!(k1 == k2))
    throw std::runtime_error("hker: left and right Hopf kernels disagree (is the input cocommutative?)");
  SubHopf out{f.dom, k1};
  require_pass(out.verify());
  return out;
}

bool is_normal(const SubHopf& u) {
  const FinHopf& H = *u.ambient;
  for (int a = 0; a < H.dim; ++a)
    for (const Vec& w : u.span.rows)
      if (!u.span.contains(H.adjoint(H.basis(a), w))) return false;
  return true;
}

bool commute_elementwise(const SubHopf& u, const SubHopf& v) {
  const FinHopf& H = *u.ambient;
  if (v.ambient.get() != u.ambient.get() && v.ambient->dim != H.dim)
    throw std::runtime_error("commute_elementwise: different ambients");
  for (const Vec& a : u.span.rows)
    for (const Vec& b : v.span.rows)
      if (H.mul(a, b) != H.mul(b, a)) return false;
  return true;
}

SubHopf sub_intersect(const SubHopf& a, const SubHopf& b) {
  return SubHopf{a.ambient, subspace_intersect(a.span, b.span)};
}

Echelon largest_subcoalgebra_in(const FinHopf& h, Echelon w) {
  const Field& F = h.field;
  for (;;) {
    Echelon sp = w;
    LinMap R = LinMap::from_oracle(F, h.dim, h.dim,
                                   [sp](int i) { return sp.residual(Vec::basis(sp.field, sp.dim, i)); });
    // restrict to w: map w-coords -> pair of residual defects
    int k = w.rank();
    LinMap defect = LinMap::from_oracle(F, k, 2 * h.dim * h.dim, [sp, &h, R, k](int i) {
      Tensor d = Tensor::of_vec(sp.rows[i]).comult_at(0, h.comult);
      Vec left = d.apply(R, {0}, 0).to_vec();
      Vec right = d.apply(R, {1}, 1).to_vec();
      Vec out(sp.field, 2 * h.dim * h.dim);
      for (auto& [j, c] : left.entries()) out.set(j, c);
      for (auto& [j, c] : right.entries()) out.set(h.dim * h.dim + j, c);
      return out;
    });
    Echelon ker = kernel(defect);
    if (ker.rank() == k) return w;
    std::vector<Vec> gens;
    for (const Vec& c : ker.rows) gens.push_back(w.reconstruct(c));
    w = echelonize(F, h.dim, gens);
  }
}

}  // namespace hx

#include "hx/action.hpp"

namespace hx {

Report check_action(const HopfAction& a) {
  Report r;
  const FinHopf& B = *a.acting;
  const FinHopf& X = *a.acted;
  r.subject = "action " + B.name + " on " + X.name;
  if (a.xi.dom() != B.dim * X.dim || a.xi.cod() != X.dim) {
    r.add("shapes", false, "xi shape mismatch");
    return r;
  }
  r.add("shapes", true);
  int db = B.dim, dx = X.dim, amb = std::max(db, dx);
  const LinMap& xi = a.xi;

  check_tuples(r, "act-mult", amb, {db, db, dx}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    Vec lhs = xi.apply(Vec::kron(B.mul_basis(t[0], t[1]), X.basis(t[2])));
    Vec rhs = xi.apply(Vec::kron(B.basis(t[0]), xi.column(t[1] * dx + t[2])));
    if (lhs != rhs) return "(bc).x != b.(c.x)";
    return std::nullopt;
  });

  check_tuples(r, "act-unit", amb, {dx}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    if (xi.apply(Vec::kron(B.unit, X.basis(t[0]))) != X.basis(t[0])) return "1.x != x";
    return std::nullopt;
  });

  check_tuples(r, "mult-compat", amb, {db, dx, dx}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    Vec lhs = xi.apply(Vec::kron(B.basis(t[0]), X.mul_basis(t[1], t[2])));
    Tensor u = Tensor::of_vec(B.basis(t[0])).comult_at(0, B.comult);  // [b1,b2]
    u = u.insert_vec(1, X.basis(t[1])).apply(xi, {0, 1}, 0);          // [b1.x, b2]
    u = u.insert_vec(2, X.basis(t[2])).apply(xi, {1, 2}, 1);          // [b1.x, b2.y]
    if (lhs != u.apply(X.mult, {0, 1}, 0).to_vec()) return "b.(xy) != (b1.x)(b2.y)";
    return std::nullopt;
  });

  check_tuples(r, "unit-compat", amb, {db}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    if (xi.apply(Vec::kron(B.basis(t[0]), X.unit)) != X.unit.scaled(B.eps(B.basis(t[0]))))
      return "b.1 != eps(b)1";
    return std::nullopt;
  });

  check_tuples(r, "comult-compat", amb, {db, dx}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    Vec lhs = X.comult.apply(xi.column(t[0] * dx + t[1]));
    Tensor u = Tensor::of_vec(B.basis(t[0])).comult_at(0, B.comult);  // [b1,b2]
    u = u.insert_vec(2, X.comult.column(t[1])).split(2, dx, dx);      // [b1,b2,x1,x2]
    u = u.apply(xi, {0, 2}, 0).apply(xi, {1, 2}, 1);                  // [b1.x1, b2.x2]
    if (lhs != u.to_vec()) return "Delta(b.x) != b1.x1 (x) b2.x2";
    return std::nullopt;
  });

  check_tuples(r, "counit-compat", amb, {db, dx}, [&](const std::vector<int>& t) -> std::optional<std::string> {
    if (X.eps(xi.column(t[0] * dx + t[1])) != B.eps(B.basis(t[0])) * X.eps(X.basis(t[1])))
      return "eps(b.x) != eps(b)eps(x)";
    return std::nullopt;
  });
  return r;
}

Report check_split_epi(const SplitEpi& s) {
  Report r;
  r.subject = "split epi " + s.total->name + " -> " + s.base->name;
  r.merge("retraction", check_morphism(s.retraction));
  r.merge("section", check_morphism(s.section));
  r.add("retraction-section-id",
        compose(s.retraction.map, s.section.map).equals(LinMap::identity(s.base->field, s.base->dim)));
  return r;
}

HopfPtr smash(const HopfAction& a, const std::string& name) {
  const Field& F = a.acting->field;
  HopfPtr B = a.acting, X = a.acted;
  LinMap xi = a.xi;
  int db = B->dim, dx = X->dim, d = dx * db;
  auto h = std::make_shared<FinHopf>();
  h->name = name.empty() ? X->name + "#" + B->name : name;
  h->field = F;
  h->dim = d;
  for (int x = 0; x < dx; ++x)
    for (int b = 0; b < db; ++b) h->labels.push_back("(" + X->labels[x] + "|" + B->labels[b] + ")");
  h->unit = Vec::kron(X->unit, B->unit);
  h->mult = LinMap::from_oracle(F, d * d, d, [B, X, xi, db, d](int t) {
    int left = t / d, right = t % d;
    int x = left / db, b = left % db, y = right / db, c = right % db;
    Tensor u = Tensor::of_vec(B->basis(b)).comult_at(0, B->comult);  // [b1,b2]
    u = u.insert_vec(1, X->basis(y)).apply(xi, {0, 1}, 0);           // [b1.y, b2]
    u = u.insert_vec(0, X->basis(x)).apply(X->mult, {0, 1}, 0);      // [x(b1.y), b2]
    u = u.insert_vec(2, B->basis(c)).apply(B->mult, {1, 2}, 1);      // [x(b1.y), b2c]
    return u.to_vec();
  });
  h->comult = LinMap::from_oracle(F, d, d * d, [B, X, db](int t) {
    Tensor u = Tensor::of_vec(X->basis(t / db)).comult_at(0, X->comult);  // [x1,x2]
    u = u.insert_vec(2, B->comult.column(t % db)).split(2, db, db);       // [x1,x2,b1,b2]
    return u.permute({0, 2, 1, 3}).to_vec();                              // [x1,b1,x2,b2]
  });
  h->counit = LinMap::from_oracle(F, d, 1, [B, X, db, F](int t) {
    Vec v(F, 1);
    v.set(0, X->eps(X->basis(t / db)) * B->eps(B->basis(t % db)));
    return v;
  });
  h->antipode = LinMap::from_oracle(F, d, d, [B, X, xi, db](int t) {
    Tensor u = Tensor::of_vec(B->basis(t % db)).comult_at(0, B->comult);
    u = u.apply(B->antipode, {0}, 0).apply(B->antipode, {1}, 1);     // [Sb1, Sb2]
    u = u.insert_vec(1, X->antipode.column(t / db));                 // [Sb1, Sx, Sb2]
    return u.apply(xi, {0, 1}, 0).to_vec();                          // [Sb1.Sx, Sb2]
  });
  for (int x : X->grouplike_flags)
    for (int b : B->grouplike_flags) h->grouplike_flags.push_back(x * db + b);
  return h;
}

HopfAction trivial_action(const HopfPtr& acting, const HopfPtr& acted) {
  const Field& F = acting->field;
  HopfPtr B = acting, X = acted;
  int dx = X->dim;
  LinMap xi = LinMap::from_oracle(F, B->dim * dx, dx, [B, X, dx](int t) {
    return X->basis(t % dx).scaled(B->eps(B->basis(t / dx)));
  });
  return {acting, acted, xi};
}

HopfAction group_action_algebra(const HopfPtr& kb, const HopfPtr& kx,
                                const std::vector<std::vector<int>>& table) {
  const Field& F = kb->field;
  HopfPtr X = kx;
  int dx = kx->dim;
  auto tab = table;
  LinMap xi = LinMap::from_oracle(F, kb->dim * dx, dx,
                                  [X, tab, dx](int t) { return X->basis(tab[t / dx][t % dx]); });
  return {kb, kx, xi};
}

HopfAction adjoint_action(const HopfPtr& h) {
  HopfPtr H = h;
  int d = h->dim;
  LinMap xi = LinMap::from_oracle(h->field, d * d, d, [H, d](int t) {
    return H->adjoint(H->basis(t / d), H->basis(t % d));
  });
  return {h, h, xi};
}

ConjugationData conjugation_action(const SplitEpi& s) {
  ConjugationData out{hker(s.retraction), nullptr, {}};
  out.ker_hopf = out.ker.as_hopf("hker(" + s.retraction.cod->name + "<-" + s.total->name + ")");
  const FinHopf& A = *s.total;
  const FinHopf& B = *s.base;
  Echelon sp = out.ker.span;
  LinMap iota = s.section.map;
  HopfPtr total = s.total;
  int k = sp.rank();
  LinMap xi = LinMap::from_oracle(A.field, B.dim * k, k, [total, sp, iota, k](int t) {
    Vec w = total->adjoint(iota.column(t / k), sp.rows[t % k]);
    Vec c = sp.coords(w);
    if (sp.reconstruct(c) != w)
      throw std::runtime_error("conjugation_action: kernel is not stable under conjugation");
    return c;
  });
  out.action = {s.base, out.ker_hopf, xi};
  return out;
}

SplitEpi action_to_split_epi(const HopfAction& a, bool verify) {
  HopfPtr total = smash(a);
  HopfPtr B = a.acting, X = a.acted;
  const Field& F = B->field;
  int db = B->dim, dx = X->dim;
  LinMap p2 = LinMap::from_oracle(F, dx * db, db, [B, X, db](int t) {
    return B->basis(t % db).scaled(X->eps(X->basis(t / db)));
  });
  LinMap e = LinMap::from_oracle(F, db, dx * db, [B, X, db](int b) {
    return Vec::kron(X->unit, B->basis(b));
  });
  SplitEpi s{total, B, {total, B, p2}, {B, total, e}};
  if (verify) require_pass(check_split_epi(s));
  return s;
}

CrossedProductDecomp phi_iso(const SplitEpi& s, bool verify) {
  CrossedProductDecomp out{conjugation_action(s), nullptr, {}, LinMap::zero(s.total->field, 0, 0)};
  if (verify) require_pass(check_action(out.conj.action));
  out.smash_total = smash(out.conj.action);
  const FinHopf& A = *s.total;
  Echelon sp = out.conj.ker.span;
  LinMap iota = s.section.map;
  HopfPtr total = s.total;
  int db = s.base->dim;
  LinMap phi = LinMap::from_oracle(A.field, sp.rank() * db, A.dim, [total, sp, iota, db](int t) {
    return total->mul(sp.rows[t / db], iota.column(t % db));
  });
  out.phi = {out.smash_total, s.total, phi};
  out.phi_inv = invert(phi);  // throws if not bijective
  if (verify) require_pass(check_morphism(out.phi));
  return out;
}

}  // namespace hx

// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hx/manifest.hpp"

using namespace hx;

static Field Q = Field::rationals();
static int failures = 0;

static double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

static void criterion(int num, const std::string& what, double budget_s,
                      const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  double secs = seconds_since(t0);
  bool pass = ok && err.empty() && secs <= budget_s;
  std::printf("%s  criterion %2d: %s (%.2fs, budget %.0fs)\n", pass ? "PASS" : "FAIL", num,
              what.c_str(), secs, budget_s);
  if (!err.empty()) std::printf("      error: %s\n", err.substr(0, err.find('\n')).c_str());
  if (!pass) ++failures;
}

static CrossedModule a3_in_s3() {
  return lift_group_xmod(Q, group_inclusion_xmod(FiniteGroup::symmetric3(), {0, 1, 2}));
}

static std::vector<HopfPtr> hopf_corpus() {
  std::vector<HopfPtr> out;
  for (const char* g : {"c2", "c3", "c4", "v4", "s3"})
    out.push_back(group_algebra(Q, FiniteGroup::named(g)));
  return out;
}

static SplitEpi sign_split_epi() {
  HopfPtr ks3 = group_algebra(Q, FiniteGroup::symmetric3());
  HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
  std::vector<Vec> dcols;
  for (int i = 0; i < 6; ++i) dcols.push_back(Vec::basis(Q, 2, i < 3 ? 0 : 1));
  std::vector<Vec> icols = {Vec::basis(Q, 6, 0), Vec::basis(Q, 6, 3)};
  return {ks3, kc2,
          {ks3, kc2, LinMap::from_columns(Q, 2, dcols)},
          {kc2, ks3, LinMap::from_columns(Q, 6, icols)}};
}

/// The conjugation action extracted from the split epi of `a` agrees with
/// `a` after transporting along x -> x (x) 1.
static bool action_recovered(const HopfAction& a) {
  SplitEpi s = action_to_split_epi(a, false);
  ConjugationData cd = conjugation_action(s);
  const FinHopf &b = *a.acting, &x = *a.acted;
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < x.dim; ++j) {
      Vec emb = Vec::kron(x.basis(j), b.unit);
      if (!cd.ker.contains(emb)) return false;
      Vec got = cd.ker.span.reconstruct(
          cd.action.xi.apply(Vec::kron(b.basis(i), cd.ker.span.coords(emb))));
      if (got != Vec::kron(a.act(b.basis(i), x.basis(j)), b.unit)) return false;
    }
  return true;
}

static std::vector<CrossedModule> xmod_corpus() {
  HopfPtr ks3 = group_algebra(Q, FiniteGroup::symmetric3());
  return {discrete_xmod(ks3), a3_in_s3(), conjugation_xmod(ks3)};
}

static std::vector<Hopf2Action> twoaction_corpus() {
  HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
  HopfPtr kv4 = group_algebra(Q, FiniteGroup::klein4());
  HopfMorphism id = identity_morphism(kc2);
  std::vector<Vec> m = {kv4->basis(0), kv4->basis(1)}, n = {kv4->basis(0), kv4->basis(2)};
  return {square_to_2action(commutative_square(id, id, id, id), false),
          square_to_2action(unit_square(kc2), false),
          square_to_2action(normal_pair_square(kv4, m, n), false)};
}

static std::vector<CrossedSquare> square_corpus() {
  HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
  HopfPtr kv4 = group_algebra(Q, FiniteGroup::klein4());
  std::vector<Vec> m = {kv4->basis(0), kv4->basis(1)}, n = {kv4->basis(0), kv4->basis(2)};
  return {unit_square(kc2), discrete_square(a3_in_s3()), xmod_square(a3_in_s3()),
          normal_pair_square(kv4, m, n)};
}

int main() {
  criterion(1, "hopf axiom suite on the group algebra corpus", 5, [] {
    for (const HopfPtr& h : hopf_corpus()) {
      auto t0 = std::chrono::steady_clock::now();
      if (!check_hopf(*h).all_pass()) return false;
      if (seconds_since(t0) > 1.0) return false;
    }
    return true;
  });

  criterion(2, "crossed product decomposition of split epimorphisms", 5, [] {
    phi_iso(sign_split_epi(), true);  // throws unless phi is a bijective morphism
    HopfPtr ks3 = group_algebra(Q, FiniteGroup::symmetric3());
    HopfPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
    HopfPtr kc3 = group_algebra(Q, FiniteGroup::cyclic(3));
    for (const HopfAction& a :
         {a3_in_s3().action, adjoint_action(ks3), trivial_action(kc2, kc3)}) {
      phi_iso(action_to_split_epi(a, true), true);
      if (!action_recovered(a)) return false;
    }
    return true;
  });

  criterion(3, "crossed module / cat1 equivalence on the corpus", 30, [] {
    for (const CrossedModule& cm : xmod_corpus()) {
      if (!xmod_roundtrip(cm).all_pass()) return false;
      Cat1 c = xmod_to_cat1(cm, true);
      if (!cat1_roundtrip(c).all_pass()) return false;
      if (!commute_elementwise(hker(c.delta), hker(c.gamma))) return false;
    }
    return true;
  });

  criterion(4, "groupoid identities on every corpus cat1", 60, [] {
    for (const CrossedModule& cm : xmod_corpus()) {
      GroupoidData g = groupoid_data(cm, true);
      if (!groupoid_check(g).all_pass()) return false;
    }
    GroupoidData g = groupoid_data(a3_in_s3(), false);
    return (long)g.composable.dim() ==
           group_cat1_pullback_order(group_inclusion_xmod(FiniteGroup::symmetric3(), {0, 1, 2}));
  });

  criterion(5, "2-action / split epi pair equivalence", 60, [] {
    for (const Hopf2Action& a : twoaction_corpus()) {
      if (!check_2action(a).all_pass()) return false;
      Pt2FromAction pt = pt2_from_2action(a, true);  // outer action axioms asserted
      Pt2Corners pc = pt2_to_2action(pt.epi, false);
      if (!check_2action(pc.act).all_pass()) return false;
      if (!action2_roundtrip(a).all_pass()) return false;
      if (!pt2_roundtrip(pt.epi).all_pass()) return false;
    }
    return true;
  });

  criterion(6, "psi rebracketing isomorphism at dimensions 16 and 162", 120, [] {
    Hopf2Action a16 = square_to_2action(unit_square(group_algebra(Q, FiniteGroup::cyclic(2))), false);
    Hopf2Action a162 = square_to_2action(xmod_square(a3_in_s3()), false);
    PsiIso p16 = psi_iso(a16, true);
    PsiIso p162 = psi_iso(a162, true);
    return p16.fwd.epi.total->dim == 16 && p162.fwd.epi.total->dim == 162;
  });

  criterion(7, "crossed square / cat2 equivalence on the corpus", 300, [] {
    for (const CrossedSquare& sq : square_corpus()) {
      Cat2FromSquare g = square_to_cat2(sq, true);
      if (!cat2_to_double_groupoid(g.cat).all_pass()) return false;
      cat2_to_square(g.cat, true);  // asserts CS1-CS6 and the conjugation coincidences
      if (!square_roundtrip(sq).all_pass()) return false;
      if (!cat2_roundtrip(g.cat).all_pass()) return false;
    }
    return true;
  });

  criterion(8, "group-level oracle differential and lift/extract identity", 30, [] {
    FiniteGroup v4 = FiniteGroup::klein4();
    GroupCrossedSquare gsq = group_normal_pair_square(v4, {0, 1}, {0, 2});
    if (check_group_crossed_square(gsq).all_pass() !=
        check_crossed_square(lift_group_square(Q, gsq)).all_pass())
      return false;
    GroupCrossedSquare bad = gsq;
    bad.act_pm.table[1][1] = 0;  // break the P-action on M
    if (check_group_crossed_square(bad).all_pass() ||
        check_crossed_square(lift_group_square(Q, bad)).all_pass())
      return false;
    GroupCrossedSquare back = extract_group_square(lift_group_square(Q, gsq));
    if (back.h != gsq.h || back.lambda != gsq.lambda || back.act_pl.table != gsq.act_pl.table)
      return false;

    GroupXMod gm = group_inclusion_xmod(FiniteGroup::symmetric3(), {0, 1, 2});
    if (check_group_xmod(gm).all_pass() !=
        check_crossed_module(lift_group_xmod(Q, gm)).all_pass())
      return false;
    GroupXMod badm = gm;
    badm.d[1] = 0;
    if (check_group_xmod(badm).all_pass() ||
        check_crossed_module(lift_group_xmod(Q, badm)).all_pass())
      return false;
    GroupXMod backm = extract_group_xmod(lift_group_xmod(Q, gm));
    return backm.d == gm.d && backm.act.table == gm.act.table;
  });

  criterion(9, "swap symmetry of every corpus square", 30, [] {
    for (const CrossedSquare& sq : square_corpus())
      if (!check_crossed_square(swap_square(sq), true, false).all_pass()) return false;
    return true;
  });

  criterion(10, "group-like structure of every corpus group algebra", 5, [] {
    for (const HopfPtr& h : hopf_corpus()) {
      if (primitives(*h).rank() != 0) return false;
      if (!grouplike_span_check(*h).all_pass()) return false;
    }
    return true;
  });

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}

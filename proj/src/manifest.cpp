#include "hx/manifest.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace hx {

const char* kSchemaVersion = "1";

namespace fs = std::filesystem;

Manifest load_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
    throw std::runtime_error(path.string() + ": unsupported schema version");
  if (!j.contains("kind") || !j.contains("payload"))
    throw std::runtime_error(path.string() + ": missing kind or payload");
  return {j["kind"], j["payload"], path.parent_path()};
}

void save_manifest(const std::string& kind, const json& payload, const fs::path& path) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["payload"] = payload;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

json map_to_json(const LinMap& f) {
  json e = json::array();
  for (auto& [row, col, val] : f.triples()) e.push_back({col, row, val.str()});
  return {{"dom", f.dom()}, {"cod", f.cod()}, {"entries", e}};
}

LinMap map_from_json(const json& j, const Field& f) {
  int dom = j.at("dom"), cod = j.at("cod");
  std::vector<Vec> cols(dom, Vec(f, cod));
  for (auto& t : j.at("entries")) {
    int col = t.at(0), row = t.at(1);
    if (col < 0 || col >= dom || row < 0 || row >= cod)
      throw std::runtime_error("map entry out of range");
    cols[col].set(row, Scalar::parse(t.at(2).get<std::string>(), f));
  }
  return LinMap::from_columns(f, cod, std::move(cols));
}

json vec_to_json(const Vec& v) {
  json e = json::array();
  for (auto& [i, c] : v.entries()) e.push_back({i, c.str()});
  return e;
}

Vec vec_from_json(const json& j, const Field& f, int dim) {
  Vec v(f, dim);
  for (auto& t : j) v.set(t.at(0), Scalar::parse(t.at(1).get<std::string>(), f));
  return v;
}

json hopf_to_json(const FinHopf& h) {
  return {{"name", h.name},
          {"field", h.field.str()},
          {"dim", h.dim},
          {"labels", h.labels},
          {"mult", map_to_json(h.mult)},
          {"unit", vec_to_json(h.unit)},
          {"comult", map_to_json(h.comult)},
          {"counit", map_to_json(h.counit)},
          {"antipode", map_to_json(h.antipode)},
          {"grouplikes", h.grouplike_flags}};
}

HopfPtr hopf_from_json(const json& j, const fs::path& dir) {
  if (j.is_string()) {
    Manifest m = load_manifest(dir / j.get<std::string>());
    if (m.kind != "hopf") throw std::runtime_error("referenced file is not a hopf manifest");
    return hopf_from_json(m.payload, m.dir);
  }
  auto h = std::make_shared<FinHopf>();
  h->name = j.at("name");
  h->field = Field::parse(j.at("field").get<std::string>());
  h->dim = j.at("dim");
  h->labels = j.at("labels").get<std::vector<std::string>>();
  h->mult = map_from_json(j.at("mult"), h->field);
  h->unit = vec_from_json(j.at("unit"), h->field, h->dim);
  h->comult = map_from_json(j.at("comult"), h->field);
  h->counit = map_from_json(j.at("counit"), h->field);
  h->antipode = map_from_json(j.at("antipode"), h->field);
  h->grouplike_flags = j.at("grouplikes").get<std::vector<int>>();
  if (h->mult.dom() != h->dim * h->dim || h->mult.cod() != h->dim ||
      h->comult.dom() != h->dim || h->comult.cod() != h->dim * h->dim ||
      h->counit.dom() != h->dim || h->counit.cod() != 1 || h->antipode.dom() != h->dim ||
      h->antipode.cod() != h->dim || h->unit.dim() != h->dim)
    throw std::runtime_error("hopf payload has inconsistent dimensions");
  return h;
}

json group_to_json(const FiniteGroup& g) {
  return {{"name", g.name},
          {"order", g.order},
          {"labels", g.labels},
          {"table", g.table},
          {"identity", g.identity}};
}

FiniteGroup group_from_json(const json& j, const fs::path& dir) {
  if (j.is_string()) {
    Manifest m = load_manifest(dir / j.get<std::string>());
    if (m.kind != "group") throw std::runtime_error("referenced file is not a group manifest");
    return group_from_json(m.payload, m.dir);
  }
  FiniteGroup g;
  g.name = j.at("name");
  g.order = j.at("order");
  g.labels = j.at("labels").get<std::vector<std::string>>();
  g.table = j.at("table").get<std::vector<std::vector<int>>>();
  g.identity = j.at("identity");
  return g;
}

json morphism_to_json(const HopfMorphism& f) {
  return {{"dom", hopf_to_json(*f.dom)}, {"cod", hopf_to_json(*f.cod)}, {"map", map_to_json(f.map)}};
}

HopfMorphism morphism_from_json(const json& j, const fs::path& dir) {
  HopfPtr dom = hopf_from_json(j.at("dom"), dir), cod = hopf_from_json(j.at("cod"), dir);
  return {dom, cod, map_from_json(j.at("map"), dom->field)};
}

json action_to_json(const HopfAction& a) {
  return {{"acting", hopf_to_json(*a.acting)},
          {"acted", hopf_to_json(*a.acted)},
          {"xi", map_to_json(a.xi)}};
}

HopfAction action_from_json(const json& j, const fs::path& dir) {
  HopfPtr acting = hopf_from_json(j.at("acting"), dir), acted = hopf_from_json(j.at("acted"), dir);
  return {acting, acted, map_from_json(j.at("xi"), acting->field)};
}

json xmod_to_json(const CrossedModule& cm) {
  return {{"base", hopf_to_json(*cm.base)},
          {"top", hopf_to_json(*cm.top)},
          {"d", map_to_json(cm.d.map)},
          {"xi", map_to_json(cm.action.xi)}};
}

CrossedModule xmod_from_json(const json& j, const fs::path& dir) {
  HopfPtr base = hopf_from_json(j.at("base"), dir), top = hopf_from_json(j.at("top"), dir);
  const Field& f = base->field;
  return {base, top, {top, base, map_from_json(j.at("d"), f)},
          {base, top, map_from_json(j.at("xi"), f)}};
}

json cat1_to_json(const Cat1& c) {
  return {{"total", hopf_to_json(*c.total)},
          {"base", hopf_to_json(*c.base)},
          {"delta", map_to_json(c.delta.map)},
          {"gamma", map_to_json(c.gamma.map)},
          {"iota", map_to_json(c.iota.map)}};
}

Cat1 cat1_from_json(const json& j, const fs::path& dir) {
  HopfPtr total = hopf_from_json(j.at("total"), dir), base = hopf_from_json(j.at("base"), dir);
  const Field& f = total->field;
  return {total, base,
          {total, base, map_from_json(j.at("delta"), f)},
          {total, base, map_from_json(j.at("gamma"), f)},
          {base, total, map_from_json(j.at("iota"), f)}};
}

json square_to_json(const CrossedSquare& sq) {
  return {{"l", hopf_to_json(*sq.L)},      {"m", hopf_to_json(*sq.M)},
          {"n", hopf_to_json(*sq.N)},      {"p", hopf_to_json(*sq.P)},
          {"lambda", map_to_json(sq.lambda.map)},
          {"lambdap", map_to_json(sq.lambdap.map)},
          {"mu", map_to_json(sq.mu.map)},  {"nu", map_to_json(sq.nu.map)},
          {"act_pl", map_to_json(sq.actPL.xi)},
          {"act_pm", map_to_json(sq.actPM.xi)},
          {"act_pn", map_to_json(sq.actPN.xi)},
          {"h", map_to_json(sq.h)}};
}

CrossedSquare square_from_json(const json& j, const fs::path& dir) {
  HopfPtr l = hopf_from_json(j.at("l"), dir), m = hopf_from_json(j.at("m"), dir);
  HopfPtr n = hopf_from_json(j.at("n"), dir), p = hopf_from_json(j.at("p"), dir);
  const Field& f = l->field;
  return {l,
          m,
          n,
          p,
          {l, m, map_from_json(j.at("lambda"), f)},
          {l, n, map_from_json(j.at("lambdap"), f)},
          {m, p, map_from_json(j.at("mu"), f)},
          {n, p, map_from_json(j.at("nu"), f)},
          {p, l, map_from_json(j.at("act_pl"), f)},
          {p, m, map_from_json(j.at("act_pm"), f)},
          {p, n, map_from_json(j.at("act_pn"), f)},
          map_from_json(j.at("h"), f)};
}

json twoaction_to_json(const Hopf2Action& a) {
  return {{"l", hopf_to_json(*a.L)},      {"m", hopf_to_json(*a.M)},
          {"n", hopf_to_json(*a.N)},      {"p", hopf_to_json(*a.P)},
          {"act_pl", map_to_json(a.actPL.xi)},
          {"act_pm", map_to_json(a.actPM.xi)},
          {"act_pn", map_to_json(a.actPN.xi)},
          {"act_ml", map_to_json(a.actML.xi)},
          {"act_nl", map_to_json(a.actNL.xi)},
          {"h", map_to_json(a.h)}};
}

Hopf2Action twoaction_from_json(const json& j, const fs::path& dir) {
  HopfPtr l = hopf_from_json(j.at("l"), dir), m = hopf_from_json(j.at("m"), dir);
  HopfPtr n = hopf_from_json(j.at("n"), dir), p = hopf_from_json(j.at("p"), dir);
  const Field& f = l->field;
  return {l,
          m,
          n,
          p,
          {p, l, map_from_json(j.at("act_pl"), f)},
          {p, m, map_from_json(j.at("act_pm"), f)},
          {p, n, map_from_json(j.at("act_pn"), f)},
          {m, l, map_from_json(j.at("act_ml"), f)},
          {n, l, map_from_json(j.at("act_nl"), f)},
          map_from_json(j.at("h"), f)};
}

json pt2_to_json(const SplitEpi2& s) {
  return {{"total", hopf_to_json(*s.total)},
          {"comp_n", hopf_to_json(*s.compN)},
          {"comp_m", hopf_to_json(*s.compM)},
          {"i_n", map_to_json(s.iN.map)},
          {"i_m", map_to_json(s.iM.map)},
          {"s_n", map_to_json(s.sN.map)},
          {"s_m", map_to_json(s.sM.map)}};
}

SplitEpi2 pt2_from_json(const json& j, const fs::path& dir) {
  HopfPtr total = hopf_from_json(j.at("total"), dir);
  HopfPtr cn = hopf_from_json(j.at("comp_n"), dir), cm = hopf_from_json(j.at("comp_m"), dir);
  const Field& f = total->field;
  return {total, cn, cm,
          {cn, total, map_from_json(j.at("i_n"), f)},
          {cm, total, map_from_json(j.at("i_m"), f)},
          {total, cn, map_from_json(j.at("s_n"), f)},
          {total, cm, map_from_json(j.at("s_m"), f)}};
}

json cat2_to_json(const Cat2& c) {
  json j = pt2_to_json(c.base);
  j["t_n"] = map_to_json(c.tN.map);
  j["t_m"] = map_to_json(c.tM.map);
  return j;
}

Cat2 cat2_from_json(const json& j, const fs::path& dir) {
  SplitEpi2 base = pt2_from_json(j, dir);
  const Field& f = base.total->field;
  return {base,
          {base.total, base.compN, map_from_json(j.at("t_n"), f)},
          {base.total, base.compM, map_from_json(j.at("t_m"), f)}};
}

json group_square_to_json(const GroupCrossedSquare& g) {
  return {{"l", group_to_json(g.l)},   {"m", group_to_json(g.m)},
          {"n", group_to_json(g.n)},   {"p", group_to_json(g.p)},
          {"lambda", g.lambda},        {"lambdap", g.lambdap},
          {"mu", g.mu},                {"nu", g.nu},
          {"act_pl", g.act_pl.table},  {"act_pm", g.act_pm.table},
          {"act_pn", g.act_pn.table},  {"h", g.h}};
}

GroupCrossedSquare group_square_from_json(const json& j) {
  GroupCrossedSquare g;
  g.l = group_from_json(j.at("l"), {});
  g.m = group_from_json(j.at("m"), {});
  g.n = group_from_json(j.at("n"), {});
  g.p = group_from_json(j.at("p"), {});
  g.lambda = j.at("lambda").get<std::vector<int>>();
  g.lambdap = j.at("lambdap").get<std::vector<int>>();
  g.mu = j.at("mu").get<std::vector<int>>();
  g.nu = j.at("nu").get<std::vector<int>>();
  g.act_pl.table = j.at("act_pl").get<std::vector<std::vector<int>>>();
  g.act_pm.table = j.at("act_pm").get<std::vector<std::vector<int>>>();
  g.act_pn.table = j.at("act_pn").get<std::vector<std::vector<int>>>();
  g.h = j.at("h").get<std::vector<std::vector<int>>>();
  return g;
}

json report_to_json(const Report& r) {
  json entries = json::array();
  for (auto& e : r.entries)
    entries.push_back({{"axiom", e.axiom}, {"pass", e.pass}, {"detail", e.detail}});
  return {{"subject", r.subject},
          {"mode", r.mode},
          {"pass", r.all_pass()},
          {"entries", entries},
          {"notes", r.notes}};
}

namespace {

int emit_report(const Report& r, const CliOptions& opt, std::ostream& out) {
  if (opt.report == "json")
    out << report_to_json(r).dump(2) << "\n";
  else
    out << r.text();
  return r.all_pass() ? 0 : 1;
}

int guarded(const CliOptions& opt, std::ostream& out, const std::function<int()>& body) {
  try {
    return body();
  } catch (const AxiomFailure& e) {
    emit_report(e.report, opt, out);
    return 1;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
}

Manifest load_as(const std::string& kind, const std::string& path) {
  Manifest m = load_manifest(path);
  if (m.kind != kind)
    throw std::runtime_error(path + ": expected kind " + kind + ", found " + m.kind);
  return m;
}

/// Named example groups and crossed modules used by gen.
FiniteGroup named_group(const std::string& s) { return FiniteGroup::named(s); }

HopfPtr named_algebra(const Field& f, const std::string& s) {
  if (s.rfind("k_", 0) != 0) throw std::runtime_error("algebra name must look like k_<group>");
  return group_algebra(f, named_group(s.substr(2)));
}

CrossedModule named_xmod(const Field& f, const std::string& s) {
  if (s == "conj_a3_s3")
    return lift_group_xmod(f, group_inclusion_xmod(FiniteGroup::symmetric3(), {0, 1, 2}));
  if (s.rfind("adj_", 0) == 0) return conjugation_xmod(named_algebra(f, "k_" + s.substr(4)));
  if (s.rfind("disc_", 0) == 0) return discrete_xmod(named_algebra(f, "k_" + s.substr(5)));
  throw std::runtime_error("unknown crossed module name: " + s);
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

int cmd_check(const std::string& kind, const std::string& path, const CliOptions& opt,
              std::ostream& out) {
  return guarded(opt, out, [&]() {
    Manifest m = load_as(kind, path);
    Report r;
    if (kind == "hopf") {
      r = check_hopf(*hopf_from_json(m.payload, m.dir));
    } else if (kind == "group") {
      FiniteGroup g = group_from_json(m.payload, m.dir);
      r.subject = "group " + g.name;
      try {
        g.validate();
        r.add("group-axioms", true);
      } catch (const std::exception& e) {
        r.add("group-axioms", false, e.what());
      }
    } else if (kind == "morphism") {
      r = check_morphism(morphism_from_json(m.payload, m.dir));
    } else if (kind == "action") {
      r = check_action(action_from_json(m.payload, m.dir));
    } else if (kind == "xmod") {
      r = check_crossed_module(xmod_from_json(m.payload, m.dir));
    } else if (kind == "cat1") {
      r = check_cat1(cat1_from_json(m.payload, m.dir));
    } else if (kind == "square") {
      r = check_crossed_square(square_from_json(m.payload, m.dir));
    } else if (kind == "2action") {
      r = check_2action(twoaction_from_json(m.payload, m.dir));
    } else if (kind == "pt2") {
      r = check_split_epi2(pt2_from_json(m.payload, m.dir));
    } else if (kind == "cat2") {
      r = check_cat2(cat2_from_json(m.payload, m.dir));
    } else if (kind == "group_square") {
      r = check_group_crossed_square(group_square_from_json(m.payload));
    } else {
      throw std::runtime_error("unknown kind: " + kind);
    }
    return emit_report(r, opt, out);
  });
}

int cmd_convert(const std::string& from, const std::string& to, const std::string& path,
                const std::string& out_path, const CliOptions& opt, std::ostream& out) {
  return guarded(opt, out, [&]() {
    Manifest m = load_as(from, path);
    std::string key = from + "->" + to;
    json payload;
    if (key == "xmod->cat1") {
      payload = cat1_to_json(xmod_to_cat1(xmod_from_json(m.payload, m.dir), true));
    } else if (key == "cat1->xmod") {
      payload = xmod_to_json(cat1_to_xmod(cat1_from_json(m.payload, m.dir), true));
    } else if (key == "square->cat2") {
      payload = cat2_to_json(square_to_cat2(square_from_json(m.payload, m.dir), true).cat);
    } else if (key == "cat2->square") {
      payload = square_to_json(cat2_to_square(cat2_from_json(m.payload, m.dir), true).sq);
    } else if (key == "2action->pt2") {
      payload = pt2_to_json(pt2_from_2action(twoaction_from_json(m.payload, m.dir), true).epi);
    } else if (key == "pt2->2action") {
      payload = twoaction_to_json(pt2_to_2action(pt2_from_json(m.payload, m.dir), true).act);
    } else if (key == "group_square->square") {
      payload = square_to_json(
          lift_group_square(Field::parse(opt.field), group_square_from_json(m.payload)));
    } else if (key == "square->group_square") {
      payload = group_square_to_json(extract_group_square(square_from_json(m.payload, m.dir)));
    } else {
      throw std::runtime_error("unsupported conversion: " + key);
    }
    save_manifest(to, payload, out_path);
    out << "wrote " << out_path << "\n";
    return 0;
  });
}

int cmd_roundtrip(const std::string& kind, const std::string& path, const CliOptions& opt,
                  std::ostream& out) {
  return guarded(opt, out, [&]() {
    Manifest m = load_as(kind, path);
    Report r;
    if (kind == "xmod")
      r = xmod_roundtrip(xmod_from_json(m.payload, m.dir));
    else if (kind == "2action")
      r = action2_roundtrip(twoaction_from_json(m.payload, m.dir));
    else if (kind == "square")
      r = square_roundtrip(square_from_json(m.payload, m.dir));
    else if (kind == "cat1")
      r = cat1_roundtrip(cat1_from_json(m.payload, m.dir));
    else if (kind == "cat2")
      r = cat2_roundtrip(cat2_from_json(m.payload, m.dir));
    else if (kind == "pt2")
      r = pt2_roundtrip(pt2_from_json(m.payload, m.dir));
    else
      throw std::runtime_error("no round trip for kind: " + kind);
    return emit_report(r, opt, out);
  });
}

int cmd_gen(const std::string& name, const std::map<std::string, std::string>& params,
            const std::string& out_path, const CliOptions& opt, std::ostream& out) {
  return guarded(opt, out, [&]() {
    Field f = Field::parse(opt.field);
    auto param = [&](const std::string& key, const std::string& dflt) {
      auto it = params.find(key);
      return it == params.end() ? dflt : it->second;
    };
    std::string kind;
    json payload;
    if (name == "normal-pair") {
      FiniteGroup g = named_group(param("group", "v4"));
      GroupCrossedSquare gsq = group_normal_pair_square(g, g.subgroup(parse_ints(param("m", "1"))),
                                                        g.subgroup(parse_ints(param("n", "2"))));
      require_pass(check_group_crossed_square(gsq));
      kind = "square";
      payload = square_to_json(lift_group_square(f, gsq));
    } else if (name == "unit") {
      kind = "square";
      payload = square_to_json(unit_square(named_algebra(f, param("algebra", "k_c2"))));
    } else if (name == "discrete") {
      kind = "square";
      payload = square_to_json(discrete_square(named_xmod(f, param("xmod", "conj_a3_s3"))));
    } else if (name == "xmod-square") {
      kind = "square";
      payload = square_to_json(xmod_square(named_xmod(f, param("xmod", "conj_a3_s3"))));
    } else if (name == "hopf") {
      kind = "hopf";
      payload = hopf_to_json(*named_algebra(f, param("algebra", "k_c2")));
    } else if (name == "xmod") {
      kind = "xmod";
      payload = xmod_to_json(named_xmod(f, param("xmod", "conj_a3_s3")));
    } else {
      throw std::runtime_error("unknown generator: " + name);
    }
    save_manifest(kind, payload, out_path);
    out << "wrote " << out_path << "\n";
    return 0;
  });
}

}  // namespace hx

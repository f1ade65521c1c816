#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hx/manifest.hpp"

using namespace hx;
namespace fs = std::filesystem;

static Field Q = Field::rationals();
static CliOptions OPT;

static fs::path tmpdir() {
  fs::path d = fs::temp_directory_path() / "hx_cli_tests";
  fs::create_directories(d);
  return d;
}

static std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_CASE("gen + check of the hopf corpus") {
  fs::path d = tmpdir();
  for (std::string g : {"c2", "c3", "c4", "v4", "s3"}) {
    std::ostringstream out;
    fs::path p = d / ("k_" + g + ".json");
    CHECK(cmd_gen("hopf", {{"algebra", "k_" + g}}, p.string(), OPT, out) == 0);
    CHECK(cmd_check("hopf", p.string(), OPT, out) == 0);
  }
}

TEST_CASE("generated manifests are byte identical run to run") {
  fs::path d = tmpdir();
  std::ostringstream out;
  CHECK(cmd_gen("normal-pair", {{"group", "v4"}}, (d / "np1.json").string(), OPT, out) == 0);
  CHECK(cmd_gen("normal-pair", {{"group", "v4"}}, (d / "np2.json").string(), OPT, out) == 0);
  CHECK(slurp(d / "np1.json") == slurp(d / "np2.json"));
  CHECK(cmd_check("square", (d / "np1.json").string(), OPT, out) == 0);
}

TEST_CASE("an axiom failure exits 1 and names the axiom with a counterexample") {
  fs::path d = tmpdir();
  CrossedModule cm = lift_group_xmod(Q, group_inclusion_xmod(FiniteGroup::symmetric3(), {0, 1, 2}));
  cm.action = trivial_action(cm.base, cm.top);
  save_manifest("xmod", xmod_to_json(cm), d / "broken.json");
  std::ostringstream out;
  CHECK(cmd_check("xmod", (d / "broken.json").string(), OPT, out) == 1);
  CHECK(out.str().find("equivariance") != std::string::npos);
  CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("parse and reference errors exit 2") {
  fs::path d = tmpdir();
  std::ofstream(d / "garbage.json") << "{ not json";
  std::ostringstream out;
  CHECK(cmd_check("hopf", (d / "garbage.json").string(), OPT, out) == 2);
  CHECK(cmd_check("hopf", (d / "no_such_file.json").string(), OPT, out) == 2);
  std::ostringstream out2;
  CHECK(cmd_gen("hopf", {}, (d / "h.json").string(), OPT, out2) == 0);
  CHECK(cmd_check("square", (d / "h.json").string(), OPT, out2) == 2);  // kind mismatch
}

TEST_CASE("convert xmod to cat1 gives the dimension 18 total algebra") {
  fs::path d = tmpdir();
  std::ostringstream out;
  CHECK(cmd_gen("xmod", {{"xmod", "conj_a3_s3"}}, (d / "cm.json").string(), OPT, out) == 0);
  CHECK(cmd_convert("xmod", "cat1", (d / "cm.json").string(), (d / "c1.json").string(), OPT, out) == 0);
  Manifest m = load_manifest(d / "c1.json");
  CHECK(m.kind == "cat1");
  CHECK(m.payload.at("total").at("dim") == 18);
  CHECK(cmd_check("cat1", (d / "c1.json").string(), OPT, out) == 0);
  CHECK(cmd_convert("cat1", "xmod", (d / "c1.json").string(), (d / "cm2.json").string(), OPT, out) == 0);
  CHECK(cmd_check("xmod", (d / "cm2.json").string(), OPT, out) == 0);
}

TEST_CASE("convert square to cat2 and 2action to pt2 on the unit square") {
  fs::path d = tmpdir();
  std::ostringstream out;
  CHECK(cmd_gen("unit", {{"algebra", "k_c2"}}, (d / "sq.json").string(), OPT, out) == 0);
  CHECK(cmd_convert("square", "cat2", (d / "sq.json").string(), (d / "c2.json").string(), OPT, out) == 0);
  Manifest m = load_manifest(d / "c2.json");
  CHECK(m.payload.at("total").at("dim") == 16);
  CHECK(cmd_check("cat2", (d / "c2.json").string(), OPT, out) == 0);
  CHECK(cmd_convert("cat2", "square", (d / "c2.json").string(), (d / "sq2.json").string(), OPT, out) == 0);
  CHECK(cmd_check("square", (d / "sq2.json").string(), OPT, out) == 0);

  save_manifest("2action",
                twoaction_to_json(square_to_2action(
                    square_from_json(load_manifest(d / "sq.json").payload, d), false)),
                d / "a2.json");
  CHECK(cmd_convert("2action", "pt2", (d / "a2.json").string(), (d / "p2.json").string(), OPT, out) == 0);
  CHECK(cmd_check("pt2", (d / "p2.json").string(), OPT, out) == 0);
  CHECK(cmd_convert("pt2", "2action", (d / "p2.json").string(), (d / "a2b.json").string(), OPT, out) == 0);
  CHECK(cmd_check("2action", (d / "a2b.json").string(), OPT, out) == 0);
}

TEST_CASE("group square conversions both ways") {
  fs::path d = tmpdir();
  GroupCrossedSquare gsq = group_normal_pair_square(FiniteGroup::klein4(), {0, 1}, {0, 2});
  save_manifest("group_square", group_square_to_json(gsq), d / "gsq.json");
  std::ostringstream out;
  CHECK(cmd_check("group_square", (d / "gsq.json").string(), OPT, out) == 0);
  CHECK(cmd_convert("group_square", "square", (d / "gsq.json").string(), (d / "gsq_h.json").string(),
                    OPT, out) == 0);
  CHECK(cmd_check("square", (d / "gsq_h.json").string(), OPT, out) == 0);
  CHECK(cmd_convert("square", "group_square", (d / "gsq_h.json").string(),
                    (d / "gsq_back.json").string(), OPT, out) == 0);
  CHECK(load_manifest(d / "gsq_back.json").payload.at("h") == json(gsq.h));
}

TEST_CASE("round trips through the command surface") {
  fs::path d = tmpdir();
  std::ostringstream out;
  CHECK(cmd_gen("xmod", {}, (d / "cm.json").string(), OPT, out) == 0);
  CHECK(cmd_roundtrip("xmod", (d / "cm.json").string(), OPT, out) == 0);
  CHECK(cmd_gen("unit", {{"algebra", "k_c2"}}, (d / "sq.json").string(), OPT, out) == 0);
  CHECK(cmd_roundtrip("square", (d / "sq.json").string(), OPT, out) == 0);
}

TEST_CASE("json reports agree with the text verdict") {
  fs::path d = tmpdir();
  std::ostringstream text, js;
  CliOptions jopt;
  jopt.report = "json";
  CHECK(cmd_gen("hopf", {{"algebra", "k_s3"}}, (d / "s3.json").string(), OPT, text) == 0);
  CHECK(cmd_check("hopf", (d / "s3.json").string(), jopt, js) == 0);
  json j = json::parse(js.str());
  CHECK(j.at("pass") == true);
  CHECK(j.at("mode") == "full");
  CHECK(j.at("entries").size() > 5);
}

TEST_CASE("manifests survive a save/load cycle exactly") {
  fs::path d = tmpdir();
  CrossedSquare sq = unit_square(group_algebra(Q, FiniteGroup::symmetric3()));
  save_manifest("square", square_to_json(sq), d / "u.json");
  Manifest m = load_manifest(d / "u.json");
  CrossedSquare back = square_from_json(m.payload, m.dir);
  CHECK(back.h.equals(sq.h));
  CHECK(back.lambda.map.equals(sq.lambda.map));
  CHECK(back.actPL.xi.equals(sq.actPL.xi));
  CHECK(back.P->mult.equals(sq.P->mult));
  save_manifest("square", square_to_json(back), d / "u2.json");
  CHECK(slurp(d / "u.json") == slurp(d / "u2.json"));
}

#include <iostream>

#include "CLI11.hpp"
#include "hx/manifest.hpp"

using namespace hx;

int main(int argc, char** argv) {
  CLI::App app{"exact checker for Hopf-algebraic crossed structures"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string paranoid = "auto";
  long budget = config().budget;
  unsigned long long seed = config().sample_seed;
  app.add_option("--field", opt.field, "ground field: q or fp:<p>");
  app.add_option("--paranoid", paranoid, "on|off|auto (auto: full below the dimension ceiling)");
  app.add_option("--sample-seed", seed, "seed for sampled checking");
  app.add_option("--report", opt.report, "text|json");
  app.add_option("--budget", budget, "max materialized entries in dense kernels");

  std::string kind, path, out_path, from, to, gen_name;
  std::map<std::string, std::string> gen_params;

  CLI::App* check = app.add_subcommand("check", "verify every axiom of a manifest");
  check->add_option("kind", kind)->required();
  check->add_option("path", path)->required();

  CLI::App* convert = app.add_subcommand("convert", "apply an equivalence functor and write the result");
  convert->add_option("from", from)->required();
  convert->add_option("to", to)->required();
  convert->add_option("path", path)->required();
  convert->add_option("out", out_path)->required();

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "convert forward and back, compare exactly");
  roundtrip->add_option("kind", kind)->required();
  roundtrip->add_option("path", path)->required();

  CLI::App* gen = app.add_subcommand("gen", "write a corpus manifest");
  gen->add_option("name", gen_name, "normal-pair|unit|discrete|xmod-square|hopf|xmod")->required();
  gen->add_option("out", out_path)->required();
  std::string p_group, p_algebra, p_xmod, p_m, p_n;
  gen->add_option("--group", p_group);
  gen->add_option("--algebra", p_algebra);
  gen->add_option("--xmod", p_xmod);
  gen->add_option("--m", p_m, "generators of the first normal subgroup, comma separated");
  gen->add_option("--n", p_n, "generators of the second normal subgroup, comma separated");

  CLI11_PARSE(app, argc, argv);

  if (paranoid == "on")
    config().paranoid = Config::Paranoid::On;
  else if (paranoid == "off")
    config().paranoid = Config::Paranoid::Off;
  else if (paranoid == "auto")
    config().paranoid = Config::Paranoid::Auto;
  else {
    std::cerr << "error: bad --paranoid value\n";
    return 2;
  }
  config().budget = budget;
  config().sample_seed = seed;

  if (check->parsed()) return cmd_check(kind, path, opt, std::cout);
  if (convert->parsed()) return cmd_convert(from, to, path, out_path, opt, std::cout);
  if (roundtrip->parsed()) return cmd_roundtrip(kind, path, opt, std::cout);
  if (gen->parsed()) {
    if (!p_group.empty()) gen_params["group"] = p_group;
    if (!p_algebra.empty()) gen_params["algebra"] = p_algebra;
    if (!p_xmod.empty()) gen_params["xmod"] = p_xmod;
    if (!p_m.empty()) gen_params["m"] = p_m;
    if (!p_n.empty()) gen_params["n"] = p_n;
    return cmd_gen(gen_name, gen_params, out_path, opt, std::cout);
  }
  return 2;
}

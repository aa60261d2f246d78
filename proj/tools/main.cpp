#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace trigonal::cli;

  CLI::App app{"Trigonal construction toolkit: verification suites, exports and classification"};
  app.require_subcommand(1);

  std::string scope = "all";
  std::string out_path;
  VerifyOptions opts;
  auto* verify = app.add_subcommand("verify", "run verification suites and write a JSON report");
  verify->add_option("scope", scope, "all, lattice, symplectic, monodromy or correspondence")
      ->check(CLI::IsMember({"all", "lattice", "symplectic", "monodromy", "correspondence"}));
  verify->add_option("--out", out_path, "report path (default: standard output)");
  verify->add_flag("--optional", opts.optional, "also certify the order of the transvection group");
  verify->add_option("--jobs", opts.jobs, "suites to run concurrently")->check(CLI::PositiveNumber);
  verify->add_option("--seed", opts.seed, "seed for randomized checks");

  std::string what;
  std::string format = "json";
  std::string export_out;
  auto* exp = app.add_subcommand("export", "write a table as JSON or DOT");
  exp->add_option("what", what, "bijection, orbits, gram or classes")->required();
  exp->add_option("--format", format, "json or dot");
  exp->add_option("--out", export_out, "output path (default: standard output)");

  std::string tuple;
  int position = 0;
  bool cross_check = false;
  auto* cls = app.add_subcommand("classify", "classify the confluence at a position of a cover type");
  cls->add_option("tuple", tuple, "12 characters over 0 = (12), 1 = (23), 2 = (13)")->required();
  cls->add_option("position", position, "0..11")->required();
  cls->add_flag("--cross-check", cross_check, "also classify through the stored bijection");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*verify) {
    opts.scope = parse_scope(scope);
    return cmd_verify(opts, out_path, std::cout, std::cerr);
  }
  if (*exp) return cmd_export(what, format, export_out, std::cout, std::cerr);
  return cmd_classify(tuple, position, cross_check, std::cout, std::cerr);
}

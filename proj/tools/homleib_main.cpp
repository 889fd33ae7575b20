// Command-line front end: load JSON algebra documents, run identity checks and
// exact solvers, verify the bundled reference tables, build twists and tensor
// squares, scan prime fields. Exit codes: 0 ok, 1 check failed, 2 usage/parse.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "homleib/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw homleib::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for twisted Leibniz-type algebras given by structure constants"};
  app.require_subcommand(1);

  std::string file;
  std::string identity = "all";
  auto* check = app.add_subcommand("check", "run identity checks on a document");
  check->add_option("file", file, "JSON algebra document ('-' for stdin)")->required();
  check->add_option("--identity", identity,
                    "left|right|symmetric|hom-lie|multiplicative|all (default all)");

  homleib::SolveOptions solve_opt;
  std::string solve_file;
  std::string parity_str = "both";
  auto* solve = app.add_subcommand("solve", "solve an operator space as an exact nullspace");
  solve->add_option("file", solve_file, "JSON algebra document ('-' for stdin)")->required();
  solve->add_option("--kind", solve_opt.kind, "der|centroid|zder|gen")->required();
  solve->add_option("--r", solve_opt.r, "twist power (default 0)");
  std::string lam, mu, gam;
  solve->add_option("--lambda", lam, "gen weight, exact scalar string");
  solve->add_option("--mu", mu, "gen weight");
  solve->add_option("--gamma", gam, "gen weight");
  solve->add_option("--parity", parity_str, "0|1|both (graded documents, default both)");

  homleib::TablesOptions tables_opt;
  std::string tables_id;
  bool tables_all = false;
  auto* tables = app.add_subcommand("tables", "verify the bundled reference tables");
  tables->add_option("--id", tables_id, "one entry, e.g. L_2^1");
  tables->add_flag("--all", tables_all, "every entry (the default when --id is absent)");
  tables->add_option("--rmax", tables_opt.rmax, "largest twist power (default 3)");
  tables->add_option("--param", tables_opt.params, "parameter override name=value (repeatable)");
  tables->add_flag("--json", tables_opt.json, "machine-readable report");

  std::string export_id, export_variant = "classification";
  std::vector<std::string> export_params;
  auto* exp = app.add_subcommand("export", "emit a catalog entry as a JSON document");
  exp->add_option("--id", export_id, "entry, e.g. L_2^1")->required();
  exp->add_option("--variant", export_variant, "classification|tables (default classification)");
  exp->add_option("--param", export_params, "parameter override name=value (repeatable)");

  std::string twist_file, beta;
  auto* twist = app.add_subcommand("twist", "twist an untwisted algebra by an endomorphism");
  twist->add_option("file", twist_file, "JSON algebra document ('-' for stdin)")->required();
  twist->add_option("--beta", beta, "matrix as JSON rows of scalar strings")->required();

  std::string tensor_file;
  auto* tensor = app.add_subcommand("tensor", "tensor-square algebra of a Hom-Lie input");
  tensor->add_option("file", tensor_file, "JSON algebra document ('-' for stdin)")->required();

  homleib::EnumerateOptions enum_opt;
  auto* enumerate = app.add_subcommand("enumerate", "scan all structures over a prime field");
  enumerate->add_option("--p", enum_opt.p, "odd prime (default 3)");
  enumerate->add_option("--sidedness", enum_opt.sidedness, "left|right|symmetric (default left)");
  enumerate->add_flag("--classify", enum_opt.classify, "partition into base-change orbits");
  bool no_mult = false;
  enumerate->add_flag("--no-multiplicative", no_mult, "drop the endomorphism requirement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? homleib::kExitUsage : homleib::kExitOk;
  }

  try {
    if (*check) return homleib::cmd_check(read_input(file), identity, std::cout);
    if (*solve) {
      if (!lam.empty()) solve_opt.lambda = lam;
      if (!mu.empty()) solve_opt.mu = mu;
      if (!gam.empty()) solve_opt.gamma = gam;
      if (parity_str == "0") solve_opt.parity = 0;
      else if (parity_str == "1") solve_opt.parity = 1;
      else if (parity_str != "both") throw homleib::ParseError("parity must be 0, 1 or both");
      return homleib::cmd_solve(read_input(solve_file), solve_opt, std::cout);
    }
    if (*tables) {
      if (tables_all && !tables_id.empty())
        throw homleib::ParseError("--all and --id are mutually exclusive");
      if (!tables_id.empty()) tables_opt.id = tables_id;
      return homleib::cmd_tables(tables_opt, std::cout);
    }
    if (*exp) return homleib::cmd_export(export_id, export_variant, export_params, std::cout);
    if (*twist) return homleib::cmd_twist(read_input(twist_file), beta, std::cout);
    if (*tensor) return homleib::cmd_tensor(read_input(tensor_file), std::cout);
    if (*enumerate) {
      enum_opt.require_multiplicative = !no_mult;
      return homleib::cmd_enumerate(enum_opt, std::cout);
    }
  } catch (const homleib::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return homleib::kExitUsage;
  } catch (const homleib::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return homleib::kExitUsage;
  } catch (const homleib::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return homleib::kExitCheckFailed;
  }
  return homleib::kExitUsage;
}

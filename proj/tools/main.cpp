#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "defectforms/errors.hpp"
#include "runner.hpp"

using namespace defectforms;

int main(int argc, char** argv) {
  CLI::App app{"Symbolic checks for defect densities in metric-affine geometry"};
  std::string command, path;
  cli::RunOptions opt;
  bool json = false;
  int seed = -1;
  app.add_option("command", command, "identities, decompose, defects, continuity, holonomy or all")
      ->required()
      ->check(CLI::IsMember(cli::commands()));
  app.add_option("scenario", path, "scenario file")->required();
  app.add_option("--suite", opt.suites, "claim suites for continuity (repeatable)")
      ->check(CLI::IsMember([] {
        auto s = claim_suites();
        s.push_back("all");
        return s;
      }()));
  app.add_option("--seed", seed, "seed for randomized zero tests")->check(CLI::NonNegativeNumber);
  app.add_option("--points", opt.points, "sample points per zero test")->check(CLI::Range(4, 1 << 20));
  app.add_flag("--json", json, "JSON output");
  app.add_flag("--strict-report", opt.strict_report, "treat REPORT as failure");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (seed >= 0) opt.seed = static_cast<std::uint64_t>(seed);

  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: file not found: " << path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    cli::Report r = cli::run(command, cli::parse_scenario(buf.str()), opt);
    std::cout << (json ? r.json() : r.text());
    return r.exit_code(opt.strict_report);
  } catch (const ParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "assocloc/assocloc.h"

namespace {

const char* kHelp[] = {
    "check an algebra file and optional module files",
    "list the simple modules and the radical",
    "endomorphism rings of modules (default: every simple) with Schur checks",
    "local function ring A_M of the given modules (default: each simple)",
    "compare A_{M1+M2} with A_M1 x A_M2 (default: every pair of simples)",
    "adic completion at the radical, or of A_M when modules are given",
    "Hausdorff localization (plus the commutative branch when applicable)",
    "compare A_M with the classical localization A_m (commutative algebras)",
    "run the full invariant suite on an algebra",
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"assocloc: localizing rings of finite-dimensional algebras over F_p"};
  app.require_subcommand(1);

  assocloc_options opts;
  assocloc_options_init(&opts);
  if (const char* env = std::getenv("ASSOCLOC_SEED")) {
    try {
      opts.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ASSOCLOC_SEED is not an unsigned integer: " << env << "\n";
      return 2;
    }
  }
  std::string report_path;
  app.add_option("--seed", opts.seed, "Meataxe PRNG seed (env ASSOCLOC_SEED)");
  app.add_option("--cap", opts.cap, "enumeration cap")->capture_default_str();
  app.add_option("--report", report_path, "also write the report to this file");

  std::vector<std::string> files;
  std::string chosen;
  for (std::size_t i = 0; i < assocloc_command_count(); ++i) {
    const std::string name = assocloc_command_name(i);
    CLI::App* sub = app.add_subcommand(name, kHelp[i]);
    sub->add_option("files", files, "algebra file followed by module files")->required();
    sub->fallthrough();
    sub->callback([&chosen, name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  std::vector<const char*> paths;
  for (const auto& f : files) paths.push_back(f.c_str());
  assocloc_report* report = nullptr;
  const assocloc_status st =
      assocloc_run(chosen.c_str(), paths.data(), paths.size(), &opts, &report);
  if (st != ASSOCLOC_OK) {
    std::cerr << "error: " << assocloc_status_name(st) << ": " << assocloc_last_error() << "\n";
    return 2;
  }
  const std::string text = assocloc_report_text(report);
  const int code = assocloc_report_exit_code(report);
  assocloc_report_free(report);

  std::cout << text;
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return 2;
    }
    out << text;
  }
  return code;
}

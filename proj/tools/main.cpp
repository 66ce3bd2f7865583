#include <array>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

std::optional<std::array<long long, 3>> parse_abc(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::array<long long, 3> out{};
  std::istringstream is(s);
  char comma1 = 0, comma2 = 0;
  if (!(is >> out[0] >> comma1 >> out[1] >> comma2 >> out[2]) || comma1 != ',' ||
      comma2 != ',' || !(is >> std::ws).eof())
    throw CLI::ValidationError("--abc", "expected a,b,c (e.g. 2,3,7)");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Veech groups of regular origamis: cylinder decompositions, "
               "SL(2,Z)-orbits and totally-non-congruence certificates"};
  app.require_subcommand(1);

  std::string file, family, method = "proposition", abc_str, cache_dir;
  std::vector<long long> params;
  long long m = 0;
  unsigned long long max_n = 24;
  bool as_json = false, no_cache = false;

  auto add_cache_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--no-cache", no_cache, "bypass the result cache");
    cmd->add_option("--cache-dir", cache_dir,
                    "cache directory (default: ORIGAMI_VEECH_CACHE or ~/.cache/origami-veech)");
  };

  auto* make = app.add_subcommand("make", "emit an origami from a built-in family");
  make->add_option("family", family, "torus | dihedral | alternating | psl2")->required();
  make->add_option("params", params, "family parameter (k, n or q)");
  make->add_option("--abc", abc_str, "orders a,b,c for the psl2 generator search");

  auto* cylinders = app.add_subcommand("cylinders", "cylinder decomposition in direction (1,-m)");
  cylinders->add_option("file", file, "origami JSON file, or - for stdin")->required();
  cylinders->add_option("--m", m, "direction parameter m >= 0 (default 0: horizontal)");
  cylinders->add_flag("--json", as_json, "print JSON instead of a table");

  auto* veech = app.add_subcommand("veech", "orbit, index, Veech group generators, cusps");
  veech->add_option("file", file, "origami JSON file, or - for stdin")->required();
  veech->add_flag("--json", as_json, "print JSON instead of a report");
  add_cache_flags(veech);

  auto* certify = app.add_subcommand("certify", "totally-non-congruence certificate");
  certify->add_option("file", file, "origami JSON file, or - for stdin")->required();
  certify->add_option("--method", method, "proposition (default) or abc");
  certify->add_option("--abc", abc_str, "orders a,b,c for --method abc");
  certify->add_flag("--json", as_json, "print JSON instead of a report");

  auto* surj = app.add_subcommand("surjectivity", "surjectivity onto SL(2,Z/n) for 2 <= n <= N");
  surj->add_option("file", file, "origami JSON file, or - for stdin")->required();
  surj->add_option("--max-n", max_n, "largest modulus to test (default 24)");
  surj->add_flag("--json", as_json, "print JSON instead of a table");
  add_cache_flags(surj);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : origami::cli::kExitInputError;
  }

  origami::cli::CacheOptions cache{no_cache, cache_dir};
  try {
    if (make->parsed())
      return origami::cli::cmd_make(family, params, parse_abc(abc_str), std::cout, std::cerr);
    if (cylinders->parsed())
      return origami::cli::cmd_cylinders(file, m, as_json, std::cout, std::cerr);
    if (veech->parsed())
      return origami::cli::cmd_veech(file, as_json, cache, std::cout, std::cerr);
    if (certify->parsed())
      return origami::cli::cmd_certify(file, method, parse_abc(abc_str), as_json,
                                       std::cout, std::cerr);
    if (surj->parsed())
      return origami::cli::cmd_surjectivity(file, max_n, as_json, cache, std::cout,
                                            std::cerr);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return origami::cli::kExitInputError;
  }
  return origami::cli::kExitInputError;
}

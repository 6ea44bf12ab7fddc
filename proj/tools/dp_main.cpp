// dp: command-line front end for drastic product logic and its duality.

#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

std::string read_formula(const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dp::cli;

  CLI::App app{"Drastic product logic: theorems, finite chains, duality and free algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  std::uint64_t cap = dp::kDefaultSweepCap;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_option("--cap", cap, "Bound on evaluated points for exhaustive sweeps");
  app.fallthrough();

  std::string formula;
  std::optional<std::uint32_t> variety;
  auto* thm = app.add_subcommand("thm", "Decide whether a formula is a DP theorem");
  thm->add_option("formula", formula, "Formula text, or - to read stdin")->required();
  thm->add_option("--variety", variety, "Decide validity on the n-element DP-chain instead");

  auto* prs = app.add_subcommand("parse", "Parse and pretty-print a formula");
  prs->add_option("formula", formula, "Formula text, or - to read stdin")->required();

  std::uint32_t k = 0;
  std::string mode = "all";
  auto* free = app.add_subcommand("free", "Free k-generated DP-algebra");
  free->add_option("k", k, "Number of generators")->required();
  free->add_option("--mode", mode, "closed | power | oracle | all")
      ->check(CLI::IsMember({"closed", "power", "oracle", "all"}));

  std::string op;
  std::vector<std::string> operands;
  auto* dual = app.add_subcommand("dual", "Operations in the dual category of multisets of chains");
  dual->add_option("op", op, "product | coproduct | power | homcount | inverse | tr | height")
      ->required();
  dual->add_option("operands", operands, "Objects as {1,3,2,1} or JSON; power takes an exponent");

  std::uint32_t n = 0;
  std::string cls = "mtl";
  auto* chains = app.add_subcommand("chains", "Enumerate finite MTL-chains of a class");
  chains->add_option("n", n, "Chain size (2..5)")->required();
  chains->add_option("--class", cls, "mtl | wnm | rdp | dp")
      ->check(CLI::IsMember({"mtl", "wnm", "rdp", "dp"}));

  std::string suite;
  auto* check = app.add_subcommand("check", "Run property suites");
  check->add_option("suite", suite, "axioms | duality | free | all")
      ->required()
      ->check(CLI::IsMember({"axioms", "duality", "free", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CommandResult result;
  if (*thm) {
    result = cmd_thm(read_formula(formula), variety, cap);
  } else if (*prs) {
    result = cmd_parse(read_formula(formula));
  } else if (*free) {
    const FreeMode m = mode == "closed"   ? FreeMode::Closed
                       : mode == "power"  ? FreeMode::Power
                       : mode == "oracle" ? FreeMode::Oracle
                                          : FreeMode::All;
    result = cmd_free(k, m);
  } else if (*dual) {
    result = cmd_dual(op, operands, cap);
  } else if (*chains) {
    result = cmd_chains(n, cls);
  } else if (*check) {
    result = cmd_check(suite);
  }

  if (as_json) {
    std::cout << result.to_json().dump() << "\n";
  } else if (result.status == Status::Error && result.exit_code >= 2) {
    std::cerr << result.human_text << "\n";
  } else {
    std::cout << result.human_text << "\n";
  }
  return result.exit_code;
}

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ratfib/commands.hpp"

namespace {

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for pointed genus-5 and genus-6 curves"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit the report as JSON");

  std::string file;

  auto* validate = app.add_subcommand("validate", "Check a curve file");
  validate->add_option("file", file, "Curve file or - for stdin")->required();

  auto* phi5 = app.add_subcommand("phi5", "Image of a pointed genus-5 curve in M04");
  phi5->add_option("file", file)->required();
  bool closed = false, blowup = false, both = false;
  auto* o_closed = phi5->add_flag("--closed-form", closed, "Coefficient ratio only");
  auto* o_blowup = phi5->add_flag("--blowup", blowup, "Double blow-up only");
  auto* o_both = phi5->add_flag("--both", both, "Run both and compare (default)");
  o_closed->excludes(o_blowup)->excludes(o_both);
  o_blowup->excludes(o_both);

  auto* git = app.add_subcommand("git", "Torus GIT on the Plucker states of a net");
  git->add_option("file", file)->required();
  ratfib::GitOptions gopt;
  std::vector<long> lin_ab;
  std::string side;
  std::vector<long> lambda;
  auto* o_lin = git->add_option("--linearization", lin_ab, "Linearization O(a,b)")->expected(2);
  git->add_option("--side", side, "L- or L+ shortcut for O(29,20) / O(31,20)")
      ->check(CLI::IsMember({"minus", "plus"}))
      ->excludes(o_lin);
  git->add_option("--lambda", lambda, "One-parameter subgroup weights w0..w4")->expected(5)->allow_extra_args(false);
  git->add_flag("--normalize", gopt.normalize, "Put the curve in normal form first");
  git->add_flag("--classify", gopt.classify, "Torus Hilbert-Mumford classification");
  git->add_flag("--flat-limit", gopt.flat_limit, "Flat limit under --lambda");
  git->add_flag("--rescale", gopt.rescale, "Canonical torus representative and invariant c");

  auto* divisors = app.add_subcommand("divisors", "Divisor class arithmetic");
  divisors->prefix_command();

  auto* g6 = app.add_subcommand("g6", "Genus-6 curves on the quintic del Pezzo surface");
  std::string g6_sub;
  g6->add_option("subcommand", g6_sub)->required()->check(CLI::IsMember({"phi6", "d6", "curves"}));
  g6->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : ratfib::kExitParse;
  }

  ratfib::CommandResult res;
  if (*divisors) {
    res = ratfib::cmd_divisors(divisors->remaining());
  } else {
    std::string text;
    if (!read_input(file, text)) {
      std::cerr << "cannot read " << file << "\n";
      return ratfib::kExitParse;
    }
    if (*validate) {
      res = ratfib::cmd_validate(text);
    } else if (*phi5) {
      auto mode = closed ? ratfib::Phi5Mode::ClosedForm : blowup ? ratfib::Phi5Mode::Blowup : ratfib::Phi5Mode::Both;
      res = ratfib::cmd_phi5(text, mode);
    } else if (*git) {
      if (lin_ab.size() == 2) gopt.lin = {lin_ab[0], lin_ab[1]};
      if (side == "minus") gopt.lin = {29, 20};
      if (side == "plus") gopt.lin = {31, 20};
      if (lambda.size() == 5) gopt.lambda = std::array<long, 5>{lambda[0], lambda[1], lambda[2], lambda[3], lambda[4]};
      res = ratfib::cmd_git(text, gopt);
    } else {
      res = ratfib::cmd_g6(text, g6_sub);
    }
  }

  std::cout << (json ? res.report.json() : res.report.text());
  return res.exit_code;
}

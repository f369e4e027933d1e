#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ratfib/commands.hpp"
#include "ratfib/curve_file.hpp"
#include "ratfib/error.hpp"
#include "ratfib/phi5.hpp"
#include "test_support.hpp"

using namespace ratfib;

namespace {

std::string data_path(const std::string& name) { return std::string(RATFIB_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& name) {
  std::ifstream in(data_path(name));
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(RATFIB_CLI) + " " + args + " > /dev/null 2>&1";
  int st = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(st));
  return WEXITSTATUS(st);
}

}  // namespace

TEST_CASE("curve file round trip") {
  for (const char* name : {"limit_triple.curve", "random7.curve", "g6_interior.curve", "g6_on_line.curve"}) {
    CAPTURE(name);
    CurveFile f = parse_curve_file(slurp(name));
    CHECK(parse_curve_file(print_curve_file(f)) == f);
    CHECK(parse_curve_file(print_curve_file_inline(f)) == f);
    CHECK(print_curve_file(f) == slurp(name));
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CurveFile f = genus5_file(random_curve(seed));
    CHECK(parse_curve_file(print_curve_file(f)) == f);
  }
}

TEST_CASE("float literal names line and column") {
  try {
    parse_curve_file(slurp("float.curve"));
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 6, column 5") != std::string::npos);
    CHECK(std::string(e.what()).find("'0.5'") != std::string::npos);
  }
  auto r = cmd_validate(slurp("float.curve"));
  CHECK(r.exit_code == kExitParse);
  CHECK(r.report.get("reason") == "ParseError");
}

TEST_CASE("malformed files") {
  CHECK_THROWS_AS(parse_curve_file(""), Error);
  CHECK_THROWS_AS(parse_curve_file("format 1\ngenus 7\n"), Error);
  CHECK_THROWS_AS(parse_curve_file("format 1; genus 5; quadric; 0 5 1; end"), Error);
  CHECK_THROWS_AS(parse_curve_file("format 1; genus 5; quadric; 1 0 x; end"), Error);
}

TEST_CASE("validate") {
  auto ok = cmd_validate(slurp("limit_triple.curve"));
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.report.get("status") == "pass");
  auto bad = cmd_validate(slurp("g6_collinear.curve"));
  CHECK(bad.exit_code == kExitDomain);
  CHECK(bad.report.get("reason") == "GeneralPositionFailure");
}

TEST_CASE("phi5 on the limit triple") {
  auto r = cmd_phi5(slurp("limit_triple.curve"), Phi5Mode::Both);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report.get("closed_form.boundary") == "{R,C}|{E,T}");
  CHECK(r.report.get("blowup.boundary") == "{R,C}|{E,T}");
  CHECK(r.report.get("match") == "yes");
  CHECK(r.report.get("a_1_1_3") == "1");
}

TEST_CASE("phi5 closed form example 3/2") {
  CurveFile f = parse_curve_file(slurp("limit_triple.curve"));
  f.g5.net[0].set(1, 3, Rational(2));
  f.g5.net[0].set(2, 2, Rational(4));
  f.g5.net[1].set(2, 3, Rational(3));
  auto r = cmd_phi5(print_curve_file(f), Phi5Mode::ClosedForm);
  CHECK(r.report.get("lambda") == "3/2");
}

TEST_CASE("phi5 reports the failing step") {
  CurveFile f = parse_curve_file(slurp("limit_triple.curve"));
  f.g5.point = Vec{Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)};
  auto r = cmd_phi5(print_curve_file(f), Phi5Mode::Both);
  CHECK(r.exit_code == kExitDomain);
  CHECK(r.report.get("stage") == "validate");
  CHECK(r.report.get("status") == "error");
}

TEST_CASE("phi5 random files match and echo a reparsable normal form") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CAPTURE(seed);
    auto r = cmd_phi5(print_curve_file(genus5_file(random_curve(seed))), Phi5Mode::Both);
    REQUIRE(r.exit_code == kExitOk);
    CHECK(r.report.get("match") == "yes");
    CurveFile nf = parse_curve_file(r.report.get("normal_form"));
    CHECK(normal_form_violation(nf.g5.net).empty());
    CHECK(cmd_phi5(r.report.get("normal_form"), Phi5Mode::ClosedForm).report.get("lambda") ==
          r.report.get("closed_form.lambda"));
  }
}

TEST_CASE("git: not stable and cross-command identity") {
  std::string text = slurp("random7.curve");
  GitOptions o;
  o.lin = {3, 2};
  o.lambda = std::array<long, 5>{-2, -1, 0, 1, 2};
  o.normalize = true;
  o.classify = true;
  o.flat_limit = true;
  o.rescale = true;
  auto g = cmd_git(text, o);
  REQUIRE(g.exit_code == kExitOk);
  CHECK(std::stol(g.report.get("mu")) >= 0);
  CHECK(g.report.get("stable") == "no");
  auto p = cmd_phi5(text, Phi5Mode::ClosedForm);
  CHECK(g.report.get("c.lambda") == p.report.get("lambda"));
  CHECK(!g.report.get("c.lambda").empty());
}

TEST_CASE("git: trivial subgroup rejected") {
  GitOptions o;
  o.lambda = std::array<long, 5>{0, 0, 0, 0, 0};
  auto g = cmd_git(slurp("limit_triple.curve"), o);
  CHECK(g.exit_code == kExitDomain);
  CHECK(g.report.get("status") == "error");
}

TEST_CASE("divisors") {
  auto p = cmd_divisors({"pencil", "8", "4", "5", "16"});
  CHECK(p.report.get("chi_tot") == "24");
  CHECK(p.report.get("delta_0") == "40");
  CHECK(p.report.get("K2_tot") == "-12");
  CHECK(p.report.get("kappa") == "20");
  CHECK(p.report.get("lambda") == "5");
  CHECK(p.report.get("omega") == "1");
  CHECK(p.report.get("W.F2") == "10");
  CHECK(cmd_divisors({"classes", "--eval", "W", "F1"}).report.get("value") == "120");
  CHECK(cmd_divisors({"classes", "--eval", "W", "F2"}).report.get("value") == "10");
  auto n = cmd_divisors({"numerology", "5", "1", "5", "0,5"});
  CHECK(n.report.get("alpha") == "4");
  CHECK(n.report.get("divisor") == "yes");
  auto pb = cmd_divisors({"pullback", "120", "10"});
  CHECK(pb.report.get("class") == "O_X(15,10)");
  CHECK(pb.report.get("ratio") == "5");
  CHECK(cmd_divisors({"bogus"}).exit_code == kExitParse);
  CHECK(cmd_divisors({"pencil", "8", "x", "5", "16"}).exit_code == kExitParse);
}

TEST_CASE("g6") {
  auto c = cmd_g6(slurp("g6_interior.curve"), "curves");
  CHECK(c.report.get("neg_curves") == "10");
  CHECK(c.report.get("blow_downs") == "5");
  auto d = cmd_g6(slurp("g6_on_line.curve"), "d6");
  CHECK(d.report.get("in_D6") == "yes");
  CHECK(d.report.get("witness") == "L12");
  CHECK(cmd_g6(slurp("g6_on_line.curve"), "phi6").report.get("kind") == "boundary");
  CHECK(cmd_g6(slurp("g6_interior.curve"), "d6").report.get("in_D6") == "no");
  auto i = cmd_g6(slurp("g6_interior.curve"), "phi6");
  CHECK(i.report.get("kind") == "interior");
  CHECK(i.report.get("configuration") == "(-3,-1)");
}

TEST_CASE("determinism and json") {
  std::string text = slurp("random7.curve");
  auto a = cmd_phi5(text, Phi5Mode::Both);
  auto b = cmd_phi5(text, Phi5Mode::Both);
  CHECK(a.report.text() == b.report.text());
  CHECK(a.report.json() == b.report.json());
  CHECK(a.report.json().find("\"match\": \"yes\"") != std::string::npos);
}

TEST_CASE("executable exit codes") {
  CHECK(run_cli("validate " + data_path("limit_triple.curve")) == 0);
  CHECK(run_cli("validate " + data_path("float.curve")) == 2);
  CHECK(run_cli("validate " + data_path("g6_collinear.curve")) == 1);
  CHECK(run_cli("phi5 --both " + data_path("limit_triple.curve")) == 0);
  CHECK(run_cli("git " + data_path("limit_triple.curve") + " --lambda 0 0 0 0 0") == 1);
  CHECK(run_cli("divisors numerology 5 1 4 0,3") == 0);
  CHECK(run_cli("nosuch") == 2);
  CHECK(run_cli("validate /nonexistent/file") == 2);
}

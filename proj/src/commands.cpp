#include "ratfib/commands.hpp"

#include <functional>
#include <json.hpp>
#include <sstream>

#include "ratfib/curve_file.hpp"
#include "ratfib/divisors.hpp"
#include "ratfib/error.hpp"
#include "ratfib/genus6.hpp"
#include "ratfib/phi5.hpp"

namespace ratfib {

std::string Report::get(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return {};
}

std::string Report::text() const {
  std::string s;
  for (const auto& [k, v] : entries_) s += k + ": " + v + "\n";
  return s;
}

std::string Report::json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : entries_) {
    if (j.contains(k)) {
      if (!j[k].is_array()) j[k] = nlohmann::ordered_json::array({j[k]});
      j[k].push_back(v);
    } else {
      j[k] = v;
    }
  }
  return j.dump(2) + "\n";
}

namespace {

CommandResult guarded(const std::function<void(Report&)>& body, const std::string* stage = nullptr) {
  CommandResult r;
  try {
    body(r.report);
  } catch (const Error& e) {
    r.report.add("status", "error");
    r.report.add("reason", std::string(code_name(e.code())));
    if (stage && !stage->empty()) r.report.add("stage", *stage);
    r.report.add("message", e.what());
    r.exit_code = e.code() == ErrorCode::ParseError ? kExitParse : kExitDomain;
  }
  return r;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

QuinticDP checked_surface(const PointedCurve6& c) { return QuinticDP::make(c.surface.base); }

PointedCurve6 checked_curve6(const CurveFile& f) {
  PointedCurve6 c = f.g6;
  c.surface = checked_surface(c);
  check_curve6(c);
  return c;
}

CurveFile expect_genus(std::string_view text, int genus) {
  CurveFile f = parse_curve_file(text);
  if (f.genus != genus) {
    throw Error(ErrorCode::PreconditionViolation, "command needs a genus-" + std::to_string(genus) + " file");
  }
  return f;
}

void add_m04(Report& r, const std::string& prefix, const M04Point& p) {
  switch (p.kind) {
    case M04Point::Kind::Interior:
      r.add(prefix + "lambda", p.lambda.str());
      break;
    case M04Point::Kind::Boundary:
      r.add(prefix + "boundary", label_name(p.label));
      break;
    case M04Point::Kind::Degenerate:
      r.add(prefix + "degenerate", p.reason);
      break;
  }
}

}  // namespace

CommandResult cmd_validate(std::string_view file_text) {
  return guarded([&](Report& r) {
    CurveFile f = parse_curve_file(file_text);
    r.add("genus", std::to_string(f.genus));
    if (f.genus == 5) {
      auto v = validate(f.g5);
      if (!v.ok()) throw Error(ErrorCode::PreconditionViolation, "validation failed: " + v.failure());
      r.add("checks", "point_nonzero net_independence point_incidence smoothness_at_point");
    } else {
      checked_curve6(f);
      r.add("checks", "general_position base_point_multiplicity point_incidence");
    }
    r.add("status", "pass");
  });
}

CommandResult cmd_phi5(std::string_view file_text, Phi5Mode mode) {
  std::string stage;
  return guarded(
      [&](Report& r) {
        stage = "parse";
        CurveFile f = expect_genus(file_text, 5);
        stage = "validate";
        auto v = validate(f.g5);
        if (!v.ok()) throw Error(ErrorCode::PreconditionViolation, "validation failed: " + v.failure());
        stage = "normalize";
        NormalForm5 nf = normalize(f.g5);
        r.add("a_1_1_3", nf.a(1, 1, 3).str());
        r.add("a_1_2_2", nf.a(1, 2, 2).str());
        r.add("a_2_2_3", nf.a(2, 2, 3).str());
        r.add("normal_form", print_curve_file_inline(genus5_file(nf.as_curve())));
        std::optional<M04Point> closed;
        std::optional<M04Point> blow;
        if (mode != Phi5Mode::Blowup) {
          stage = "closed_form";
          closed = phi5_closed_form(nf);
          add_m04(r, mode == Phi5Mode::Both ? "closed_form." : "", *closed);
        }
        if (mode != Phi5Mode::ClosedForm) {
          stage = "residual_curve";
          auto sh = surface_and_hyperplane(nf);
          auto germ = residual_curve(sh.surface, sh.hyperplane);
          stage = "branch_expand";
          auto branch = branch_expand(nf, kDefaultBranchOrder);
          stage = "blowup";
          auto pts = blowup_four_points(germ, branch);
          r.add("point.R", pts.r.str());
          r.add("point.E", pts.e.str());
          r.add("point.T", pts.t.str());
          r.add("point.C", pts.c.str());
          blow = classify_four_points(pts);
          add_m04(r, mode == Phi5Mode::Both ? "blowup." : "", *blow);
        }
        if (mode == Phi5Mode::Both) r.add("match", yes_no(*closed == *blow));
        r.add("status", "ok");
      },
      &stage);
}

CommandResult cmd_git(std::string_view file_text, const GitOptions& opts) {
  return guarded([&](Report& r) {
    CurveFile f = expect_genus(file_text, 5);
    Linearization lin = Linearization::make(opts.lin.a, opts.lin.b);
    std::optional<OnePS> l;
    if (opts.lambda) l = OnePS::make(*opts.lambda);
    PointedCurve5 c = f.g5;
    if (opts.normalize) {
      c = normalize(c).as_curve();
      r.add("normal_form", print_curve_file_inline(genus5_file(c)));
    }
    r.add("linearization", "O(" + std::to_string(lin.a) + "," + std::to_string(lin.b) + ")");
    auto states = plucker_states(c, lin);
    r.add("plucker_states", std::to_string(states.plucker.size()));
    r.add("combined_states", std::to_string(states.combined.size()));
    if (l) {
      long m = mu(states.combined, *l);
      r.add("lambda", l->str());
      r.add("mu", std::to_string(m));
      r.add("mu_sign", m > 0 ? "positive (destabilizing)" : m == 0 ? "zero" : "negative");
    }
    if (opts.classify) {
      auto cls = torus_classify(states.combined);
      r.add("torus_stability", stability_name(cls.stability));
      r.add("stable", yes_no(cls.stability == Stability::Stable));
      if (cls.destabilizing) {
        r.add("destabilizing", cls.destabilizing->str());
        std::string w;
        for (std::size_t i = 0; i < cls.witness.size(); ++i) w += (i ? "," : "") + std::to_string(cls.witness[i]);
        r.add("violated_state", "(" + w + ")");
      }
    }
    PointedCurve5 current = c;
    if (opts.flat_limit) {
      if (!l) throw Error(ErrorCode::PreconditionViolation, "--flat-limit needs --lambda");
      current = flat_limit(c, *l);
      r.add("flat_limit", print_curve_file_inline(genus5_file(current)));
    }
    if (opts.rescale) {
      auto res = torus_rescale(current);
      r.add("canonical", print_curve_file_inline(genus5_file(res.canonical)));
      add_m04(r, "c.", res.c);
    }
    r.add("status", "ok");
  });
}

namespace {

long parse_long(const std::string& s) {
  Rational r = Rational::parse(s);
  if (r.denominator() != 1) throw Error(ErrorCode::ParseError, "expected an integer: '" + s + "'");
  return r.numerator().get_si();
}

TestCurveProfile named_profile(const std::string& name) {
  if (name == "F1") return moving_point_profile(5);
  if (name == "F2") return lefschetz_profile(8, 4, 5, 16).profile;
  throw Error(ErrorCode::ParseError, "unknown test curve '" + name + "' (F1 or F2)");
}

void need(const std::vector<std::string>& args, std::size_t n, const char* usage) {
  if (args.size() != n) throw Error(ErrorCode::ParseError, std::string("usage: divisors ") + usage);
}

}  // namespace

CommandResult cmd_divisors(const std::vector<std::string>& args) {
  return guarded([&](Report& r) {
    if (args.empty()) throw Error(ErrorCode::ParseError, "divisors needs a subcommand");
    const std::string& sub = args[0];
    if (sub == "pencil") {
      need(args, 5, "pencil CHI K2 GENUS BASE_POINTS");
      auto rep = lefschetz_profile(parse_long(args[1]), parse_long(args[2]), parse_long(args[3]), parse_long(args[4]));
      r.add("chi_tot", rep.chi_tot.str());
      r.add("delta_0", rep.delta_0.str());
      r.add("K2_tot", rep.K2_tot.str());
      r.add("kappa", rep.kappa.str());
      r.add("lambda", rep.lambda.str());
      r.add("omega", rep.omega.str());
      r.add("W.F2", class_eval(weierstrass_class(), rep.profile).str());
      r.add("note", "lambda taken as (kappa + delta_0)/12; the reading 12(kappa + delta_0) = " + (Rational(12) * (rep.kappa + rep.delta_0)).str() + " is treated as a typo");
    } else if (sub == "classes") {
      need(args, 4, "classes --eval W F1|F2");
      if (args[1] != "--eval" || args[2] != "W") throw Error(ErrorCode::ParseError, "usage: divisors classes --eval W F1|F2");
      r.add("class", weierstrass_class().str());
      r.add("profile", named_profile(args[3]).str());
      r.add("value", class_eval(weierstrass_class(), named_profile(args[3])).str());
    } else if (sub == "numerology") {
      need(args, 5, "numerology G R D A0,A1,...");
      std::vector<long> z;
      std::stringstream ss(args[4]);
      std::string item;
      while (std::getline(ss, item, ',')) z.push_back(parse_long(item));
      auto rep = bn_divisor_numerology(parse_long(args[1]), parse_long(args[2]), parse_long(args[3]), z);
      r.add("alpha", std::to_string(rep.alpha));
      r.add("divisor", yes_no(rep.is_divisor));
    } else if (sub == "pullback") {
      need(args, 3, "pullback D1 D2");
      auto cls = pullback_solve(Rational::parse(args[1]), Rational::parse(args[2]));
      r.add("class", cls.str());
      auto ray = ray_collinear(cls, PicXClass{3, 2});
      r.add("collinear_with_O(3,2)", yes_no(ray.collinear));
      if (ray.ratio) r.add("ratio", ray.ratio->str());
    } else if (sub == "relation") {
      need(args, 7, "relation W1 W2 BN3_1 BN3_2 BN4_1 BN4_2");
      auto q = [&](std::size_t k) { return Rational::parse(args[k]); };
      auto rep = logan_relation_check({q(1), q(2)}, {q(3), q(4)}, {q(5), q(6)});
      r.add("consistent", yes_no(rep.consistent));
      r.add("discrepancy", "(" + rep.discrepancy[0].str() + "," + rep.discrepancy[1].str() + ")");
    } else {
      throw Error(ErrorCode::ParseError, "unknown divisors subcommand '" + sub + "'");
    }
    r.add("status", "ok");
  });
}

CommandResult cmd_g6(std::string_view file_text, std::string_view sub) {
  return guarded([&](Report& r) {
    if (sub != "phi6" && sub != "d6" && sub != "curves") {
      throw Error(ErrorCode::ParseError, "unknown g6 subcommand '" + std::string(sub) + "'");
    }
    CurveFile f = expect_genus(file_text, 6);
    if (sub == "curves") {
      QuinticDP y = checked_surface(f.g6);
      auto curves = neg_curves(y);
      r.add("neg_curves", std::to_string(curves.size()));
      for (const auto& c : curves) r.add("curve", c.label());
      auto sets = blow_down_sets(y);
      r.add("blow_downs", std::to_string(sets.size()));
      for (const auto& s : sets) r.add("blow_down", s[0].label() + " " + s[1].label() + " " + s[2].label() + " " + s[3].label());
    } else {
      PointedCurve6 c = checked_curve6(f);
      if (sub == "phi6") {
        auto p = phi6(c);
        r.add("kind", p.kind == M05OrbitPoint::Kind::Interior ? "interior" : "boundary");
        if (p.kind == M05OrbitPoint::Kind::Interior) {
          r.add("configuration", "(" + p.config[0].str() + "," + p.config[1].str() + ")");
        } else {
          r.add("stratum", p.shape);
          r.add("pattern", p.pattern);
        }
      } else {
        auto d = d6_membership(c);
        r.add("in_D6", yes_no(d.in_d6));
        if (d.witness) {
          r.add("witness", d.witness->label());
          r.add("residual_intersection", neg_curve_residual(c, *d.witness).str());
        }
      }
    }
    r.add("status", "ok");
  });
}

}  // namespace ratfib

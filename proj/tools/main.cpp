#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "skeinlab/format.hpp"
#include "skeinlab/json_io.hpp"
#include "skeinlab/verify.hpp"

using namespace skeinlab;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitBadSpecialization = 4;

struct Options {
  std::string expr;
  std::string on = "y";
  std::string chirality = "left";
  std::string mode = "text";
  std::string t_value;
  std::string target;
  std::string gens_file;
  int pmax = 1, qmin = -10, qmax = 4;
  int bound_p = 0, bound_q = 8;
};

Chirality chir_of(const std::string& s) {
  if (s == "left") return Chirality::Left;
  if (s == "right") return Chirality::Right;
  throw CLI::ValidationError("--chirality must be left or right");
}

FormatMode mode_of(const std::string& s) {
  return s == "json" ? FormatMode::Json : FormatMode::Text;
}

// parses --t-value; t = 0 is never legal, and the eighth-root values +-1 are
// rejected when the computation needs t^8 - 1 invertible
Rat parse_t_value(const std::string& s, bool forbid_eighth_roots) {
  Rat t0 = rat_from_string(s);
  if (t0 == 0) throw std::domain_error("specialization at t = 0");
  if (forbid_eighth_roots && (t0 == 1 || t0 == -1))
    throw std::domain_error(
        "t = " + rat_to_string(t0) +
        " is an eighth root of unity; this computation needs t^8 - 1 invertible");
  return t0;
}

ModuleElt specialize(const ModuleElt& v, const Rat& t0) {
  ModuleElt r;
  for (const auto& [n, c] : v.s) r.add_s(n, Laurent(c.eval(t0)));
  for (const auto& [n, c] : v.sy) r.add_sy(n, Laurent(c.eval(t0)));
  return r;
}

Lowered specialize(const Lowered& v, const Rat& t0) {
  if (std::holds_alternative<Laurent>(v))
    return Laurent(std::get<Laurent>(v).eval(t0));
  if (std::holds_alternative<TorusSkein>(v))
    return specialize_t(std::get<TorusSkein>(v), t0);
  if (std::holds_alternative<QTorusPoly>(v))
    return specialize_t(std::get<QTorusPoly>(v), t0);
  return specialize(std::get<ModuleElt>(v), t0);
}

int run_mul(const Options& opt) {
  Lowered v = lower(parse(opt.expr));
  if (!opt.t_value.empty()) v = specialize(v, parse_t_value(opt.t_value, false));
  std::cout << format(v, mode_of(opt.mode)) << "\n";
  return 0;
}

int run_pi(const Options& opt) {
  TorusSkein u = lower_skein(parse(opt.expr));
  ModuleElt img = pi(u, chir_of(opt.chirality));
  if (!opt.t_value.empty())
    img = specialize(img, parse_t_value(opt.t_value, false));
  std::cout << format(img, mode_of(opt.mode)) << "\n";
  return 0;
}

int run_act(const Options& opt) {
  TorusSkein u = lower_skein(parse(opt.expr));
  Expr on = parse(opt.on);
  Family fam = infer_family(on);
  ModuleElt v;
  if (fam == Family::Module) {
    v = lower_module(on);
  } else if (fam == Family::Scalar) {
    v.add_s(0, lower_scalar(on));
  } else {
    throw ParseError("--on must be a module-family expression", 1, 1);
  }
  ModuleElt out = act(u, v, chir_of(opt.chirality));
  if (!opt.t_value.empty())
    out = specialize(out, parse_t_value(opt.t_value, false));
  std::cout << format(out, mode_of(opt.mode)) << "\n";
  return 0;
}

int run_kernel(const Options& opt) {
  std::optional<Rat> t0;
  if (!opt.t_value.empty()) t0 = parse_t_value(opt.t_value, false);
  auto basis =
      kernel_basis(opt.pmax, opt.qmin, opt.qmax, chir_of(opt.chirality), t0);
  if (mode_of(opt.mode) == FormatMode::Json) {
    Json arr = Json::array();
    for (const TorusSkein& v : basis) arr.push_back(to_json(v));
    std::cout << arr.dump() << "\n";
  } else {
    for (const TorusSkein& v : basis) std::cout << format(v) << "\n";
    std::cout << "(" << basis.size() << " kernel vectors)\n";
  }
  return 0;
}

int run_member(const Options& opt) {
  const Chirality c = chir_of(opt.chirality);
  TorusSkein target = lower_skein(parse(opt.target));
  std::ifstream in(opt.gens_file);
  if (!in) throw std::runtime_error("cannot open " + opt.gens_file);
  Json j = Json::parse(in);
  std::vector<TorusSkein> gens = skein_list_from_json(j);
  if (!opt.t_value.empty()) {
    const Rat t0 = parse_t_value(opt.t_value, true);
    target = specialize_t(target, t0);
    for (TorusSkein& g : gens) g = specialize_t(g, t0);
  }
  SkeinGens gen_set = make_skein_gens(
      c, std::move(gens), std::vector<std::string>(j.size(), "file"));
  auto cert = skein_membership(target, gen_set, opt.bound_p, opt.bound_q);
  if (!cert) {
    std::cout << "not found at bound (" << opt.bound_p << "," << opt.bound_q
              << ")\n";
    return kExitNotFound;
  }
  const bool ok = replay(*cert, gen_set);
  std::cout << to_json(*cert).dump() << "\n";
  return ok ? 0 : kExitVerifyFailed;
}

int run_aideal(const std::string& action, const Options& opt) {
  const Chirality c = chir_of(opt.chirality);
  if (action == "gens") {
    PlaneGens g = aideal_gens(c);
    if (mode_of(opt.mode) == FormatMode::Json) {
      Json arr = Json::array();
      for (const PlanePoly& e : g.elements) arr.push_back(to_json(e));
      std::cout << arr.dump() << "\n";
    } else {
      for (size_t i = 0; i < g.elements.size(); ++i)
        std::cout << "gen " << i + 1 << ": " << format(g.elements[i].poly())
                  << "\n";
    }
    return 0;
  }
  // verify
  auto unit = verify_aideal_gen1(c);
  std::cout << "clear_to_plane(embed(tau)) = " << rat_to_string(unit.first)
            << " * t^" << unit.second << " * gen1\n";
  return 0;
}

int run_classical(const Options& opt) {
  std::cout << classical_common_factor(chir_of(opt.chirality)).str() << "\n";
  return 0;
}

int run_verify_all() {
  auto results = acceptance_checks();
  int failed = 0;
  Json summary = Json::array();
  for (const CheckResult& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.name;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
    if (!r.pass) ++failed;
    summary.push_back(Json{{"criterion", r.name}, {"pass", r.pass}});
  }
  std::cout << Json{{"criteria", summary},
                    {"passed", static_cast<int>(results.size()) - failed},
                    {"failed", failed}}
                   .dump()
            << "\n";
  return failed == 0 ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "skeinlab: exact computations in the Kauffman bracket skein algebra of "
      "the torus and the skein modules of the trefoil complements"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_chir = true) {
    cmd->add_option("--format", opt.mode, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_chir)
      cmd->add_option("--chirality", opt.chirality, "left or right")
          ->check(CLI::IsMember({"left", "right"}));
  };

  CLI::App* mul_cmd = app.add_subcommand("mul", "evaluate an expression in its family");
  mul_cmd->add_option("--expr", opt.expr, "expression")->required();
  mul_cmd->add_option("--t-value", opt.t_value, "specialize t to a rational");
  add_common(mul_cmd, false);

  CLI::App* pi_cmd = app.add_subcommand("pi", "image of a boundary skein in the module");
  pi_cmd->add_option("--expr", opt.expr, "torus skein expression")->required();
  pi_cmd->add_option("--t-value", opt.t_value, "specialize t to a rational");
  add_common(pi_cmd);

  CLI::App* act_cmd = app.add_subcommand("act", "action of a boundary skein on a module element");
  act_cmd->add_option("--expr", opt.expr, "torus skein expression")->required();
  act_cmd->add_option("--on", opt.on, "module element acted on (default y)");
  act_cmd->add_option("--t-value", opt.t_value, "specialize t to a rational");
  add_common(act_cmd);

  CLI::App* kernel_cmd = app.add_subcommand("kernel", "truncated kernel of pi");
  kernel_cmd->add_option("--pmax", opt.pmax, "maximum p")->required();
  kernel_cmd->add_option("--qmin", opt.qmin, "minimum q")->required();
  kernel_cmd->add_option("--qmax", opt.qmax, "maximum q")->required();
  kernel_cmd->add_option("--t-value", opt.t_value, "solve with t specialized to a rational");
  add_common(kernel_cmd);

  CLI::App* member_cmd = app.add_subcommand("member", "left-ideal membership certificate");
  member_cmd->add_option("--target", opt.target, "target skein expression")->required();
  member_cmd->add_option("--gens-file", opt.gens_file, "JSON array of generators")->required();
  member_cmd->add_option("--bound-p", opt.bound_p, "multiplier p bound")->required();
  member_cmd->add_option("--bound-q", opt.bound_q, "multiplier q bound")->required();
  member_cmd->add_option("--t-value", opt.t_value, "rejected at eighth roots of unity");
  add_common(member_cmd);

  CLI::App* aideal_cmd = app.add_subcommand("aideal", "noncommutative A-ideal generators");
  std::string aideal_action;
  aideal_cmd->add_option("action", aideal_action, "gens or verify")
      ->required()
      ->check(CLI::IsMember({"gens", "verify"}));
  add_common(aideal_cmd);

  CLI::App* classical_cmd = app.add_subcommand(
      "classical", "classical A-polynomial common factor at t = -1");
  add_common(classical_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify-all", "run the verification suite");
  verify_cmd->add_option("--chirality", opt.chirality,
                         "accepted for compatibility; the suite covers both");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(mul_cmd)) return run_mul(opt);
    if (app.got_subcommand(pi_cmd)) return run_pi(opt);
    if (app.got_subcommand(act_cmd)) return run_act(opt);
    if (app.got_subcommand(kernel_cmd)) return run_kernel(opt);
    if (app.got_subcommand(member_cmd)) return run_member(opt);
    if (app.got_subcommand(aideal_cmd)) return run_aideal(aideal_action, opt);
    if (app.got_subcommand(classical_cmd)) return run_classical(opt);
    if (app.got_subcommand(verify_cmd)) return run_verify_all();
  } catch (const ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParseError;
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBadSpecialization;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitVerifyFailed;
  }
  return 0;
}

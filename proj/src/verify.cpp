#include "skeinlab/verify.hpp"

#include <cstdint>
#include <sstream>

#include "skeinlab/format.hpp"
#include "skeinlab/ideal.hpp"
#include "skeinlab/json_io.hpp"

namespace skeinlab {

namespace {

Laurent tp(int k) { return Laurent::t_pow(k); }

const char* side(Chirality c) { return c == Chirality::Left ? "left" : "right"; }

struct Rng {
  uint64_t state;
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int in(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

TorusSkein random_skein(Rng& rng, int pmax, int qmax, int terms) {
  TorusSkein r;
  const int n = rng.in(1, terms);
  for (int i = 0; i < n; ++i)
    r.add_term(rng.in(-pmax, pmax), rng.in(-qmax, qmax),
               Laurent::t_pow(rng.in(-4, 4), Rat(rng.in(-3, 3))));
  return r;
}

CheckResult kernel_check() {
  CheckResult r{"1 kernel of pi: tau and the peripheral ideal generators", true, ""};
  std::ostringstream detail;
  for (auto c : {Chirality::Left, Chirality::Right}) {
    SkeinGens g = peripheral_ideal_gens(c);
    for (size_t i = 0; i < g.elements.size(); ++i) {
      if (g.in_kernel[i]) continue;
      r.pass = false;
      detail << "pi(" << side(c) << " generator " << i + 1 << ") != 0; ";
    }
  }
  if (!r.pass)
    detail << "residual of generator 3 equals -2 t^-5 pi((1,-7)); the "
              "sign-flipped +t^-5 (1,-7) variant is in the kernel";
  r.detail = detail.str();
  if (r.pass) r.detail = "6/6 generators vanish under pi";
  return r;
}

CheckResult closed_form_check() {
  CheckResult r{"2 closed forms match the recursive evaluator", true, ""};
  int total = 0, bad = 0;
  for (auto c : {Chirality::Left, Chirality::Right})
    for (int p = 1; p <= 4; ++p)
      for (int q = -8; q <= 8; ++q) {
        TorusSkein u = TorusSkein::curve(p, q);
        ++total;
        if (!(pi_closed(p, q, c) == pi(u, c))) ++bad;
        ++total;
        if (!(act_y_closed(p, q, c) == act(u, ModuleElt::y(), c))) ++bad;
      }
  r.pass = bad == 0;
  std::ostringstream detail;
  detail << (total - bad) << "/" << total
         << " rows agree (p <= 4, |q| <= 8, both chiralities)";
  r.detail = detail.str();
  return r;
}

CheckResult y_power_check() {
  CheckResult r{"3 y^2 and y^3 against the stated closed forms", true, ""};
  ModuleEltR y2 = y_power(2, Chirality::Left);
  ModuleEltR y3 = y_power(3, Chirality::Left);

  ModuleEltR y2_expect;  // -t^2 S2 y - t^4 S2 + S0
  y2_expect.add_sy(2, RatFunc(-tp(2)));
  y2_expect.add_s(2, RatFunc(-tp(4)));
  y2_expect.add_s(0, RatFunc(1));

  ModuleEltR y3_expect;  // t^4 S4 y + 2 S0 y + t^6 S4 + t^10 S0
  y3_expect.add_sy(4, RatFunc(tp(4)));
  y3_expect.add_sy(0, RatFunc(Laurent(2)));
  y3_expect.add_s(4, RatFunc(tp(6)));
  y3_expect.add_s(0, RatFunc(tp(10)));

  const bool ok2 = y2 == y2_expect, ok3 = y3 == y3_expect;
  r.pass = ok2 && ok3;
  if (r.pass) {
    r.detail = "both powers reproduce the stated values";
  } else {
    r.detail =
        "the peripheral-element action forces different values: the computed "
        "y^2 has S4 and S0y terms and denominators t^4 + 1, which the stated "
        "value lacks (the forced values are frozen in the unit tests)";
  }
  return r;
}

CheckResult module_axiom_check() {
  CheckResult r{"4 module axiom on 200 seeded random pairs", true, ""};
  Rng rng{0xA4};
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    TorusSkein u = random_skein(rng, 3, 4, 2);
    TorusSkein w = random_skein(rng, 3, 4, 2);
    ModuleElt v = rng.in(0, 1) ? ModuleElt::one() : ModuleElt::y();
    Chirality c = rng.in(0, 1) ? Chirality::Left : Chirality::Right;
    if (!(act(mul(u, w), v, c) == act(u, act(w, v, c), c))) ++bad;
  }
  r.pass = bad == 0;
  r.detail = std::to_string(200 - bad) + "/200 pairs satisfy (u*w).v = u.(w.v)";
  return r;
}

CheckResult embedding_check() {
  CheckResult r{"5 embedding homomorphism on 200 seeded random pairs", true, ""};
  Rng rng{0xE5};
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    TorusSkein a = random_skein(rng, 4, 4, 2);
    TorusSkein b = random_skein(rng, 4, 4, 2);
    if (!(embed(mul(a, b)) == qt_mul(embed(a), embed(b)))) ++bad;
  }
  r.pass = bad == 0;
  r.detail = std::to_string(200 - bad) + "/200 pairs satisfy embed(a*b) = embed(a) embed(b)";
  return r;
}

CheckResult aideal_gen1_check() {
  CheckResult r{"6 first A-ideal generator up to a unit", true, ""};
  std::ostringstream detail;
  try {
    auto left = verify_aideal_gen1(Chirality::Left);
    auto right = verify_aideal_gen1(Chirality::Right);
    detail << "left unit (" << rat_to_string(left.first) << ", t^"
           << left.second << "), right unit (" << rat_to_string(right.first)
           << ", t^" << right.second << ")";
    r.pass = (left.first == 1 || left.first == -1) &&
             (right.first == 1 || right.first == -1);
  } catch (const std::exception& ex) {
    r.pass = false;
    detail << ex.what();
  }
  r.detail = detail.str();
  return r;
}

CheckResult aideal_gens23_check() {
  CheckResult r{"7 A-ideal generators 2 and 3 via membership certificates", true, ""};
  const std::vector<std::pair<int, int>> schedule{{0, 6}, {1, 6},  {1, 7}, {2, 8},
                                                  {3, 10}, {4, 12}, {6, 14}};
  std::ostringstream detail;
  for (auto c : {Chirality::Left, Chirality::Right}) {
    PlaneGens cleared;
    cleared.chirality = c;
    for (const TorusSkein& g : peripheral_ideal_gens(c).elements) {
      cleared.elements.push_back(clear_to_plane(embed(g)).plane);
      cleared.provenance.push_back("cleared image of a peripheral generator");
    }
    PlaneGens agens = aideal_gens(c);
    for (int i : {1, 2}) {
      bool found = false;
      for (const auto& [bl, bm] : schedule) {
        auto cert = plane_membership(agens.elements[i], cleared, bl, bm, Ambient::Trig);
        if (cert) {
          found = true;
          const bool ok = replay(*cert, cleared);
          detail << side(c) << " gen " << i + 1 << ": certificate at bound ("
                 << bl << "," << bm << "), " << cert->combination.size()
                 << " entries, replay " << (ok ? "exact" : "FAILED") << "; ";
          if (!ok) r.pass = false;
          break;
        }
      }
      if (!found) {
        r.pass = false;
        detail << side(c) << " gen " << i + 1
               << ": not found at any bound up to (6,14); ";
      }
    }
  }
  r.detail = detail.str();
  return r;
}

CheckResult lemma8_check() {
  CheckResult r{"8 truncated kernel generated by tau; phi family", true, ""};
  std::ostringstream detail;
  SkeinGens tau_only =
      make_skein_gens(Chirality::Left, {tau(Chirality::Left)}, {"tau"});

  auto kb = kernel_basis(1, -10, 4, Chirality::Left);
  int certified = 0;
  for (const TorusSkein& v : kb) {
    auto cert = skein_membership(v, tau_only, 0, 8);
    if (cert && replay(*cert, tau_only)) ++certified;
  }
  if (certified != static_cast<int>(kb.size())) r.pass = false;
  detail << certified << "/" << kb.size() << " kernel vectors certified over "
         << "{1,(0,1),...,(0,8)}; ";

  bool rec = true;
  for (int q = -9; q <= 9; ++q)
    rec &= mul(TorusSkein::curve(0, 1), phi(q)) ==
           tp(-1) * phi(q + 1) + tp(1) * phi(q - 1);
  if (!rec) r.pass = false;
  detail << "phi recursion " << (rec ? "holds" : "FAILS") << " on [-9,9]; ";

  // scalar proportionality of phi(-5) to tau
  TorusSkein p5 = phi(-5);
  TorusSkein t = tau(Chirality::Left);
  bool proportional = false;
  if (!t.terms.empty()) {
    const auto& [l0, c0] = *t.terms.begin();
    auto it = p5.terms.find(l0);
    if (it != p5.terms.end()) {
      RatFunc ratio(it->second, c0);
      proportional = lift(p5) == ratio * lift(t);
    }
  }
  if (!proportional) {
    r.pass = false;
    detail << "phi(-5) is not a scalar multiple of tau (it equals "
              "(t^4 - 1 - T((0,2))) * tau, a polynomial multiple)";
  } else {
    detail << "phi(-5) proportional to tau";
  }
  r.detail = detail.str();
  return r;
}

CheckResult t_minus1_check() {
  CheckResult r{"9 t = -1: kernel generators and the classical recipe", true, ""};
  std::ostringstream detail;
  for (auto c : {Chirality::Left, Chirality::Right}) {
    TMinus1Gens g = t_minus1_gens(c);
    for (size_t i = 0; i < g.skein.elements.size(); ++i) {
      if (g.skein.in_kernel[i]) continue;
      r.pass = false;
      detail << side(c) << " generator " << i + 1
             << " misses the kernel at t = -1; ";
    }
    for (int i = 0; i < 2; ++i) {
      CommPoly comm = CommPoly::from({{0, 0, 1}});
      for (const CommPoly& f : g.factors[i]) comm = comm * f;
      QTorusPoly expect;
      for (const auto& [k, coeff] : comm.terms)
        expect.add_term(k.first, k.second, Laurent(coeff));
      if (!(g.plane.elements[i].poly() == expect)) {
        r.pass = false;
        detail << side(c) << " A-ideal generator " << i + 1
               << " expansion inconsistent; ";
      }
    }
  }
  if (!r.pass)
    detail << "(the stated first generator carries a spurious constant -2: "
              "its pi image at t = -1 is -2 S0; dropping the constant gives "
              "the peripheral y-element at t = -1, which is in the kernel) ";

  CommPoly left = classical_common_factor(Chirality::Left);
  CommPoly expect_left = (CommPoly::from({{1, 0, 1}, {0, 0, -1}}) *
                          CommPoly::from({{1, 0, 1}, {0, 6, 1}}))
                             .normalized();
  CommPoly right = classical_common_factor(Chirality::Right);
  CommPoly expect_right = (CommPoly::from({{1, 0, 1}, {0, 0, -1}}) *
                           CommPoly::from({{1, 6, 1}, {0, 0, 1}}))
                              .normalized();
  const bool cl = left == expect_left, cr = right == expect_right;
  if (!cl || !cr) r.pass = false;
  detail << "classical factors: left " << left.str() << (cl ? " (ok)" : " (WRONG)")
         << ", right " << right.str() << (cr ? " (ok)" : " (WRONG)");
  r.detail = detail.str();
  return r;
}

QTorusPoly random_qtorus(Rng& rng) {
  QTorusPoly r;
  for (int k = rng.in(1, 4); k > 0; --k)
    r.add_term(rng.in(-4, 4), rng.in(-4, 4),
               Laurent::t_pow(rng.in(-5, 5), Rat(rng.in(-9, 9), rng.in(1, 3))));
  return r;
}

ModuleElt random_module(Rng& rng) {
  ModuleElt r;
  for (int k = rng.in(1, 4); k > 0; --k) {
    Laurent c = Laurent::t_pow(rng.in(-5, 5), Rat(rng.in(-9, 9)));
    if (rng.in(0, 1))
      r.add_s(rng.in(0, 9), c);
    else
      r.add_sy(rng.in(0, 9), c);
  }
  return r;
}

CheckResult parser_check() {
  CheckResult r{"10 format/parse round-trip", true, ""};
  std::ostringstream detail;
  Rng rng{0x10};
  int bad = 0;
  for (int i = 0; i < 500; ++i) {
    TorusSkein s = random_skein(rng, 4, 6, 4);
    if (!(lower_skein(parse(format(s))) == s)) ++bad;
    QTorusPoly qp = random_qtorus(rng);
    if (!(lower_qtorus(parse(format(qp))) == qp)) ++bad;
    ModuleElt me = random_module(rng);
    if (!(lower_module(parse(format(me))) == me)) ++bad;
  }
  if (bad != 0) r.pass = false;
  detail << (1500 - bad) << "/1500 random round-trips; ";

  const std::vector<std::pair<std::string, TorusSkein>> transcriptions = {
      {"T(1,-5) - t^-8*T(1,-1) + t^-3*T(0,5) - t*T(0,1)", tau(Chirality::Left)},
      {"T(1,5) - t^8*T(1,1) + t^3*T(0,5) - t^-1*T(0,1)", tau(Chirality::Right)},
      {"T(2,-6) - (t^6+t^-6)*T(1,0) + (t^4+t^-4)*T(1,-6) + T(0,6) - 2*(t^4+t^-4)",
       peripheral_ideal_gens(Chirality::Left).elements[1]},
      {"T(2,-7) - t^-5*T(1,-7) + (t^-5-t^-1)*T(1,-3) - t^5*T(1,-1) + "
       "(t^2-t^-2)*T(0,3) - t^-6*T(0,1)",
       peripheral_ideal_gens(Chirality::Left).elements[2]},
      {"T(2,6) - (t^6+t^-6)*T(1,0) + (t^4+t^-4)*T(1,6) + T(0,6) - 2*(t^4+t^-4)",
       peripheral_ideal_gens(Chirality::Right).elements[1]},
      {"T(2,7) - t^5*T(1,7) + (t^5-t)*T(1,3) - t^-5*T(1,1) - "
       "(t^2-t^-2)*T(0,3) - t^6*T(0,1)",
       peripheral_ideal_gens(Chirality::Right).elements[2]},
  };
  int fixed = 0;
  for (const auto& [text, expect] : transcriptions)
    if (lower_skein(parse(text)) == expect) ++fixed;
  if (fixed != static_cast<int>(transcriptions.size())) r.pass = false;
  detail << fixed << "/" << transcriptions.size()
         << " transcribed generators parse to their constructed values";
  r.detail = detail.str();
  return r;
}

}  // namespace

std::vector<CheckResult> acceptance_checks() {
  return {kernel_check(),      closed_form_check(), y_power_check(),
          module_axiom_check(), embedding_check(),  aideal_gen1_check(),
          aideal_gens23_check(), lemma8_check(),     t_minus1_check(),
          parser_check()};
}

}  // namespace skeinlab

#include "doctest.h"

#include "skeinlab/format.hpp"
#include "skeinlab/ideal.hpp"
#include "skeinlab/json_io.hpp"
#include "test_support.hpp"

using namespace skeinlab;
using skeinlab::testing::Rng;
using skeinlab::testing::random_skein;

TEST_CASE("parse tau") {
  TorusSkein t = lower_skein(parse("T(1,-5) - t^-8*T(1,-1) + t^-3*T(0,5) - t*T(0,1)"));
  CHECK(t == tau(Chirality::Left));
}

TEST_CASE("parse torus relation") {
  QTorusPoly z = lower_qtorus(parse("l*m - t^2*m*l"));
  CHECK(z.is_zero());
}

TEST_CASE("type mixing is an error") {
  CHECK_THROWS_AS(lower(parse("T(1,0) + l")), ParseError);
  CHECK_THROWS_AS(lower(parse("x*l")), ParseError);
  CHECK_THROWS_AS(lower(parse("y*y")), ParseError);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse("T(1,-5) + ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 11);
  }
  CHECK_THROWS_AS(parse("Q(1,2)"), ParseError);
  CHECK_THROWS_AS(parse("T(1 2)"), ParseError);
  CHECK_THROWS_AS(parse("t^"), ParseError);
}

TEST_CASE("module expressions") {
  ModuleElt xy = lower_module(parse("x*y"));
  ModuleElt expect;
  expect.add_sy(1, Laurent(1));
  CHECK(xy == expect);
  CHECK(lower_module(parse("y*x")) == xy);  // disjoint curves commute
  CHECK(lower_module(parse("S(1)*y")) == xy);

  // S(2)*S(3) = S(5) + S(3) + S(1)
  ModuleElt prod = lower_module(parse("S(2)*S(3)"));
  ModuleElt exp2;
  exp2.add_s(5, Laurent(1));
  exp2.add_s(3, Laurent(1));
  exp2.add_s(1, Laurent(1));
  CHECK(prod == exp2);
}

TEST_CASE("scalar expressions") {
  CHECK(lower_scalar(parse("t^4 - t^-4")) ==
        Laurent::t_pow(4) - Laurent::t_pow(-4));
  CHECK(lower_scalar(parse("1/2*t^3")) == Laurent::t_pow(3, Rat(1, 2)));
  CHECK(lower_scalar(parse("-5/3")) == Laurent(Rat(-5, 3)));
}

TEST_CASE("format examples") {
  // pi((1,0)) renders with the s part first, descending indices
  ModuleElt img = pi(TorusSkein::curve(1, 0), Chirality::Left);
  CHECK(format(img) == "t^6*S(6) - t^2*S(0) + t^4*S(4)*y - S(0)*y");

  CHECK(format(tau(Chirality::Left)) ==
        "-t*T(0,1) + t^-3*T(0,5) + T(1,-5) - t^-8*T(1,-1)");
}

TEST_CASE("format/parse round-trips") {
  Rng rng(0x77);
  for (int i = 0; i < 200; ++i) {
    TorusSkein s = random_skein(rng, 4, 6, 4);
    CHECK(lower_skein(parse(format(s))) == s);
  }
  for (int i = 0; i < 200; ++i) {
    QTorusPoly p;
    for (int k = rng.in(1, 4); k > 0; --k)
      p.add_term(rng.in(-4, 4), rng.in(-4, 4),
                 Laurent::t_pow(rng.in(-5, 5), Rat(rng.in(-9, 9), rng.in(1, 4))));
    CHECK(lower_qtorus(parse(format(p))) == p);
  }
  for (int i = 0; i < 200; ++i) {
    ModuleElt v;
    for (int k = rng.in(1, 4); k > 0; --k) {
      Laurent c = Laurent::t_pow(rng.in(-5, 5), Rat(rng.in(-9, 9)));
      if (rng.in(0, 1))
        v.add_s(rng.in(0, 9), c);
      else
        v.add_sy(rng.in(0, 9), c);
    }
    CHECK(lower_module(parse(format(v))) == v);
  }
}

TEST_CASE("polyx json round-trip") {
  PolyX p;
  p.basis = Basis::S;
  p.add(0, Laurent(1));
  p.add(4, Laurent::t_pow(-2, Rat(3, 7)));
  CHECK(polyx_from_json(Json::parse(to_json(p).dump())) == p);
}

TEST_CASE("json round-trips") {
  Rng rng(0x78);
  for (int i = 0; i < 50; ++i) {
    TorusSkein s = random_skein(rng, 4, 6, 4);
    CHECK(torus_skein_from_json(Json::parse(format(s, FormatMode::Json))) == s);
  }
  // coefficient schema: exponent -> rational string
  Laurent c;
  c.add_term(-8, Rat(-1));
  c.add_term(0, Rat(2));
  CHECK(to_json(c).dump() == "{\"-8\":\"-1\",\"0\":\"2\"}");
  CHECK(laurent_from_json(Json::parse("{\"-8\":\"-1\",\"0\":\"2\"}")) == c);

  // certificates replay after a JSON round-trip of their coefficients
  SkeinGens tau_only =
      make_skein_gens(Chirality::Left, {tau(Chirality::Left)}, {"tau"});
  auto cert = skein_membership(phi(-6), tau_only, 0, 3);
  REQUIRE(cert.has_value());
  Json j = to_json(*cert);
  CHECK(j.contains("combination"));
  for (const Json& e : j.at("combination")) {
    RatFunc coeff = ratfunc_from_json(e.at("coeff"));
    CHECK(!coeff.is_zero());
  }
}

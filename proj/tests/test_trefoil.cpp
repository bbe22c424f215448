#include "doctest.h"

#include "skeinlab/trefoil.hpp"
#include "test_support.hpp"

using namespace skeinlab;
using skeinlab::testing::Rng;
using skeinlab::testing::random_skein;

static Laurent tp(int k) { return Laurent::t_pow(k); }

static ModuleElt elt_s(std::initializer_list<std::pair<int, Laurent>> s,
                       std::initializer_list<std::pair<int, Laurent>> sy) {
  ModuleElt r;
  for (auto& [n, c] : s) r.add_s(n, c);
  for (auto& [n, c] : sy) r.add_sy(n, c);
  return r;
}

TEST_CASE("pi on the meridian family") {
  CHECK(pi(TorusSkein::curve(0, 1), Chirality::Left) ==
        elt_s({{1, Laurent(1)}}, {}));
  // T_2 = S_2 - S_0
  CHECK(pi(TorusSkein::curve(0, 2), Chirality::Left) ==
        elt_s({{2, Laurent(1)}, {0, Laurent(-1)}}, {}));
}

TEST_CASE("pi on (1,q) rows") {
  CHECK(pi(TorusSkein::curve(1, 0), Chirality::Left) ==
        elt_s({{6, tp(6)}, {0, -tp(2)}}, {{4, tp(4)}, {0, -Laurent(1)}}));
  CHECK(pi(TorusSkein::curve(1, -1), Chirality::Left) ==
        elt_s({{5, tp(5)}}, {{3, tp(3)}}));
}

TEST_CASE("action rows") {
  CHECK(act(TorusSkein::curve(1, 0), ModuleElt::y(), Chirality::Left) ==
        elt_s({{0, -Laurent(1)}, {6, -tp(8)}}, {{0, -tp(-2)}, {4, -tp(6)}}));
  CHECK(act(TorusSkein::curve(0, 1), ModuleElt::y(), Chirality::Left) ==
        elt_s({}, {{1, Laurent(1)}}));
  // (1,-5).y with folded S indices
  CHECK(act(TorusSkein::curve(1, -5), ModuleElt::y(), Chirality::Left) ==
        elt_s({{5, -tp(-5)}, {1, -tp(3)}}, {{5, -tp(-7)}}));
}

TEST_CASE("pi of tau vanishes (both chiralities)") {
  TorusSkein tau;
  tau.add_term(1, -5, tp(0));
  tau.add_term(1, -1, -tp(-8));
  tau.add_term(0, 5, tp(-3));
  tau.add_term(0, 1, -tp(1));
  CHECK(pi(tau, Chirality::Left).is_zero());
  CHECK(pi(mirror(tau), Chirality::Right).is_zero());
}

TEST_CASE("module axiom on random pairs") {
  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    TorusSkein u = random_skein(rng, 3, 4, 2);
    TorusSkein w = random_skein(rng, 3, 4, 2);
    for (auto c : {Chirality::Left, Chirality::Right}) {
      ModuleElt v = rng.in(0, 1) ? ModuleElt::one() : ModuleElt::y();
      CHECK(act(mul(u, w), v, c) == act(u, act(w, v, c), c));
    }
  }
}

TEST_CASE("mirror equivariance of pi") {
  Rng rng(52);
  for (int i = 0; i < 50; ++i) {
    TorusSkein u = random_skein(rng, 2, 4, 2);
    CHECK(pi(u, Chirality::Right) == mirror(pi(mirror(u), Chirality::Left)));
  }
}

TEST_CASE("(1,q) rows satisfy the meridian recursion through pi") {
  for (int q = -6; q <= 6; ++q) {
    TorusSkein prod =
        mul(TorusSkein::curve(1, q), TorusSkein::curve(0, 1));
    ModuleElt lhs = pi(prod, Chirality::Left);
    ModuleElt rhs = tp(1) * pi(TorusSkein::curve(1, q + 1), Chirality::Left) +
                    tp(-1) * pi(TorusSkein::curve(1, q - 1), Chirality::Left);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("closed forms match the recursive evaluator") {
  for (auto c : {Chirality::Left, Chirality::Right})
    for (int p = 1; p <= 4; ++p)
      for (int q = -8; q <= 8; ++q) {
        TorusSkein u = TorusSkein::curve(p, q);
        CHECK(pi_closed(p, q, c) == pi(u, c));
        CHECK(act_y_closed(p, q, c) == act(u, ModuleElt::y(), c));
      }
}

TEST_CASE("closed form specializes to the (1,q) rows") {
  CHECK(pi_closed(1, 0, Chirality::Left) ==
        pi(TorusSkein::curve(1, 0), Chirality::Left));
  for (int q = -8; q <= 8; ++q)
    CHECK(act_y_closed(1, q, Chirality::Left) ==
          act(TorusSkein::curve(1, q), ModuleElt::y(), Chirality::Left));
}

TEST_CASE("peripheral element maps to (t^4 - t^-4) y") {
  for (auto c : {Chirality::Left, Chirality::Right}) {
    ModuleElt img = pi(peripheral_y(c), c);
    ModuleElt expect;
    expect.add_sy(0, y_image_factor(c));
    CHECK(img == expect);
    // the factor vanishes at eighth roots of unity
    bool gone = true;
    for (auto& [n, coeff] : img.sy) gone &= (coeff.eval(Rat(-1)) == 0);
    CHECK(gone);
  }
}

// The reference closed forms y^2 = -t^2 S2 y - t^4 S2 + S0 and
// y^3 = t^4 S4 y + 2 S0 y + t^6 S4 + t^10 S0 are not reachable from the
// (1,q) rows and the peripheral element: the module structure they generate
// forces the values below. The verification suite tests the reference
// values and reports the discrepancy; these tests freeze the forced ones.
TEST_CASE("y powers forced by the module structure") {
  ModuleEltR y1 = y_power(1, Chirality::Left);
  CHECK(y1 == lift(ModuleElt::y()));

  ModuleEltR y2 = y_power(2, Chirality::Left);
  RatFunc den(Laurent(1), tp(4) + Laurent(1));
  ModuleEltR expect2;
  expect2.add_s(2, RatFunc(-(tp(8) + tp(4) + Laurent(1)), tp(4) + Laurent(1)));
  expect2.add_s(4, RatFunc(tp(4), tp(4) + Laurent(1)));
  expect2.add_sy(0, RatFunc(-tp(2)));
  expect2.add_sy(2, RatFunc(-(tp(6) + tp(2) + tp(-2)), tp(4) + Laurent(1)));
  expect2.add_sy(4, RatFunc(tp(2), tp(4) + Laurent(1)));
  CHECK(y2 == expect2);

  // mirror consistency of the y-power computation
  ModuleEltR y2r = y_power(2, Chirality::Right);
  CHECK(y2r == mirror(y2));

  // y^3 via the same route replays exactly against pi(u*u*u)/f^3
  TorusSkein u = peripheral_y(Chirality::Left);
  RatFunc f{y_image_factor(Chirality::Left)};
  ModuleEltR direct =
      (RatFunc(1) / (f * f * f)) * lift(pi(mul(mul(u, u), u), Chirality::Left));
  CHECK(y_power(3, Chirality::Left) == direct);
}

// f (1,q).y = pi((1,q) * u) with u the peripheral element and f its y-image
// factor: the action rows and the pi rows are tied together through the
// module axiom. This pins the whole y-action given the degree-one pi rows.
TEST_CASE("peripherality fixed-point identity") {
  for (auto c : {Chirality::Left, Chirality::Right}) {
    const TorusSkein u = peripheral_y(c);
    const Laurent f = y_image_factor(c);
    for (int q = -6; q <= 6; ++q) {
      TorusSkein curve = TorusSkein::curve(1, q);
      ModuleElt lhs = f * act(curve, ModuleElt::y(), c);
      ModuleElt rhs = pi(mul(curve, u), c);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("all outputs have nonnegative S indices") {
  Rng rng(53);
  for (int i = 0; i < 50; ++i) {
    TorusSkein u = random_skein(rng, 3, 6, 3);
    ModuleElt v = pi(u, Chirality::Left);
    for (auto& [n, c] : v.s) CHECK(n >= 0);
    for (auto& [n, c] : v.sy) CHECK(n >= 0);
  }
}

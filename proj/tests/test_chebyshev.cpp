#include "doctest.h"

#include "skeinlab/chebyshev.hpp"
#include "test_support.hpp"

using namespace skeinlab;
using skeinlab::testing::Rng;

static PolyX power_of(std::initializer_list<std::pair<int, long>> cs) {
  PolyX p;
  p.basis = Basis::Power;
  for (auto& [d, c] : cs) p.add(d, Laurent(c));
  return p;
}

TEST_CASE("t_poly and s_poly base values") {
  CHECK(t_poly(0) == power_of({{0, 2}}));
  CHECK(t_poly(2) == power_of({{2, 1}, {0, -2}}));
  CHECK(t_poly(-3) == t_poly(3));
  CHECK(t_poly(3) == power_of({{3, 1}, {1, -3}}));

  CHECK(s_poly(2) == power_of({{2, 1}, {0, -1}}));
  CHECK(s_poly(-1).is_zero());
  CHECK(s_poly(-4) == power_of({{2, -1}, {0, 1}}));
}

TEST_CASE("recurrence holds for both families") {
  for (int n = -20; n <= 20; ++n) {
    PolyX x = power_of({{1, 1}});
    PolyX lhs_t = t_poly(n + 1);
    PolyX rhs_t = poly_mul(x, t_poly(n));
    for (auto& [k, c] : t_poly(n - 1).coeffs) rhs_t.add(k, -c);
    CHECK(lhs_t == rhs_t);

    PolyX lhs_s = s_poly(n + 1);
    PolyX rhs_s = poly_mul(x, s_poly(n));
    for (auto& [k, c] : s_poly(n - 1).coeffs) rhs_s.add(k, -c);
    CHECK(lhs_s == rhs_s);
  }
}

TEST_CASE("convert examples") {
  // x^2 -> S2 + S0
  PolyX x2 = power_of({{2, 1}});
  PolyX s = convert(x2, Basis::S);
  PolyX expect_s;
  expect_s.basis = Basis::S;
  expect_s.add(2, Laurent(1));
  expect_s.add(0, Laurent(1));
  CHECK(s == expect_s);

  // T_5 (T basis) -> S5 - S3
  PolyX t5;
  t5.basis = Basis::T;
  t5.add(5, Laurent(1));
  PolyX t5s = convert(t5, Basis::S);
  PolyX expect_t5s;
  expect_t5s.basis = Basis::S;
  expect_t5s.add(5, Laurent(1));
  expect_t5s.add(3, Laurent(-1));
  CHECK(t5s == expect_t5s);

  // S_4 (S basis) -> T4 + T2 + 1
  PolyX s4;
  s4.basis = Basis::S;
  s4.add(4, Laurent(1));
  PolyX s4t = convert(s4, Basis::T);
  PolyX expect_s4t;
  expect_s4t.basis = Basis::T;
  expect_s4t.add(4, Laurent(1));
  expect_s4t.add(2, Laurent(1));
  expect_s4t.add(0, Laurent(1));
  CHECK(s4t == expect_s4t);
}

TEST_CASE("convert round-trips on random polynomials") {
  Rng rng(21);
  for (int iter = 0; iter < 50; ++iter) {
    PolyX p;
    p.basis = Basis::Power;
    const int deg = rng.in(0, 12);
    for (int d = 0; d <= deg; ++d)
      if (rng.in(0, 1)) p.add(d, Laurent::t_pow(rng.in(-2, 2), Rat(rng.in(-4, 4))));
    CHECK(convert(convert(p, Basis::S), Basis::Power) == p);
    CHECK(convert(convert(p, Basis::T), Basis::Power) == p);
    CHECK(convert(convert(convert(p, Basis::S), Basis::T), Basis::Power) == p);
  }
}

TEST_CASE("s_index_normalize") {
  CHECK(s_index_normalize(-2, Laurent(1)) ==
        std::vector<std::pair<int, Laurent>>{{0, Laurent(-1)}});
  CHECK(s_index_normalize(-1, Laurent::t_pow(5)).empty());
  CHECK(s_index_normalize(3, Laurent(1)) ==
        std::vector<std::pair<int, Laurent>>{{3, Laurent(1)}});
}

TEST_CASE("product rule x S_n = S_{n+1} + S_{n-1}") {
  PolyX x;
  x.basis = Basis::Power;
  x.add(1, Laurent(1));
  for (int n = -10; n <= 10; ++n) {
    PolyX lhs = poly_mul(x, s_poly(n));
    PolyX rhs = s_poly(n + 1);
    for (auto& [k, c] : s_poly(n - 1).coeffs) rhs.add(k, c);
    CHECK(lhs == rhs);
  }
}

#include "skeinlab/torus.hpp"

#include <numeric>

namespace skeinlab {

CanonLabel canonicalize(int p, int q) {
  CanonLabel r;
  if (p == 0 && q == 0) {
    r.is_unit = true;
    r.scalar = 2;  // T_0 of any curve is the scalar 2
    return r;
  }
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  r.label = TorusLabel{p, q};
  return r;
}

TorusSkein jw_to_t(int p, int q) {
  TorusSkein r;
  if (p == 0) {
    // formal S index in the second coordinate
    if (q == -1) return r;
    if (q < -1) return -jw_to_t(0, -q - 2);
    if (q == 0) return TorusSkein::one();
    for (int k = q; k >= 1; k -= 2) r.add_term(0, k, Laurent(1));
    if (q % 2 == 0) r.add_unit(Laurent(1));
    return r;
  }
  if (p < 0) {
    p = -p;
    q = -q;
  }
  const int n = std::gcd(p, std::abs(q));
  const int pp = p / n, qq = q / n;
  for (int k = n; k >= 1; k -= 2) r.add_term(k * pp, k * qq, Laurent(1));
  if (n % 2 == 0) r.add_unit(Laurent(1));
  return r;
}

TorusSkein poly_of_meridian(const PolyX& p) {
  PolyX tb = convert(p, Basis::T);
  TorusSkein r;
  for (const auto& [k, c] : tb.coeffs) {
    if (k == 0)
      r.add_unit(c);
    else
      r.add_term(0, k, c);
  }
  return r;
}

TorusSkein specialize_t(const TorusSkein& a, const Rat& t0) {
  TorusSkein r;
  r.add_unit(Laurent(a.unit.eval(t0)));
  for (const auto& [l, c] : a.terms) r.add_term(l.p, l.q, Laurent(c.eval(t0)));
  return r;
}

}  // namespace skeinlab

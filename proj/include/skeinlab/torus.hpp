#pragma once

#include <compare>
#include <map>

#include "skeinlab/chebyshev.hpp"
#include "skeinlab/ratfunc.hpp"

namespace skeinlab {

// Canonical curve label on the torus: p > 0, or p = 0 and q > 0.
// (0,0) is never stored; it stands for twice the empty link.
struct TorusLabel {
  int p = 0, q = 0;
  auto operator<=>(const TorusLabel&) const = default;
};

struct CanonLabel {
  bool is_unit = false;  // true for (0,0): contributes scalar * empty link
  TorusLabel label;      // valid when !is_unit
  int scalar = 1;        // 1, or 2 in the (0,0) case
};

CanonLabel canonicalize(int p, int q);

// Element of the skein algebra of the thickened torus in the (p,q)_T basis,
// with coefficients in C (Laurent or RatFunc).
template <class C>
struct TorusSkeinT {
  C unit{};
  std::map<TorusLabel, C> terms;

  bool is_zero() const { return unit_zero() && terms.empty(); }
  bool unit_zero() const { return unit.is_zero(); }

  void add_unit(const C& c) {
    unit += c;
    if (unit.is_zero()) unit = C{};
  }

  // Accumulates c * (p,q)_T after canonicalization.
  void add_term(int p, int q, const C& c) {
    if (c.is_zero()) return;
    CanonLabel k = canonicalize(p, q);
    C v = k.scalar == 1 ? c : c * C(Laurent(k.scalar));
    if (k.is_unit) {
      add_unit(v);
      return;
    }
    auto [it, inserted] = terms.emplace(k.label, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  TorusSkeinT& operator+=(const TorusSkeinT& o) {
    add_unit(o.unit);
    for (const auto& [l, c] : o.terms) add_term(l.p, l.q, c);
    return *this;
  }
  TorusSkeinT& operator-=(const TorusSkeinT& o) {
    add_unit(-o.unit);
    for (const auto& [l, c] : o.terms) add_term(l.p, l.q, -c);
    return *this;
  }
  friend TorusSkeinT operator+(TorusSkeinT a, const TorusSkeinT& b) { return a += b; }
  friend TorusSkeinT operator-(TorusSkeinT a, const TorusSkeinT& b) { return a -= b; }
  TorusSkeinT operator-() const {
    TorusSkeinT r;
    r.unit = -unit;
    for (const auto& [l, c] : terms) r.terms[l] = -c;
    return r;
  }
  bool operator==(const TorusSkeinT& o) const {
    return unit == o.unit && terms == o.terms;
  }

  friend TorusSkeinT operator*(const C& s, const TorusSkeinT& a) {
    TorusSkeinT r;
    if (s.is_zero()) return r;
    r.add_unit(s * a.unit);
    for (const auto& [l, c] : a.terms) r.add_term(l.p, l.q, s * c);
    return r;
  }

  static TorusSkeinT one() {
    TorusSkeinT r;
    r.unit = C(Laurent(1));
    return r;
  }
  static TorusSkeinT curve(int p, int q) {
    TorusSkeinT r;
    r.add_term(p, q, C(Laurent(1)));
    return r;
  }
};

using TorusSkein = TorusSkeinT<Laurent>;
using TorusSkeinR = TorusSkeinT<RatFunc>;

// Product-to-sum multiplication:
// (p,q)_T * (r,s)_T = t^(ps-qr) (p+r,q+s)_T + t^(qr-ps) (p-r,q-s)_T,
// extended bilinearly; the empty link is the identity.
template <class C>
TorusSkeinT<C> mul(const TorusSkeinT<C>& a, const TorusSkeinT<C>& b) {
  TorusSkeinT<C> r;
  if (!a.unit_zero()) {
    r.add_unit(a.unit * b.unit);
    for (const auto& [l, c] : b.terms) r.add_term(l.p, l.q, a.unit * c);
  }
  for (const auto& [la, ca] : a.terms) {
    if (!b.unit_zero()) r.add_term(la.p, la.q, ca * b.unit);
    for (const auto& [lb, cb] : b.terms) {
      const int d = la.p * lb.q - la.q * lb.p;
      C c = ca * cb;
      r.add_term(la.p + lb.p, la.q + lb.q, c * C(Laurent::t_pow(d)));
      r.add_term(la.p - lb.p, la.q - lb.q, c * C(Laurent::t_pow(-d)));
    }
  }
  return r;
}

template <class C>
TorusSkeinT<C> operator*(const TorusSkeinT<C>& a, const TorusSkeinT<C>& b) {
  return mul(a, b);
}

// Jones-Wenzl colored curve (p,q)_JW expanded in the T basis. For p = 0 the
// second coordinate is treated as a formal S index: (0,-1)_JW = 0 and
// (0,-n)_JW = -(0,n-2)_JW.
TorusSkein jw_to_t(int p, int q);

// p evaluated at the (0,1) curve: T_k goes to (0,k)_T, the constant to the
// empty link.
TorusSkein poly_of_meridian(const PolyX& p);

// Mirror transform: (p,q) -> (p,-q) and t -> t^-1.
template <class C>
TorusSkeinT<C> mirror(const TorusSkeinT<C>& a) {
  TorusSkeinT<C> r;
  r.add_unit(a.unit.invert_t());
  for (const auto& [l, c] : a.terms) r.add_term(l.p, -l.q, c.invert_t());
  return r;
}

inline TorusSkeinR lift(const TorusSkein& a) {
  TorusSkeinR r;
  r.add_unit(RatFunc(a.unit));
  for (const auto& [l, c] : a.terms) r.add_term(l.p, l.q, RatFunc(c));
  return r;
}

// Coefficients evaluated at t = t0 (a constant-coefficient skein).
TorusSkein specialize_t(const TorusSkein& a, const Rat& t0);

}  // namespace skeinlab

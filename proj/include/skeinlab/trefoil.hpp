#pragma once

#include <map>

#include "skeinlab/torus.hpp"

namespace skeinlab {

enum class Chirality { Left, Right };

inline Chirality opposite(Chirality c) {
  return c == Chirality::Left ? Chirality::Right : Chirality::Left;
}

// Element of the skein module of a trefoil complement, written in the basis
// S_n(x) and S_n(x)y, n >= 0. Negative formal indices fold through
// S_{-1} = 0 and S_{-n} = -S_{n-2} on insertion.
template <class C>
struct ModuleEltT {
  std::map<int, C> s;   // coefficient of S_n(x)
  std::map<int, C> sy;  // coefficient of S_n(x) y

  bool is_zero() const { return s.empty() && sy.empty(); }

  void add_s(int n, const C& c) { fold(s, n, c); }
  void add_sy(int n, const C& c) { fold(sy, n, c); }

  ModuleEltT& operator+=(const ModuleEltT& o) {
    for (const auto& [n, c] : o.s) add_s(n, c);
    for (const auto& [n, c] : o.sy) add_sy(n, c);
    return *this;
  }
  ModuleEltT& operator-=(const ModuleEltT& o) {
    for (const auto& [n, c] : o.s) add_s(n, -c);
    for (const auto& [n, c] : o.sy) add_sy(n, -c);
    return *this;
  }
  friend ModuleEltT operator+(ModuleEltT a, const ModuleEltT& b) { return a += b; }
  friend ModuleEltT operator-(ModuleEltT a, const ModuleEltT& b) { return a -= b; }
  ModuleEltT operator-() const {
    ModuleEltT r;
    for (const auto& [n, c] : s) r.s[n] = -c;
    for (const auto& [n, c] : sy) r.sy[n] = -c;
    return r;
  }
  bool operator==(const ModuleEltT& o) const = default;

  friend ModuleEltT operator*(const C& f, const ModuleEltT& a) {
    ModuleEltT r;
    if (f.is_zero()) return r;
    for (const auto& [n, c] : a.s) r.add_s(n, f * c);
    for (const auto& [n, c] : a.sy) r.add_sy(n, f * c);
    return r;
  }

  static ModuleEltT one() {  // the empty link S_0(x)
    ModuleEltT r;
    r.add_s(0, C(Laurent(1)));
    return r;
  }
  static ModuleEltT y() {  // S_0(x) y
    ModuleEltT r;
    r.add_sy(0, C(Laurent(1)));
    return r;
  }

 private:
  static void fold(std::map<int, C>& part, int n, const C& c) {
    if (c.is_zero() || n == -1) return;
    if (n < -1) {
      fold(part, -n - 2, -c);
      return;
    }
    auto [it, inserted] = part.emplace(n, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) part.erase(it);
    }
  }
};

using ModuleElt = ModuleEltT<Laurent>;
using ModuleEltR = ModuleEltT<RatFunc>;

template <class C>
ModuleEltT<C> mirror(const ModuleEltT<C>& v) {
  ModuleEltT<C> r;
  for (const auto& [n, c] : v.s) r.add_s(n, c.invert_t());
  for (const auto& [n, c] : v.sy) r.add_sy(n, c.invert_t());
  return r;
}

inline ModuleEltR lift(const ModuleElt& v) {
  ModuleEltR r;
  for (const auto& [n, c] : v.s) r.add_s(n, RatFunc(c));
  for (const auto& [n, c] : v.sy) r.add_sy(n, RatFunc(c));
  return r;
}

// Image of a boundary skein in the module (the action on the empty link).
ModuleElt pi(const TorusSkein& u, Chirality c);

// Left action of the boundary algebra on the module.
ModuleElt act(const TorusSkein& u, const ModuleElt& v, Chirality c);
ModuleEltR act(const TorusSkeinR& u, const ModuleEltR& v, Chirality c);

// Closed forms for pi((p,q)_T) and (p,q)_T . y, p >= 1. These evaluate the
// explicit sums directly, independent of the recursive evaluator.
ModuleElt pi_closed(int p, int q, Chirality c);
ModuleElt act_y_closed(int p, int q, Chirality c);

// The boundary element whose image is (t^4 - t^-4) y (mirrored per chirality).
TorusSkein peripheral_y(Chirality c);

// y^k for k in {1,2,3}, computed by iterating the peripheral_y action and
// dividing by the chirality image factor of y. Needs t^8 - 1 invertible.
ModuleEltR y_power(int k, Chirality c);

// (t^4 - t^-4) for left, its mirror for right.
Laurent y_image_factor(Chirality c);

}  // namespace skeinlab

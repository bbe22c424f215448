#pragma once

#include <compare>
#include <map>
#include <optional>
#include <utility>

#include "skeinlab/torus.hpp"

namespace skeinlab {

// Normal-ordered monomial l^a m^b of the noncommutative torus.
struct QMono {
  int l = 0, m = 0;
  auto operator<=>(const QMono&) const = default;
};

// Laurent polynomial in l, m with lm = t^2 ml, kept in normal order
// (all l factors before all m factors).
template <class C>
struct QTorusPolyT {
  std::map<QMono, C> terms;

  bool is_zero() const { return terms.empty(); }

  void add_term(int l, int m, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(QMono{l, m}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  QTorusPolyT& operator+=(const QTorusPolyT& o) {
    for (const auto& [k, c] : o.terms) add_term(k.l, k.m, c);
    return *this;
  }
  QTorusPolyT& operator-=(const QTorusPolyT& o) {
    for (const auto& [k, c] : o.terms) add_term(k.l, k.m, -c);
    return *this;
  }
  friend QTorusPolyT operator+(QTorusPolyT a, const QTorusPolyT& b) { return a += b; }
  friend QTorusPolyT operator-(QTorusPolyT a, const QTorusPolyT& b) { return a -= b; }
  QTorusPolyT operator-() const {
    QTorusPolyT r;
    for (const auto& [k, c] : terms) r.terms[k] = -c;
    return r;
  }
  bool operator==(const QTorusPolyT& o) const = default;

  friend QTorusPolyT operator*(const C& s, const QTorusPolyT& a) {
    QTorusPolyT r;
    for (const auto& [k, c] : a.terms) r.add_term(k.l, k.m, s * c);
    return r;
  }

  static QTorusPolyT one() {
    QTorusPolyT r;
    r.add_term(0, 0, C(Laurent(1)));
    return r;
  }
  static QTorusPolyT monomial(int l, int m, const C& c = C(Laurent(1))) {
    QTorusPolyT r;
    r.add_term(l, m, c);
    return r;
  }

  bool in_plane() const {
    for (const auto& [k, c] : terms)
      if (k.l < 0 || k.m < 0) return false;
    return true;
  }
};

using QTorusPoly = QTorusPolyT<Laurent>;
using QTorusPolyR = QTorusPolyT<RatFunc>;

// (l^a m^b)(l^c m^d) = t^(-2bc) l^(a+c) m^(b+d), extended bilinearly.
template <class C>
QTorusPolyT<C> qt_mul(const QTorusPolyT<C>& f, const QTorusPolyT<C>& g) {
  QTorusPolyT<C> r;
  for (const auto& [ka, ca] : f.terms)
    for (const auto& [kb, cb] : g.terms)
      r.add_term(ka.l + kb.l, ka.m + kb.m,
                 ca * cb * C(Laurent::t_pow(-2 * ka.m * kb.l)));
  return r;
}

template <class C>
QTorusPolyT<C> operator*(const QTorusPolyT<C>& f, const QTorusPolyT<C>& g) {
  return qt_mul(f, g);
}

// Noncommutative exponential e_{p,q} = t^(-pq) l^p m^q.
QTorusPoly e_monomial(int p, int q);

enum class TrigKind { Cos, Sin };

// cos_t(p,q) = (e_{p,q} + e_{-p,-q})/2, sin_t(p,q) = (e_{p,q} - e_{-p,-q})/2.
QTorusPoly cos_sin(int p, int q, TrigKind kind);

// Algebra embedding of the torus skein algebra: (p,q)_T -> 2 cos_t(p,q).
QTorusPoly embed(const TorusSkein& s);

// Quantum-plane element: a QTorusPoly with nonnegative exponents only.
class PlanePoly {
 public:
  PlanePoly() = default;
  explicit PlanePoly(QTorusPoly p);  // throws unless p lies in the plane
  const QTorusPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  bool operator==(const PlanePoly& o) const = default;

 private:
  QTorusPoly poly_;
};

struct PlaneClearing {
  QMono multiplier;  // the monomial l^a m^b that was applied on the left
  PlanePoly plane;
};

// Left-multiplies f by the minimal monomial l^a m^b that moves its support
// into the quantum plane. Throws on zero input.
PlaneClearing clear_to_plane(const QTorusPoly& f);

// If f = c * t^k * g for a rational c and integer k, returns (c, k).
std::optional<std::pair<Rat, int>> equal_up_to_unit(const QTorusPoly& f,
                                                    const QTorusPoly& g);

// Coefficients evaluated at t = t0 (t0 nonzero).
QTorusPoly specialize_t(const QTorusPoly& f, const Rat& t0);

// Mirror transform on the noncommutative torus: m -> m^-1, t -> t^-1.
QTorusPoly mirror(const QTorusPoly& f);

inline QTorusPolyR lift(const QTorusPoly& f) {
  QTorusPolyR r;
  for (const auto& [k, c] : f.terms) r.add_term(k.l, k.m, RatFunc(c));
  return r;
}

}  // namespace skeinlab

#include "skeinlab/qtorus.hpp"

#include <algorithm>
#include <stdexcept>

namespace skeinlab {

QTorusPoly e_monomial(int p, int q) {
  return QTorusPoly::monomial(p, q, Laurent::t_pow(-p * q));
}

QTorusPoly cos_sin(int p, int q, TrigKind kind) {
  const Laurent half(Rat(1, 2));
  QTorusPoly r = half * e_monomial(p, q);
  QTorusPoly s = half * e_monomial(-p, -q);
  return kind == TrigKind::Cos ? r + s : r - s;
}

QTorusPoly embed(const TorusSkein& s) {
  QTorusPoly r;
  r.add_term(0, 0, s.unit);
  for (const auto& [l, c] : s.terms) {
    r.add_term(l.p, l.q, c * Laurent::t_pow(-l.p * l.q));
    r.add_term(-l.p, -l.q, c * Laurent::t_pow(-l.p * l.q));
  }
  return r;
}

PlanePoly::PlanePoly(QTorusPoly p) : poly_(std::move(p)) {
  if (!poly_.in_plane())
    throw std::invalid_argument("polynomial has negative exponents");
}

PlaneClearing clear_to_plane(const QTorusPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot clear the zero element");
  int min_l = 0, min_m = 0;
  for (const auto& [k, c] : f.terms) {
    min_l = std::min(min_l, k.l);
    min_m = std::min(min_m, k.m);
  }
  PlaneClearing out;
  out.multiplier = QMono{-min_l, -min_m};
  out.plane = PlanePoly(
      qt_mul(QTorusPoly::monomial(out.multiplier.l, out.multiplier.m), f));
  return out;
}

std::optional<std::pair<Rat, int>> equal_up_to_unit(const QTorusPoly& f,
                                                    const QTorusPoly& g) {
  if (f.is_zero() && g.is_zero()) return std::make_pair(Rat(1), 0);
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  if (f.terms.size() != g.terms.size()) return std::nullopt;
  const auto& [kg, cg] = *g.terms.begin();
  auto it = f.terms.find(kg);
  if (it == f.terms.end()) return std::nullopt;
  // the ratio must be a single monomial c * t^k
  RatFunc ratio(it->second, cg);
  if (!ratio.is_polynomial() || ratio.num().terms().size() != 1)
    return std::nullopt;
  const int k = ratio.num().min_exp();
  const Rat c = ratio.num().coeff(k);
  const Laurent u = Laurent::t_pow(k, c);
  for (const auto& [kk, cc] : g.terms) {
    auto jt = f.terms.find(kk);
    if (jt == f.terms.end() || !(jt->second == u * cc)) return std::nullopt;
  }
  return std::make_pair(c, k);
}

QTorusPoly specialize_t(const QTorusPoly& f, const Rat& t0) {
  if (t0 == 0) throw std::domain_error("specialization at t = 0");
  QTorusPoly r;
  for (const auto& [k, c] : f.terms) r.add_term(k.l, k.m, Laurent(c.eval(t0)));
  return r;
}

QTorusPoly mirror(const QTorusPoly& f) {
  QTorusPoly r;
  for (const auto& [k, c] : f.terms) r.add_term(k.l, -k.m, c.invert_t());
  return r;
}

}  // namespace skeinlab

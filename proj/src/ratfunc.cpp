#include "skeinlab/ratfunc.hpp"

#include <stdexcept>

namespace skeinlab {

std::pair<Laurent, Laurent> poly_divmod(Laurent a, const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Laurent q;
  const int db = b.max_exp();
  const Rat lb = b.coeff(db);
  while (!a.is_zero() && a.max_exp() >= db) {
    Laurent m = Laurent::t_pow(a.max_exp() - db, a.coeff(a.max_exp()) / lb);
    q += m;
    a -= m * b;
  }
  return {q, a};
}

Laurent primitive_part(const Laurent& a) {
  if (a.is_zero()) return a;
  Int den_lcm = 1;
  for (const auto& [e, c] : a.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  Int num_gcd = 0;
  for (const auto& [e, c] : a.terms()) {
    Int n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  Laurent r = Laurent(scale) * a;
  if (r.coeff(r.max_exp()) < 0) r = -r;
  return r;
}

Laurent poly_gcd(Laurent a, Laurent b) {
  if (a.is_zero()) return b.is_zero() ? b : primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    Laurent r = poly_divmod(a, b).second;
    if (!r.is_zero()) r = primitive_part(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RatFunc::RatFunc(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) {
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  // monomial denominator: fold it into the numerator
  if (den_.terms().size() == 1) {
    const int e = den_.min_exp();
    num_ = num_ * Laurent::t_pow(-e, Rat(1) / den_.coeff(e));
    den_ = Laurent(1);
    return;
  }
  const int sn = num_.min_exp(), sd = den_.min_exp();
  Laurent n0 = num_.shifted(-sn);
  Laurent d0 = den_.shifted(-sd);
  if (n0.terms().size() > 1) {  // gcd with a monomial numerator is trivial
    Laurent g = poly_gcd(n0, d0);
    if (!(g.max_exp() == 0)) {
      n0 = poly_divmod(n0, g).first;
      d0 = poly_divmod(d0, g).first;
    }
  }
  const Laurent inv_lc(Rat(1) / d0.coeff(d0.max_exp()));
  num_ = (n0 * inv_lc).shifted(sn - sd);
  den_ = d0 * inv_lc;
}

const Laurent& RatFunc::as_laurent() const {
  if (!is_polynomial())
    throw std::domain_error("rational function is not a polynomial: " + str());
  return num_;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::invert_t() const {
  RatFunc r;
  r.num_ = num_.invert_t();
  r.den_ = den_.invert_t();
  r.normalize();
  return r;
}

Rat RatFunc::eval(const Rat& t0) const {
  Rat d = den_.eval(t0);
  if (d == 0)
    throw std::domain_error("denominator vanishes at the specialization point");
  return num_.eval(t0) / d;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace skeinlab

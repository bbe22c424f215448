#pragma once

#include <utility>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

// Polynomial long division, treating both arguments as polynomials in t
// (min_exp >= 0). Returns {quotient, remainder}.
std::pair<Laurent, Laurent> poly_divmod(Laurent a, const Laurent& b);

// Scales a nonzero polynomial so its coefficients are coprime integers and
// the leading coefficient is positive.
Laurent primitive_part(const Laurent& a);

// Euclidean gcd of two polynomials in t (min_exp >= 0), returned in
// primitive form with positive leading coefficient. gcd(0, 0) = 0.
Laurent poly_gcd(Laurent a, Laurent b);

// Quotient of two Laurent polynomials in t. Canonical form: the denominator
// is a polynomial with min_exp 0 and leading coefficient 1, coprime to the
// numerator shifted to min_exp 0; the numerator carries all t-power slack.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const Rat& c) : num_(c), den_(1) {}
  RatFunc(const Laurent& n) : num_(n), den_(1) {}
  RatFunc(Laurent n, Laurent d);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  // Requires a polynomial (denominator 1).
  const Laurent& as_laurent() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  RatFunc invert_t() const;

  // Exact evaluation at t = t0; throws if the denominator vanishes there.
  Rat eval(const Rat& t0) const;

  std::string str() const;

 private:
  void normalize();
  Laurent num_, den_;
};

}  // namespace skeinlab

#pragma once

#include <map>
#include <string>

#include "skeinlab/rational.hpp"

namespace skeinlab {

// Sparse Laurent polynomial in the deformation parameter t, with exact
// rational coefficients. Zero coefficients are never stored; the zero
// polynomial is the empty term map.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);
  Laurent(const Rat& c);

  // c * t^e
  static Laurent t_pow(int e, const Rat& c = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<int, Rat>& terms() const { return terms_; }

  // Extremal exponents; require a nonzero polynomial.
  int min_exp() const;
  int max_exp() const;
  Rat coeff(int e) const;

  void add_term(int e, const Rat& c);

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

  // Multiplication by t^k.
  Laurent shifted(int k) const;

  // The substitution t -> t^-1 (exponent negation).
  Laurent invert_t() const;

  // Exact evaluation at t = t0; t0 must be nonzero (negative exponents).
  Rat eval(const Rat& t0) const;

  std::string str() const;

 private:
  std::map<int, Rat> terms_;
};

}  // namespace skeinlab

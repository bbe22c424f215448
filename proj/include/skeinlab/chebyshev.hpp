#pragma once

#include <map>
#include <utility>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

enum class Basis { Power, T, S };

// Polynomial in one variable x over Laurent coefficients, expressed in the
// power basis, the T basis {1, T_1, T_2, ...} or the S basis {S_0, S_1, ...}.
// Index 0 always denotes the constant 1 (never T_0 = 2), so conversions are
// plain triangular changes of basis.
struct PolyX {
  Basis basis = Basis::Power;
  std::map<int, Laurent> coeffs;  // index >= 0 -> nonzero coefficient

  void add(int k, const Laurent& c);
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const PolyX& o) const = default;
};

// T_n in the power basis, for any integer n (T_{-n} = T_n).
PolyX t_poly(int n);

// S_n in the power basis, for any integer n (S_{-1} = 0, S_{-n} = -S_{n-2}).
PolyX s_poly(int n);

// Re-expresses p in the target basis.
PolyX convert(const PolyX& p, Basis target);

// The formal term c*S_n rewritten with a nonnegative index:
// n >= 0 keeps (n, c); n = -1 vanishes; n <= -2 folds to (-n-2, -c).
std::vector<std::pair<int, Laurent>> s_index_normalize(int n, const Laurent& c);

// Product, returned in the power basis.
PolyX poly_mul(const PolyX& a, const PolyX& b);

}  // namespace skeinlab

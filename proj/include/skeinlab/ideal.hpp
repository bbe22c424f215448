#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skeinlab/qtorus.hpp"
#include "skeinlab/trefoil.hpp"

namespace skeinlab {

// Commutative polynomial in l, m with rational coefficients; used for the
// t = -1 specialization and the classical A-polynomial recipe.
struct CommPoly {
  std::map<std::pair<int, int>, Rat> terms;  // (l-deg, m-deg) -> coefficient

  bool is_zero() const { return terms.empty(); }
  void add(int a, int b, const Rat& c);
  friend CommPoly operator*(const CommPoly& x, const CommPoly& y);
  bool operator==(const CommPoly& o) const = default;

  CommPoly substituted_negated() const;  // l -> -l, m -> -m
  // content 1, lexicographically greatest monomial positive
  CommPoly normalized() const;
  std::string str() const;

  static CommPoly from(std::initializer_list<std::tuple<int, int, long>> ts);
};

// Generator set of the peripheral ideal. The kernel condition pi(g) = 0
// (at symbolic t, or at checked_at when set) is evaluated at construction
// and recorded per element.
struct SkeinGens {
  Chirality chirality = Chirality::Left;
  std::vector<TorusSkein> elements;
  std::vector<std::string> provenance;
  bool requires_t8_invertible = true;
  std::optional<Rat> checked_at;  // empty: symbolic t
  std::vector<bool> in_kernel;

  bool all_in_kernel() const;
};

SkeinGens make_skein_gens(Chirality c, std::vector<TorusSkein> elements,
                          std::vector<std::string> provenance,
                          std::optional<Rat> checked_at = std::nullopt,
                          bool requires_t8_invertible = true);

struct PlaneGens {
  Chirality chirality = Chirality::Left;
  std::vector<PlanePoly> elements;
  std::vector<std::string> provenance;
  bool requires_t8_invertible = true;
};

// tau = (1,-5) - t^-8 (1,-1) + t^-3 (0,5) - t (0,1), mirrored for right.
TorusSkein tau(Chirality c);

// The three stated generators of the peripheral ideal (mirrored for right).
SkeinGens peripheral_ideal_gens(Chirality c);

// The phi_q kernel family (left-handed); negative Jones-Wenzl indices
// follow the formal S rules.
TorusSkein phi(int q);

// Exact nullspace of pi restricted to the span of the canonical labels with
// 0 <= p <= pmax, qmin <= q <= qmax, plus the empty link. Vectors are
// returned with cleared denominators and content 1. With t0 set, the matrix
// is specialized exactly at t = t0 before solving.
std::vector<TorusSkein> kernel_basis(int pmax, int qmin, int qmax, Chirality c,
                                     std::optional<Rat> t0 = std::nullopt);

struct SkeinCertEntry {
  TorusSkein multiplier;  // unit or a single canonical curve
  RatFunc coeff;
  int gen = 0;
};
struct SkeinCertificate {
  TorusSkein target;
  std::vector<SkeinCertEntry> combination;
};

// Searches for target = sum coeff * (multiplier * gen) over multipliers
// {unit} + canonical (r,s) with r <= bound_p, |s| <= bound_q.
std::optional<SkeinCertificate> skein_membership(const TorusSkein& target,
                                                 const SkeinGens& gens,
                                                 int bound_p, int bound_q);
bool replay(const SkeinCertificate& cert, const SkeinGens& gens);

enum class Ambient { Plane, Trig };

struct PlaneCertEntry {
  QMono multiplier;
  RatFunc coeff;
  int gen = 0;
};
struct PlaneCertificate {
  PlanePoly target;
  Ambient ambient = Ambient::Trig;
  std::vector<PlaneCertEntry> combination;
};

// Searches for target = sum coeff * (l^a m^b * gen); exponent window
// [0, bound] per variable in the plane, [-bound, bound] in the trig algebra
// (the extension ideal).
std::optional<PlaneCertificate> plane_membership(const PlanePoly& target,
                                                 const PlaneGens& gens,
                                                 int bound_l, int bound_m,
                                                 Ambient ambient);
bool replay(const PlaneCertificate& cert, const PlaneGens& gens);

// The three noncommutative A-ideal generators, expanded in normal order.
PlaneGens aideal_gens(Chirality c);

// clear_to_plane(embed(tau)) against the first A-ideal generator; returns
// the unit (c, k) with lhs = c t^k rhs, throwing if none exists.
std::pair<Rat, int> verify_aideal_gen1(Chirality c);

struct TMinus1Gens {
  SkeinGens skein;  // the two peripheral generators, checked at t = -1
  PlaneGens plane;  // the two A-ideal generators expanded at t = -1
  std::vector<std::vector<CommPoly>> factors;  // their printed factorizations
};
TMinus1Gens t_minus1_gens(Chirality c);

// Classical A-polynomial recipe: substitute l -> -l, m -> -m in the factored
// t = -1 generators and return the product of the shared factors.
CommPoly classical_common_factor(Chirality c);

}  // namespace skeinlab

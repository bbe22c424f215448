#include "skeinlab/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "skeinlab/linalg.hpp"

namespace skeinlab {

namespace {
Laurent tp(int k) { return Laurent::t_pow(k); }
}

void CommPoly::add(int a, int b, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(std::make_pair(a, b), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

CommPoly operator*(const CommPoly& x, const CommPoly& y) {
  CommPoly r;
  for (const auto& [ka, ca] : x.terms)
    for (const auto& [kb, cb] : y.terms)
      r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

CommPoly CommPoly::substituted_negated() const {
  CommPoly r;
  for (const auto& [k, c] : terms) {
    const int sgn = (k.first + k.second) % 2 == 0 ? 1 : -1;
    r.add(k.first, k.second, Rat(sgn) * c);
  }
  return r;
}

CommPoly CommPoly::normalized() const {
  if (terms.empty()) return *this;
  Int den_lcm = 1, num_gcd = 0;
  for (const auto& [k, c] : terms)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  for (const auto& [k, c] : terms) {
    Int n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms.rbegin()->second < 0) scale = -scale;
  CommPoly r;
  for (const auto& [k, c] : terms) r.terms[k] = c * scale;
  return r;
}

std::string CommPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Rat c = it->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    const auto& [a, b] = it->first;
    const bool has_var = a != 0 || b != 0;
    if (!has_var || c != 1) {
      os << rat_to_string(c);
      if (has_var) os << "*";
    }
    if (a != 0) {
      os << "l";
      if (a != 1) os << "^" << a;
    }
    if (b != 0) {
      if (a != 0) os << "*";
      os << "m";
      if (b != 1) os << "^" << b;
    }
    first = false;
  }
  return os.str();
}

CommPoly CommPoly::from(std::initializer_list<std::tuple<int, int, long>> ts) {
  CommPoly r;
  for (const auto& [a, b, c] : ts) r.add(a, b, Rat(c));
  return r;
}

bool SkeinGens::all_in_kernel() const {
  for (bool b : in_kernel)
    if (!b) return false;
  return true;
}

SkeinGens make_skein_gens(Chirality c, std::vector<TorusSkein> elements,
                          std::vector<std::string> provenance,
                          std::optional<Rat> checked_at,
                          bool requires_t8_invertible) {
  SkeinGens g;
  g.chirality = c;
  g.elements = std::move(elements);
  g.provenance = std::move(provenance);
  g.requires_t8_invertible = requires_t8_invertible;
  g.checked_at = checked_at;
  for (const TorusSkein& e : g.elements) {
    ModuleElt img = pi(e, c);
    bool zero = true;
    if (checked_at) {
      for (const auto& [n, coeff] : img.s) zero &= coeff.eval(*checked_at) == 0;
      for (const auto& [n, coeff] : img.sy) zero &= coeff.eval(*checked_at) == 0;
    } else {
      zero = img.is_zero();
    }
    g.in_kernel.push_back(zero);
  }
  return g;
}

TorusSkein tau(Chirality c) {
  TorusSkein t;
  t.add_term(1, -5, tp(0));
  t.add_term(1, -1, -tp(-8));
  t.add_term(0, 5, tp(-3));
  t.add_term(0, 1, -tp(1));
  return c == Chirality::Right ? mirror(t) : t;
}

SkeinGens peripheral_ideal_gens(Chirality c) {
  TorusSkein g1 = tau(Chirality::Left);

  TorusSkein g2;
  g2.add_term(2, -6, tp(0));
  g2.add_term(1, 0, -(tp(6) + tp(-6)));
  g2.add_term(1, -6, tp(4) + tp(-4));
  g2.add_term(0, 6, tp(0));
  g2.add_unit(Laurent(-2) * (tp(4) + tp(-4)));

  TorusSkein g3;
  g3.add_term(2, -7, tp(0));
  g3.add_term(1, -7, -tp(-5));
  g3.add_term(1, -3, tp(-5) - tp(-1));
  g3.add_term(1, -1, -tp(5));
  g3.add_term(0, 3, tp(2) - tp(-2));
  g3.add_term(0, 1, -tp(-6));

  if (c == Chirality::Right) {
    g1 = mirror(g1);
    g2 = mirror(g2);
    g3 = mirror(g3);
  }
  return make_skein_gens(
      c, {g1, g2, g3},
      {"tau", "degree-two generator", "degree-two twisted generator"});
}

TorusSkein phi(int q) {
  TorusSkein head = TorusSkein::curve(1, q);
  head -= tp(q + 6) * jw_to_t(0, q + 6);
  head += tp(q + 2) * jw_to_t(0, q);
  TorusSkein wing = tp(q + 4) * jw_to_t(0, q + 4);
  wing -= tp(q) * jw_to_t(0, q);
  return (tp(4) - tp(-4)) * head - mul(wing, peripheral_y(Chirality::Left));
}

namespace {

// column basis of the truncated pi matrix: deduplicated canonical labels
std::vector<TorusLabel> grid_labels(int pmax, int qmin, int qmax) {
  std::set<TorusLabel> labels;
  for (int p = 0; p <= pmax; ++p)
    for (int q = qmin; q <= qmax; ++q) {
      CanonLabel k = canonicalize(p, q);
      if (!k.is_unit) labels.insert(k.label);
    }
  return {labels.begin(), labels.end()};
}

using RowKey = std::pair<int, int>;  // (0 = S part, 1 = Sy part; index)

void collect_rows(const ModuleElt& v, std::set<RowKey>& keys) {
  for (const auto& [n, c] : v.s) keys.insert({0, n});
  for (const auto& [n, c] : v.sy) keys.insert({1, n});
}

RatFunc coord(const ModuleElt& v, const RowKey& k) {
  const auto& part = k.first == 0 ? v.s : v.sy;
  auto it = part.find(k.second);
  return it == part.end() ? RatFunc() : RatFunc(it->second);
}

Laurent poly_lcm(const Laurent& a, const Laurent& b) {
  return poly_divmod(a * b, poly_gcd(a, b)).first;
}

// scales a RatFunc vector into Laurent form: cleared denominators, common
// content removed, first nonzero coordinate with positive leading coefficient
std::vector<Laurent> clear_vector(const RVec& v) {
  Laurent den(1);
  for (const RatFunc& e : v)
    if (!e.is_zero()) den = poly_lcm(den, e.den());
  std::vector<Laurent> out;
  out.reserve(v.size());
  for (const RatFunc& e : v)
    out.push_back(e.is_zero() ? Laurent()
                              : e.num() * poly_divmod(den, e.den()).first);

  Laurent content;
  int shift = 0;
  bool found = false;
  for (const Laurent& e : out) {
    if (e.is_zero()) continue;
    if (!found) {
      content = primitive_part(e.shifted(-e.min_exp()));
      shift = e.min_exp();
      found = true;
    } else {
      content = poly_gcd(content, e.shifted(-e.min_exp()));
      shift = std::min(shift, e.min_exp());
    }
  }
  if (!found) return out;
  for (Laurent& e : out) {
    if (e.is_zero()) continue;
    const int s = e.min_exp();
    e = poly_divmod(e.shifted(-s), content).first.shifted(s - shift);
  }
  for (const Laurent& e : out) {
    if (e.is_zero()) continue;
    if (e.coeff(e.max_exp()) < 0)
      for (Laurent& f : out) f = -f;
    break;
  }
  return out;
}

}  // namespace

std::vector<TorusSkein> kernel_basis(int pmax, int qmin, int qmax,
                                     Chirality c, std::optional<Rat> t0) {
  std::vector<TorusLabel> labels = grid_labels(pmax, qmin, qmax);
  std::vector<ModuleElt> images;
  images.push_back(pi(TorusSkein::one(), c));
  for (const TorusLabel& l : labels)
    images.push_back(pi(TorusSkein::curve(l.p, l.q), c));
  if (t0) {
    for (ModuleElt& v : images) {
      ModuleElt s;
      for (const auto& [n, coeff] : v.s) s.add_s(n, Laurent(coeff.eval(*t0)));
      for (const auto& [n, coeff] : v.sy) s.add_sy(n, Laurent(coeff.eval(*t0)));
      v = s;
    }
  }

  std::set<RowKey> keys;
  for (const ModuleElt& v : images) collect_rows(v, keys);

  RMat a(keys.size(), RVec(images.size()));
  size_t i = 0;
  for (const RowKey& k : keys) {
    for (size_t j = 0; j < images.size(); ++j) a[i][j] = coord(images[j], k);
    ++i;
  }

  std::vector<TorusSkein> out;
  for (const RVec& v : nullspace(a)) {
    std::vector<Laurent> cleared = clear_vector(v);
    TorusSkein s;
    s.add_unit(cleared[0]);
    for (size_t j = 0; j < labels.size(); ++j)
      s.add_term(labels[j].p, labels[j].q, cleared[j + 1]);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::vector<TorusSkein> multiplier_basis(int bound_p, int bound_q) {
  std::vector<TorusSkein> mults;
  mults.push_back(TorusSkein::one());
  for (const TorusLabel& l : grid_labels(bound_p, -bound_q, bound_q))
    mults.push_back(TorusSkein::curve(l.p, l.q));
  return mults;
}

using SkeinRowKey = std::pair<int, TorusLabel>;  // (0 = unit, 1 = label)

void collect_rows(const TorusSkein& s, std::set<SkeinRowKey>& keys) {
  if (!s.unit_zero()) keys.insert({0, TorusLabel{}});
  for (const auto& [l, c] : s.terms) keys.insert({1, l});
}

RatFunc coord(const TorusSkein& s, const SkeinRowKey& k) {
  if (k.first == 0) return RatFunc(s.unit);
  auto it = s.terms.find(k.second);
  return it == s.terms.end() ? RatFunc() : RatFunc(it->second);
}

}  // namespace

std::optional<SkeinCertificate> skein_membership(const TorusSkein& target,
                                                 const SkeinGens& gens,
                                                 int bound_p, int bound_q) {
  std::vector<TorusSkein> mults = multiplier_basis(bound_p, bound_q);
  std::vector<TorusSkein> cols;
  std::vector<std::pair<int, int>> col_id;  // (gen index, multiplier index)
  for (size_t g = 0; g < gens.elements.size(); ++g)
    for (size_t m = 0; m < mults.size(); ++m) {
      cols.push_back(mul(mults[m], gens.elements[g]));
      col_id.push_back({static_cast<int>(g), static_cast<int>(m)});
    }

  std::set<SkeinRowKey> keys;
  collect_rows(target, keys);
  for (const TorusSkein& s : cols) collect_rows(s, keys);

  RMat a(keys.size(), RVec(cols.size()));
  RVec b(keys.size());
  size_t i = 0;
  for (const SkeinRowKey& k : keys) {
    for (size_t j = 0; j < cols.size(); ++j) a[i][j] = coord(cols[j], k);
    b[i] = coord(target, k);
    ++i;
  }
  auto x = solve(a, b);
  if (!x) return std::nullopt;

  SkeinCertificate cert;
  cert.target = target;
  for (size_t j = 0; j < cols.size(); ++j) {
    if ((*x)[j].is_zero()) continue;
    cert.combination.push_back(
        {mults[col_id[j].second], (*x)[j], col_id[j].first});
  }
  return cert;
}

bool replay(const SkeinCertificate& cert, const SkeinGens& gens) {
  TorusSkeinR acc;
  for (const SkeinCertEntry& e : cert.combination)
    acc += e.coeff * lift(mul(e.multiplier, gens.elements[e.gen]));
  return acc == lift(cert.target);
}

std::optional<PlaneCertificate> plane_membership(const PlanePoly& target,
                                                 const PlaneGens& gens,
                                                 int bound_l, int bound_m,
                                                 Ambient ambient) {
  const int lo_l = ambient == Ambient::Plane ? 0 : -bound_l;
  const int lo_m = ambient == Ambient::Plane ? 0 : -bound_m;
  std::vector<QMono> mults;
  for (int a = lo_l; a <= bound_l; ++a)
    for (int b = lo_m; b <= bound_m; ++b) mults.push_back(QMono{a, b});

  std::vector<QTorusPoly> cols;
  std::vector<std::pair<int, int>> col_id;
  for (size_t g = 0; g < gens.elements.size(); ++g)
    for (size_t m = 0; m < mults.size(); ++m) {
      cols.push_back(qt_mul(QTorusPoly::monomial(mults[m].l, mults[m].m),
                            gens.elements[g].poly()));
      col_id.push_back({static_cast<int>(g), static_cast<int>(m)});
    }

  std::map<QMono, int> keys;
  for (const auto& [k, c] : target.poly().terms) keys.emplace(k, 0);
  for (const QTorusPoly& p : cols)
    for (const auto& [k, c] : p.terms) keys.emplace(k, 0);
  int row_index = 0;
  for (auto& [k, idx] : keys) idx = row_index++;

  std::vector<SparseRow> rows(keys.size());
  std::vector<Laurent> b(keys.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [k, c] : cols[j].terms)
      rows[keys.at(k)][static_cast<int>(j)] = c;
  for (const auto& [k, c] : target.poly().terms) b[keys.at(k)] = c;

  auto x = sparse_solve(std::move(rows), std::move(b),
                        static_cast<int>(cols.size()));
  if (!x) return std::nullopt;

  PlaneCertificate cert;
  cert.target = target;
  cert.ambient = ambient;
  for (size_t j = 0; j < cols.size(); ++j) {
    if ((*x)[j].is_zero()) continue;
    cert.combination.push_back(
        {mults[col_id[j].second], (*x)[j], col_id[j].first});
  }
  return cert;
}

bool replay(const PlaneCertificate& cert, const PlaneGens& gens) {
  QTorusPolyR acc;
  for (const PlaneCertEntry& e : cert.combination) {
    QTorusPoly prod =
        qt_mul(QTorusPoly::monomial(e.multiplier.l, e.multiplier.m),
               gens.elements[e.gen].poly());
    acc += e.coeff * lift(prod);
  }
  return acc == lift(cert.target.poly());
}

namespace {

QTorusPoly lmono(int a, int b, const Laurent& c = Laurent(1)) {
  return QTorusPoly::monomial(a, b, c);
}

// the common right factor: l - t^6 m^6 for left, l m^6 - t^6 for right
QTorusPoly chirality_factor(Chirality c) {
  return c == Chirality::Left ? lmono(1, 0) - lmono(0, 6, tp(6))
                              : lmono(1, 6) - lmono(0, 0, tp(6));
}

}  // namespace

PlaneGens aideal_gens(Chirality c) {
  const QTorusPoly f = chirality_factor(c);
  // m^4 (l + t^10) - t^-4 (l + t^2)
  QTorusPoly head = qt_mul(lmono(0, 4), lmono(1, 0) + lmono(0, 0, tp(10))) -
                    tp(-4) * (lmono(1, 0) + lmono(0, 0, tp(2)));
  QTorusPoly g1 = qt_mul(head, f);
  QTorusPoly g2 =
      qt_mul(qt_mul(qt_mul(lmono(1, 0) + lmono(0, 0, tp(24)),
                           lmono(1, 0) + lmono(0, 0, tp(10))),
                    lmono(1, 0) + lmono(0, 0, tp(2))),
             f);
  QTorusPoly g3 =
      qt_mul(qt_mul(qt_mul(lmono(0, 2) - lmono(0, 0, tp(-22)),
                           lmono(1, 0) + lmono(0, 0, tp(10))),
                    lmono(1, 0) + lmono(0, 0, tp(2))),
             f);
  PlaneGens out;
  out.chirality = c;
  out.elements = {PlanePoly(g1), PlanePoly(g2), PlanePoly(g3)};
  out.provenance = {"contraction of tau", "l-factored generator",
                    "m-factored generator"};
  return out;
}

std::pair<Rat, int> verify_aideal_gen1(Chirality c) {
  PlaneClearing cleared = clear_to_plane(embed(tau(c)));
  PlanePoly gen1 = aideal_gens(c).elements[0];
  auto unit = equal_up_to_unit(cleared.plane.poly(), gen1.poly());
  if (!unit)
    throw std::runtime_error(
        "cleared image of tau is not a unit multiple of the first A-ideal "
        "generator");
  return *unit;
}

TMinus1Gens t_minus1_gens(Chirality c) {
  const int s = c == Chirality::Left ? -1 : 1;

  TorusSkein ga;
  ga.add_term(1, 4 * s, Laurent(1));
  ga.add_term(1, 2 * s, Laurent(-1));
  ga.add_term(0, 4, Laurent(1));
  ga.add_term(0, 2, Laurent(-1));
  ga.add_unit(Laurent(-2));

  TorusSkein gb;
  gb.add_term(2, 6 * s, Laurent(1));
  gb.add_term(0, 6, Laurent(-1));

  TMinus1Gens out;
  out.skein = make_skein_gens(c, {ga, gb},
                              {"degree-one generator at t = -1",
                               "degree-two generator at t = -1"},
                              Rat(-1), false);

  CommPoly l2m1 = CommPoly::from({{2, 0, 1}, {0, 0, -1}});  // l^2 - 1
  CommPoly lp1 = CommPoly::from({{1, 0, 1}, {0, 0, 1}});    // l + 1
  CommPoly m2m1 = CommPoly::from({{0, 2, 1}, {0, 0, -1}});  // m^2 - 1
  CommPoly last = c == Chirality::Left
                      ? CommPoly::from({{1, 0, 1}, {0, 6, -1}})   // l - m^6
                      : CommPoly::from({{1, 6, 1}, {0, 0, -1}});  // l m^6 - 1
  out.factors = {{l2m1, lp1, last}, {m2m1, lp1, last}};

  auto expand = [&](const std::vector<CommPoly>& fs) {
    QTorusPoly acc = QTorusPoly::one();
    for (const CommPoly& f : fs) {
      QTorusPoly qf;
      for (const auto& [k, coeff] : f.terms)
        qf.add_term(k.first, k.second, Laurent(coeff));
      acc = qt_mul(acc, qf);
    }
    return PlanePoly(specialize_t(acc, Rat(-1)));
  };
  out.plane.chirality = c;
  out.plane.requires_t8_invertible = false;
  out.plane.elements = {expand(out.factors[0]), expand(out.factors[1])};
  out.plane.provenance = {"(l^2-1)(l+1)(chirality factor)",
                          "(m^2-1)(l+1)(chirality factor)"};
  return out;
}

CommPoly classical_common_factor(Chirality c) {
  TMinus1Gens gens = t_minus1_gens(c);
  std::vector<std::vector<CommPoly>> subst(2);
  for (int i = 0; i < 2; ++i)
    for (const CommPoly& f : gens.factors[i])
      subst[i].push_back(f.substituted_negated().normalized());

  CommPoly result = CommPoly::from({{0, 0, 1}});
  std::vector<CommPoly> pool = subst[1];
  for (const CommPoly& f : subst[0]) {
    auto it = std::find(pool.begin(), pool.end(), f);
    if (it == pool.end()) continue;
    pool.erase(it);
    result = result * f;
  }
  return result.normalized();
}

}  // namespace skeinlab

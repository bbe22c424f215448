#include "skeinlab/trefoil.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace skeinlab {

namespace {

Laurent tp(int k) { return Laurent::t_pow(k); }

// pi((1,q)_T) = t^{q+6} S_{q+6} - t^{q+2} S_q + t^{q+4} S_{q+4} y - t^q S_q y
ModuleElt pi_row_p1(int q) {
  ModuleElt r;
  r.add_s(q + 6, tp(q + 6));
  r.add_s(q, -tp(q + 2));
  r.add_sy(q + 4, tp(q + 4));
  r.add_sy(q, -tp(q));
  return r;
}

// (1,q)_T . y = t^q S_{q-2} - t^{q+8} S_{q+6} + t^{q-2} S_{q-2} y - t^{q+6} S_{q+4} y
ModuleElt y_row_p1(int q) {
  ModuleElt r;
  r.add_s(q - 2, tp(q));
  r.add_s(q + 6, -tp(q + 8));
  r.add_sy(q - 2, tp(q - 2));
  r.add_sy(q + 4, -tp(q + 6));
  return r;
}

// Multiplication by T_m(x) on both parts: T_m S_n = S_{n+m} + S_{n-m}.
ModuleElt mul_T(int m_in, const ModuleElt& v) {
  const int m = std::abs(m_in);
  ModuleElt r;
  for (const auto& [n, c] : v.s) {
    r.add_s(n + m, c);
    r.add_s(n - m, c);
  }
  for (const auto& [n, c] : v.sy) {
    r.add_sy(n + m, c);
    r.add_sy(n - m, c);
  }
  return r;
}

// Left-handed evaluator. Rows for p >= 2 come from the determinant recursion
// (p,q)_T = t^{-q} (1,0)_T * (p-1,q)_T - t^{-2q} (p-2,q)_T, seeded at p = 1
// by the explicit rows above; p = 0 acts by multiplication by T_q(x).
class Evaluator {
 public:
  ModuleElt pi_label(int p, int q) {
    if (p == 0) return mul_T(q, ModuleElt::one());
    if (auto hit = find(pi_, {p, q})) return *hit;
    ModuleElt r;
    if (p == 1) {
      r = pi_row_p1(q);
    } else {
      r = tp(-q) * act_label(1, 0, pi_label(p - 1, q)) -
          tp(-2 * q) * pi_label(p - 2, q);
    }
    store(pi_, {p, q}, r);
    return r;
  }

  ModuleElt y_label(int p, int q) {
    if (p == 0) return mul_T(q, ModuleElt::y());
    if (auto hit = find(y_, {p, q})) return *hit;
    ModuleElt r;
    if (p == 1) {
      r = y_row_p1(q);
    } else {
      r = tp(-q) * act_label(1, 0, y_label(p - 1, q)) -
          tp(-2 * q) * y_label(p - 2, q);
    }
    store(y_, {p, q}, r);
    return r;
  }

  // (p,q)_T . S_n(x): lift S_n to (0,n)_JW and multiply through.
  ModuleElt row_on_s(int p, int q, int n) { return row(p, q, n, false); }
  // (p,q)_T . S_n(x) y
  ModuleElt row_on_sy(int p, int q, int n) { return row(p, q, n, true); }

  ModuleElt act_label(int p, int q, const ModuleElt& v) {
    ModuleElt r;
    for (const auto& [n, a] : v.s) r += a * row_on_s(p, q, n);
    for (const auto& [n, b] : v.sy) r += b * row_on_sy(p, q, n);
    return r;
  }

 private:
  ModuleElt row(int p, int q, int n, bool on_y) {
    if (p == 0)
      return mul_T(q, on_y ? single_sy(n) : single_s(n));
    // (p,q)_T * (0,k)_T = t^{pk} (p,q+k)_T + t^{-pk} (p,q-k)_T
    ModuleElt r;
    for (int k = n; k >= 1; k -= 2) {
      r += tp(p * k) * label(p, q + k, on_y);
      r += tp(-p * k) * label(p, q - k, on_y);
    }
    if (n % 2 == 0) r += label(p, q, on_y);
    return r;
  }

  ModuleElt label(int p, int q, bool on_y) {
    return on_y ? y_label(p, q) : pi_label(p, q);
  }

  static ModuleElt single_s(int n) {
    ModuleElt r;
    r.add_s(n, Laurent(1));
    return r;
  }
  static ModuleElt single_sy(int n) {
    ModuleElt r;
    r.add_sy(n, Laurent(1));
    return r;
  }

  using Key = std::pair<int, int>;

  const ModuleElt* find(const std::map<Key, ModuleElt>& memo, Key k) {
    std::lock_guard<std::mutex> g(mu_);
    auto it = memo.find(k);
    return it == memo.end() ? nullptr : &it->second;
  }
  void store(std::map<Key, ModuleElt>& memo, Key k, const ModuleElt& v) {
    std::lock_guard<std::mutex> g(mu_);
    memo.emplace(k, v);
  }

  std::mutex mu_;
  std::map<Key, ModuleElt> pi_, y_;
};

Evaluator& evaluator() {
  static Evaluator ev;
  return ev;
}

template <class C>
ModuleEltT<C> lift_to(const ModuleElt& v) {
  if constexpr (std::is_same_v<C, Laurent>)
    return v;
  else
    return lift(v);
}

template <class C>
ModuleEltT<C> act_left(const TorusSkeinT<C>& u, const ModuleEltT<C>& v) {
  Evaluator& ev = evaluator();
  ModuleEltT<C> r = u.unit * v;
  for (const auto& [l, cu] : u.terms) {
    for (const auto& [n, a] : v.s)
      r += (cu * a) * lift_to<C>(ev.row_on_s(l.p, l.q, n));
    for (const auto& [n, b] : v.sy)
      r += (cu * b) * lift_to<C>(ev.row_on_sy(l.p, l.q, n));
  }
  return r;
}

template <class C>
ModuleEltT<C> act_any(const TorusSkeinT<C>& u, const ModuleEltT<C>& v, Chirality c) {
  if (c == Chirality::Right) return mirror(act_left(mirror(u), mirror(v)));
  return act_left(u, v);
}

}  // namespace

ModuleElt pi(const TorusSkein& u, Chirality c) {
  return act_any(u, ModuleElt::one(), c);
}

ModuleElt act(const TorusSkein& u, const ModuleElt& v, Chirality c) {
  return act_any(u, v, c);
}

ModuleEltR act(const TorusSkeinR& u, const ModuleEltR& v, Chirality c) {
  return act_any(u, v, c);
}

namespace {

// Closed forms of the left-handed rows, p >= 1. The sum runs over
// k = 1..2p-1 (or 2p-2 for the action) with eps_k = 1 for odd k; the k-th
// term sits at S index q + 6p - 3k - eps_k - 2 and carries the exponent
// drop 6h^2 + 10h + 4 (k = 2h+1 odd) or 6h^2 + 2h (k = 2h even).
int closed_sum_drop(int k) {
  const int h = k / 2;
  return k % 2 ? (h + 1) * (6 * h + 4) : 6 * h * h + 2 * h;
}

ModuleElt pi_closed_left(int p, int q) {
  ModuleElt r;
  r.add_s(q + 6 * p, tp(6 * p * p + p * q));
  r.add_sy(q + 6 * p - 2, tp(6 * p * p + p * q - 2));
  for (int k = 1; k <= 2 * p - 1; ++k) {
    const int sign = ((k + 1) / 2) % 2 == 0 ? 1 : -1;
    const int e = 6 * p * p + p * q - closed_sum_drop(k);
    const int idx = q + 6 * p - 3 * k - (k % 2) - 2;
    // the sum term is S_idx (1 + t^-2 y)
    r.add_s(idx, Laurent::t_pow(e, Rat(sign)));
    r.add_sy(idx, Laurent::t_pow(e - 2, Rat(sign)));
  }
  return r;
}

ModuleElt act_y_closed_left(int p, int q) {
  ModuleElt r;
  r.add_s(q + 6 * p, -tp(6 * p * p + p * q + 2));
  r.add_sy(q + 6 * p - 2, -tp(6 * p * p + p * q));
  for (int k = 1; k <= 2 * p - 2; ++k) {
    const int sign = ((k - 1) / 2) % 2 == 0 ? 1 : -1;
    const int e = 6 * p * p + p * q - closed_sum_drop(k);
    const int idx = q + 6 * p - 3 * k - (k % 2) - 2;
    // the sum term is S_idx (t^2 + y)
    r.add_s(idx, Laurent::t_pow(e + 2, Rat(sign)));
    r.add_sy(idx, Laurent::t_pow(e, Rat(sign)));
  }
  // tail: (-1)^(p-1) t^(pq-2p) S_(q-2) (t^2 + y)
  const int sign_p = (p - 1) % 2 == 0 ? 1 : -1;
  const int e0 = p * q - 2 * p;
  r.add_s(q - 2, Laurent::t_pow(e0 + 2, Rat(sign_p)));
  r.add_sy(q - 2, Laurent::t_pow(e0, Rat(sign_p)));
  return r;
}

}  // namespace

ModuleElt pi_closed(int p, int q, Chirality c) {
  if (p < 1) throw std::invalid_argument("pi_closed requires p >= 1");
  if (c == Chirality::Right) return mirror(pi_closed_left(p, -q));
  return pi_closed_left(p, q);
}

ModuleElt act_y_closed(int p, int q, Chirality c) {
  if (p < 1) throw std::invalid_argument("act_y_closed requires p >= 1");
  if (c == Chirality::Right) return mirror(act_y_closed_left(p, -q));
  return act_y_closed_left(p, q);
}

TorusSkein peripheral_y(Chirality c) {
  TorusSkein u;
  u.add_term(1, -4, tp(4));
  u.add_term(1, -2, -tp(-2));
  u.add_term(0, 4, tp(2));
  u.add_term(0, 2, -tp(6));
  u.add_unit(tp(-2) - tp(6));
  return c == Chirality::Right ? mirror(u) : u;
}

Laurent y_image_factor(Chirality c) {
  Laurent f = tp(4) - tp(-4);
  return c == Chirality::Right ? f.invert_t() : f;
}

ModuleEltR y_power(int k, Chirality c) {
  if (k < 1 || k > 3) throw std::invalid_argument("y_power supports k in {1,2,3}");
  ModuleEltR v = ModuleEltR::y();
  const RatFunc inv = RatFunc(1) / RatFunc(y_image_factor(c));
  const TorusSkeinR p = lift(peripheral_y(c));
  for (int i = 1; i < k; ++i) v = inv * act(p, v, c);
  return v;
}

}  // namespace skeinlab

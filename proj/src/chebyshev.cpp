#include "skeinlab/chebyshev.hpp"

#include <cstdlib>
#include <stdexcept>

namespace skeinlab {

void PolyX::add(int k, const Laurent& c) {
  if (k < 0) throw std::invalid_argument("negative basis index in PolyX");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

namespace {

// Power-basis coefficient rows of T_0..T_n or S_0..S_n via the shared
// recurrence F_{k+1} = x F_k - F_{k-1}.
std::vector<std::vector<Rat>> family_rows(int n, bool t_family) {
  std::vector<std::vector<Rat>> rows;
  rows.push_back({Rat(t_family ? 2 : 1)});
  if (n >= 1) rows.push_back({Rat(0), Rat(1)});
  for (int k = 2; k <= n; ++k) {
    std::vector<Rat> next(k + 1, Rat(0));
    for (size_t d = 0; d < rows[k - 1].size(); ++d)
      next[d + 1] += rows[k - 1][d];
    for (size_t d = 0; d < rows[k - 2].size(); ++d)
      next[d] -= rows[k - 2][d];
    rows.push_back(std::move(next));
  }
  return rows;
}

PolyX from_row(const std::vector<Rat>& row) {
  PolyX p;
  p.basis = Basis::Power;
  for (size_t d = 0; d < row.size(); ++d)
    if (row[d] != 0) p.coeffs[static_cast<int>(d)] = Laurent(row[d]);
  return p;
}

PolyX scaled(PolyX p, const Laurent& c) {
  PolyX r;
  r.basis = p.basis;
  for (auto& [k, a] : p.coeffs) {
    Laurent v = a * c;
    if (!v.is_zero()) r.coeffs[k] = v;
  }
  return r;
}

PolyX to_power(const PolyX& p) {
  if (p.basis == Basis::Power) return p;
  PolyX r;
  r.basis = Basis::Power;
  for (const auto& [k, c] : p.coeffs) {
    PolyX base = (p.basis == Basis::T) ? (k == 0 ? from_row({Rat(1)}) : t_poly(k))
                                       : s_poly(k);
    for (const auto& [d, a] : scaled(base, c).coeffs) r.add(d, a);
  }
  return r;
}

// Reduces a power-basis polynomial against T or S rows, top degree first.
PolyX power_to(const PolyX& p, Basis target) {
  PolyX r;
  r.basis = target;
  if (p.is_zero()) return r;
  int deg = p.coeffs.rbegin()->first;
  auto rows = family_rows(deg, target == Basis::T);
  std::map<int, Laurent> work = p.coeffs;
  for (int d = deg; d >= 1; --d) {
    auto it = work.find(d);
    if (it == work.end()) continue;
    Laurent c = it->second;
    work.erase(it);
    r.add(d, c);
    const auto& row = rows[d];
    for (size_t j = 0; j + 1 < row.size(); ++j) {
      if (row[j] == 0) continue;
      Laurent v = Laurent(-row[j]) * c;
      auto [jt, ins] = work.emplace(static_cast<int>(j), v);
      if (!ins) {
        jt->second += v;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  auto c0 = work.find(0);
  if (c0 != work.end()) r.add(0, c0->second);
  return r;
}

}  // namespace

PolyX t_poly(int n) {
  n = std::abs(n);
  return from_row(family_rows(n, true)[n]);
}

PolyX s_poly(int n) {
  if (n == -1) return PolyX{};
  if (n < -1) return scaled(s_poly(-n - 2), Laurent(-1));
  return from_row(family_rows(n, false)[n]);
}

PolyX convert(const PolyX& p, Basis target) {
  if (p.basis == target) return p;
  // S <-> T are triangular with unit steps, handled directly.
  if (p.basis == Basis::T && target == Basis::S) {
    PolyX r;
    r.basis = Basis::S;
    for (const auto& [k, c] : p.coeffs) {
      r.add(k, c);  // T_k = S_k - S_{k-2}; index 0 is the shared constant
      if (k >= 2) r.add(k - 2, -c);
    }
    return r;
  }
  if (p.basis == Basis::S && target == Basis::T) {
    PolyX r;
    r.basis = Basis::T;
    for (const auto& [k, c] : p.coeffs)
      for (int j = k; j >= 1; j -= 2) r.add(j, c);
    for (const auto& [k, c] : p.coeffs)
      if (k % 2 == 0) r.add(0, c);  // even S_k ends in the constant 1
    return r;
  }
  if (target == Basis::Power) return to_power(p);
  return power_to(to_power(p), target);
}

std::vector<std::pair<int, Laurent>> s_index_normalize(int n, const Laurent& c) {
  if (c.is_zero() || n == -1) return {};
  if (n >= 0) return {{n, c}};
  return {{-n - 2, -c}};
}

PolyX poly_mul(const PolyX& a, const PolyX& b) {
  PolyX pa = convert(a, Basis::Power), pb = convert(b, Basis::Power);
  PolyX r;
  r.basis = Basis::Power;
  for (const auto& [da, ca] : pa.coeffs)
    for (const auto& [db, cb] : pb.coeffs) r.add(da + db, ca * cb);
  return r;
}

}  // namespace skeinlab

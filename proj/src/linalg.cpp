#include "skeinlab/linalg.hpp"

#include <stdexcept>

namespace skeinlab {

std::vector<int> rref(RMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  for (auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");

  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    if (!m[r][c].is_one()) {
      const RatFunc inv = RatFunc(1) / m[r][c];
      for (size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[r][j] *= inv;
    }
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const RatFunc f = m[i][c];
      for (size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

std::optional<RVec> solve(const RMat& a, const RVec& b) {
  const size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("dimension mismatch");
  const size_t cols = rows == 0 ? 0 : a[0].size();
  RMat aug(rows, RVec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols))
    return std::nullopt;  // pivot in the augmented column
  RVec x(cols);
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
  return x;
}

std::vector<RVec> nullspace(const RMat& a) {
  RMat m = a;
  std::vector<int> pivots = rref(m);
  const size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RVec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVec v(cols);
    v[f] = RatFunc(1);
    for (size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -m[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// strips the common content of a row (entries + rhs): t-power, rational
// scale, and the common polynomial factor. Without the polynomial part the
// fraction-free updates accumulate pivot factors and entry degrees blow up.
void strip_content(SparseRow& row, Laurent& rhs) {
  Laurent g;
  int shift = 0;
  bool first = true;
  auto feed = [&](const Laurent& e) {
    if (e.is_zero()) return;
    if (first) {
      g = primitive_part(e.shifted(-e.min_exp()));
      shift = e.min_exp();
      first = false;
    } else {
      if (g.max_exp() != 0) g = poly_gcd(g, e.shifted(-e.min_exp()));
      shift = std::min(shift, e.min_exp());
    }
  };
  for (const auto& [c, e] : row) feed(e);
  feed(rhs);
  if (first) return;
  // divide out t^shift * g, then the remaining rational content
  Int den_lcm = 1, num_gcd = 0;
  auto divide = [&](Laurent& e) {
    if (e.is_zero()) return;
    const int s = e.min_exp();
    e = poly_divmod(e.shifted(-s), g).first.shifted(s - shift);
    for (const auto& [k, c] : e.terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              c.get_den().get_mpz_t());
      Int n = c.get_num();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
  };
  for (auto& [c, e] : row) divide(e);
  divide(rhs);
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale == 1) return;
  const Laurent f(scale);
  for (auto& [c, e] : row) e *= f;
  if (!rhs.is_zero()) rhs *= f;
}

}  // namespace

std::optional<RVec> sparse_solve(std::vector<SparseRow> rows,
                                 std::vector<Laurent> rhs, int ncols) {
  const size_t nrows = rows.size();
  if (rhs.size() != nrows) throw std::invalid_argument("dimension mismatch");
  for (size_t i = 0; i < nrows; ++i) strip_content(rows[i], rhs[i]);

  std::vector<bool> row_used(nrows, false), col_done(ncols, false);
  std::vector<std::pair<int, size_t>> pivots;  // (column, row)

  for (;;) {
    // column with fewest nonzeros among active rows, then lowest index
    std::vector<int> col_count(ncols, 0);
    for (size_t i = 0; i < nrows; ++i) {
      if (row_used[i]) continue;
      for (const auto& [c, e] : rows[i])
        if (!col_done[c]) ++col_count[c];
    }
    int pc = -1;
    for (int c = 0; c < ncols; ++c)
      if (col_count[c] > 0 && (pc < 0 || col_count[c] < col_count[pc])) pc = c;
    if (pc < 0) break;
    // row with fewest entries, then lowest index
    size_t pr = nrows;
    for (size_t i = 0; i < nrows; ++i) {
      if (row_used[i] || !rows[i].count(pc)) continue;
      if (pr == nrows || rows[i].size() < rows[pr].size()) pr = i;
    }
    const Laurent p = rows[pr].at(pc);
    for (size_t i = 0; i < nrows; ++i) {
      if (i == pr || row_used[i]) continue;
      auto it = rows[i].find(pc);
      if (it == rows[i].end()) continue;
      const Laurent a = it->second;
      SparseRow next;
      for (const auto& [c, e] : rows[i]) next[c] = e * p;
      for (const auto& [c, e] : rows[pr]) {
        auto [jt, inserted] = next.emplace(c, -(e * a));
        if (!inserted) {
          jt->second -= e * a;
          if (jt->second.is_zero()) next.erase(jt);
        }
      }
      rhs[i] = rhs[i] * p - rhs[pr] * a;
      rows[i] = std::move(next);
      strip_content(rows[i], rhs[i]);
    }
    row_used[pr] = true;
    col_done[pc] = true;
    pivots.push_back({pc, pr});
  }

  // inconsistent iff an unused row has empty coefficients but nonzero rhs
  for (size_t i = 0; i < nrows; ++i)
    if (!row_used[i] && rows[i].empty() && !rhs[i].is_zero())
      return std::nullopt;

  RVec x(ncols);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto& [c, r] = *it;
    RatFunc acc(rhs[r]);
    for (const auto& [cc, e] : rows[r]) {
      if (cc == c || x[cc].is_zero()) continue;
      acc -= RatFunc(e) * x[cc];
    }
    x[c] = acc / RatFunc(rows[r].at(c));
  }
  // replay against the reduced rows; a mismatch is an elimination bug
  for (size_t i = 0; i < nrows; ++i) {
    RatFunc acc;
    for (const auto& [c, e] : rows[i])
      if (!x[c].is_zero()) acc += RatFunc(e) * x[c];
    if (!(acc == RatFunc(rhs[i])))
      throw std::logic_error("sparse_solve: back-substitution mismatch");
  }
  return x;
}

SolveOutcome solve_linear(const RMat& a, const RVec* b) {
  SolveOutcome out;
  if (b == nullptr) {
    out.kind = SolveOutcome::Kind::Nullspace;
    out.basis = nullspace(a);
    return out;
  }
  auto x = solve(a, *b);
  if (x) {
    out.kind = SolveOutcome::Kind::Solution;
    out.solution = std::move(*x);
  } else {
    out.kind = SolveOutcome::Kind::NoSolution;
  }
  return out;
}

}  // namespace skeinlab

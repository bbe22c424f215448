#pragma once

#include <optional>
#include <vector>

#include "skeinlab/ratfunc.hpp"

namespace skeinlab {

using RVec = std::vector<RatFunc>;
using RMat = std::vector<RVec>;

// In-place reduced row echelon form with a deterministic pivot rule: columns
// left to right, pivot in the lowest-index unused row with a nonzero entry.
// Returns the pivot columns in order.
std::vector<int> rref(RMat& m);

// Particular solution of A x = b with free variables set to zero, or nullopt
// when the system is inconsistent.
std::optional<RVec> solve(const RMat& a, const RVec& b);

// Nullspace basis in echelon-complement form: one vector per free column,
// with a 1 in the free coordinate.
std::vector<RVec> nullspace(const RMat& a);

// Single-entry-point variant mirroring the two uses above.
struct SolveOutcome {
  enum class Kind { Solution, Nullspace, NoSolution };
  Kind kind;
  RVec solution;              // Kind::Solution
  std::vector<RVec> basis;    // Kind::Nullspace
};

SolveOutcome solve_linear(const RMat& a, const RVec* b);

// Sparse exact solver for the large structured systems of the membership
// searches. Rows are sparse Laurent vectors over columns 0..ncols-1; returns
// a particular solution with free variables zero, or nullopt when
// inconsistent. Fraction-free elimination with deterministic minimum-fill
// pivoting; per-row content stripping keeps coefficients small.
using SparseRow = std::map<int, Laurent>;
std::optional<RVec> sparse_solve(std::vector<SparseRow> rows,
                                 std::vector<Laurent> rhs, int ncols);

}  // namespace skeinlab

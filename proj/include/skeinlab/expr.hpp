#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "skeinlab/qtorus.hpp"
#include "skeinlab/trefoil.hpp"

namespace skeinlab {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

// Abstract syntax: sums and differences of noncommutative products of atoms.
// Atoms: T(p,q), JW(p,q), e(p,q), S(n), l, m, x, y, t^k, rational literals.
// l and m additionally take an optional integer exponent so every element of
// the noncommutative torus can be written back out.
struct Expr {
  enum class Kind { Add, Sub, Mul, Neg, Atom, Literal };
  enum class Atom { T, JW, E, S, L, M, X, Y, TPow };

  Kind kind = Kind::Literal;
  Atom atom = Atom::TPow;
  int a = 0, b = 0;  // atom arguments; TPow/L/M exponent in a
  Rat value;         // literal
  std::vector<Expr> kids;
};

Expr parse(const std::string& input);

enum class Family { Scalar, Skein, QTorus, Module };

// The least family containing all atoms of the expression; mixing skein,
// torus and module atoms raises ParseError with both families named.
Family infer_family(const Expr& e);

TorusSkein lower_skein(const Expr& e);
QTorusPoly lower_qtorus(const Expr& e);
ModuleElt lower_module(const Expr& e);
Laurent lower_scalar(const Expr& e);

// One lowered value of any family.
using Lowered = std::variant<Laurent, TorusSkein, QTorusPoly, ModuleElt>;
Lowered lower(const Expr& e);

}  // namespace skeinlab

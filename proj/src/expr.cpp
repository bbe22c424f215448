#include "skeinlab/expr.hpp"

#include <cctype>

namespace skeinlab {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };
  Kind kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      advance();
    const int line = line_, col = col_;
    if (pos_ >= s_.size()) return {Token::Kind::End, "", line, col};
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        text += s_[pos_];
        advance();
      }
      if (pos_ < s_.size() && s_[pos_] == '/') {
        size_t save_pos = pos_;
        int save_line = line_, save_col = col_;
        advance();
        std::string den;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          den += s_[pos_];
          advance();
        }
        if (den.empty()) {
          pos_ = save_pos;  // lone '/': not part of a literal
          line_ = save_line;
          col_ = save_col;
        } else {
          text += "/" + den;
        }
      }
      return {Token::Kind::Number, text, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
        text += s_[pos_];
        advance();
      }
      return {Token::Kind::Ident, text, line, col};
    }
    advance();
    switch (c) {
      case '+': return {Token::Kind::Plus, "+", line, col};
      case '-': return {Token::Kind::Minus, "-", line, col};
      case '*': return {Token::Kind::Star, "*", line, col};
      case '^': return {Token::Kind::Caret, "^", line, col};
      case '(': return {Token::Kind::LParen, "(", line, col};
      case ')': return {Token::Kind::RParen, ")", line, col};
      case ',': return {Token::Kind::Comma, ",", line, col};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lexer_(s) { bump(); }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
      Expr node;
      node.kind = tok_.kind == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      bump();
      node.kids.push_back(std::move(lhs));
      node.kids.push_back(parse_term());
      lhs = std::move(node);
    }
    return lhs;
  }

  void expect_end() {
    if (tok_.kind != Token::Kind::End)
      throw ParseError("trailing input '" + tok_.text + "'", tok_.line, tok_.col);
  }

 private:
  void bump() { tok_ = lexer_.next(); }

  void expect(Token::Kind k, const char* what) {
    if (tok_.kind != k)
      throw ParseError(std::string("expected ") + what, tok_.line, tok_.col);
    bump();
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    while (tok_.kind == Token::Kind::Star) {
      Expr node;
      node.kind = Expr::Kind::Mul;
      bump();
      node.kids.push_back(std::move(lhs));
      node.kids.push_back(parse_factor());
      lhs = std::move(node);
    }
    return lhs;
  }

  Expr parse_factor() {
    if (tok_.kind == Token::Kind::Minus) {
      Expr node;
      node.kind = Expr::Kind::Neg;
      bump();
      node.kids.push_back(parse_factor());
      return node;
    }
    if (tok_.kind == Token::Kind::Number) {
      Expr node;
      node.kind = Expr::Kind::Literal;
      node.value = rat_from_string(tok_.text);
      bump();
      return node;
    }
    if (tok_.kind == Token::Kind::LParen) {
      bump();
      Expr inner = parse_expr();
      expect(Token::Kind::RParen, "')'");
      return inner;
    }
    if (tok_.kind == Token::Kind::Ident) return parse_atom();
    throw ParseError("expected an atom, literal or '('", tok_.line, tok_.col);
  }

  int parse_int() {
    bool neg = false;
    if (tok_.kind == Token::Kind::Minus || tok_.kind == Token::Kind::Plus) {
      neg = tok_.kind == Token::Kind::Minus;
      bump();
    }
    if (tok_.kind != Token::Kind::Number || tok_.text.find('/') != std::string::npos)
      throw ParseError("expected an integer", tok_.line, tok_.col);
    const int v = std::stoi(tok_.text);
    bump();
    return neg ? -v : v;
  }

  int parse_exponent() {  // caller sits on '^'
    bump();
    return parse_int();
  }

  Expr parse_atom() {
    const Token name = tok_;
    bump();
    Expr node;
    node.kind = Expr::Kind::Atom;
    if (name.text == "T" || name.text == "JW" || name.text == "e") {
      node.atom = name.text == "T"    ? Expr::Atom::T
                  : name.text == "JW" ? Expr::Atom::JW
                                      : Expr::Atom::E;
      expect(Token::Kind::LParen, "'('");
      node.a = parse_int();
      expect(Token::Kind::Comma, "','");
      node.b = parse_int();
      expect(Token::Kind::RParen, "')'");
      return node;
    }
    if (name.text == "S") {
      node.atom = Expr::Atom::S;
      expect(Token::Kind::LParen, "'('");
      node.a = parse_int();
      expect(Token::Kind::RParen, "')'");
      return node;
    }
    if (name.text == "t") {
      node.atom = Expr::Atom::TPow;
      node.a = tok_.kind == Token::Kind::Caret ? parse_exponent() : 1;
      return node;
    }
    if (name.text == "l" || name.text == "m") {
      node.atom = name.text == "l" ? Expr::Atom::L : Expr::Atom::M;
      node.a = tok_.kind == Token::Kind::Caret ? parse_exponent() : 1;
      return node;
    }
    if (name.text == "x") {
      node.atom = Expr::Atom::X;
      return node;
    }
    if (name.text == "y") {
      node.atom = Expr::Atom::Y;
      return node;
    }
    throw ParseError("unknown atom '" + name.text + "'", name.line, name.col);
  }

  Lexer lexer_;
  Token tok_{Token::Kind::End, "", 0, 0};
};

const char* family_name(Family f) {
  switch (f) {
    case Family::Scalar: return "scalar";
    case Family::Skein: return "torus skein";
    case Family::QTorus: return "noncommutative torus";
    case Family::Module: return "trefoil module";
  }
  return "?";
}

Family atom_family(Expr::Atom a) {
  switch (a) {
    case Expr::Atom::T:
    case Expr::Atom::JW: return Family::Skein;
    case Expr::Atom::E:
    case Expr::Atom::L:
    case Expr::Atom::M: return Family::QTorus;
    case Expr::Atom::S:
    case Expr::Atom::X:
    case Expr::Atom::Y: return Family::Module;
    case Expr::Atom::TPow: return Family::Scalar;
  }
  return Family::Scalar;
}

void scan_family(const Expr& e, Family& acc) {
  if (e.kind == Expr::Kind::Atom) {
    Family f = atom_family(e.atom);
    if (f == Family::Scalar) return;
    if (acc == Family::Scalar) {
      acc = f;
    } else if (acc != f) {
      throw ParseError(std::string("expression mixes ") + family_name(acc) +
                           " and " + family_name(f) + " atoms",
                       1, 1);
    }
    return;
  }
  for (const Expr& k : e.kids) scan_family(k, acc);
}

// Multiplication inside the module: polynomials in x multiply either side
// (disjoint curves commute); a product of two y-carrying values has no basis
// expression. S_m S_n = S_{m+n} + S_{m+n-2} + ... + S_{|m-n|}.
ModuleElt module_mul(const ModuleElt& lhs, const ModuleElt& rhs) {
  const bool ly = !lhs.sy.empty(), ry = !rhs.sy.empty();
  if (ly && ry)
    throw ParseError(
        "a product of two y-carrying module values is not a basis expression",
        1, 1);
  const ModuleElt& poly = ly ? rhs : lhs;
  const ModuleElt& other = ly ? lhs : rhs;
  ModuleElt r;
  for (const auto& [m, cm] : poly.s) {
    for (const auto& [n, cn] : other.s)
      for (int k = std::abs(m - n); k <= m + n; k += 2) r.add_s(k, cm * cn);
    for (const auto& [n, cn] : other.sy)
      for (int k = std::abs(m - n); k <= m + n; k += 2) r.add_sy(k, cm * cn);
  }
  return r;
}

template <class V, class MulFn, class AtomFn>
V eval(const Expr& e, MulFn&& mul_fn, AtomFn&& atom_fn) {
  switch (e.kind) {
    case Expr::Kind::Add:
      return eval<V>(e.kids[0], mul_fn, atom_fn) +
             eval<V>(e.kids[1], mul_fn, atom_fn);
    case Expr::Kind::Sub:
      return eval<V>(e.kids[0], mul_fn, atom_fn) -
             eval<V>(e.kids[1], mul_fn, atom_fn);
    case Expr::Kind::Mul:
      return mul_fn(eval<V>(e.kids[0], mul_fn, atom_fn),
                    eval<V>(e.kids[1], mul_fn, atom_fn));
    case Expr::Kind::Neg:
      return -eval<V>(e.kids[0], mul_fn, atom_fn);
    default:
      return atom_fn(e);
  }
}

}  // namespace

Expr parse(const std::string& input) {
  Parser p(input);
  Expr e = p.parse_expr();
  p.expect_end();
  return e;
}

Family infer_family(const Expr& e) {
  Family f = Family::Scalar;
  scan_family(e, f);
  return f;
}

TorusSkein lower_skein(const Expr& e) {
  return eval<TorusSkein>(
      e, [](const TorusSkein& a, const TorusSkein& b) { return mul(a, b); },
      [](const Expr& at) -> TorusSkein {
        TorusSkein r;
        if (at.kind == Expr::Kind::Literal) {
          r.add_unit(Laurent(at.value));
          return r;
        }
        switch (at.atom) {
          case Expr::Atom::T:
            r.add_term(at.a, at.b, Laurent(1));
            return r;
          case Expr::Atom::JW:
            return jw_to_t(at.a, at.b);
          case Expr::Atom::TPow:
            r.add_unit(Laurent::t_pow(at.a));
            return r;
          default:
            throw ParseError("atom does not belong to the torus skein family", 1, 1);
        }
      });
}

QTorusPoly lower_qtorus(const Expr& e) {
  return eval<QTorusPoly>(
      e, [](const QTorusPoly& a, const QTorusPoly& b) { return qt_mul(a, b); },
      [](const Expr& at) -> QTorusPoly {
        if (at.kind == Expr::Kind::Literal)
          return QTorusPoly::monomial(0, 0, Laurent(at.value));
        switch (at.atom) {
          case Expr::Atom::E:
            return e_monomial(at.a, at.b);
          case Expr::Atom::L:
            return QTorusPoly::monomial(at.a, 0);
          case Expr::Atom::M:
            return QTorusPoly::monomial(0, at.a);
          case Expr::Atom::TPow:
            return QTorusPoly::monomial(0, 0, Laurent::t_pow(at.a));
          default:
            throw ParseError("atom does not belong to the torus family", 1, 1);
        }
      });
}

ModuleElt lower_module(const Expr& e) {
  return eval<ModuleElt>(e, module_mul, [](const Expr& at) -> ModuleElt {
    ModuleElt r;
    if (at.kind == Expr::Kind::Literal) {
      r.add_s(0, Laurent(at.value));
      return r;
    }
    switch (at.atom) {
      case Expr::Atom::S:
        r.add_s(at.a, Laurent(1));
        return r;
      case Expr::Atom::X:
        r.add_s(1, Laurent(1));
        return r;
      case Expr::Atom::Y:
        r.add_sy(0, Laurent(1));
        return r;
      case Expr::Atom::TPow:
        r.add_s(0, Laurent::t_pow(at.a));
        return r;
      default:
        throw ParseError("atom does not belong to the module family", 1, 1);
    }
  });
}

Laurent lower_scalar(const Expr& e) {
  return eval<Laurent>(
      e, [](const Laurent& a, const Laurent& b) { return a * b; },
      [](const Expr& at) -> Laurent {
        if (at.kind == Expr::Kind::Literal) return Laurent(at.value);
        if (at.atom == Expr::Atom::TPow) return Laurent::t_pow(at.a);
        throw ParseError("non-scalar atom in a scalar expression", 1, 1);
      });
}

Lowered lower(const Expr& e) {
  switch (infer_family(e)) {
    case Family::Scalar: return lower_scalar(e);
    case Family::Skein: return lower_skein(e);
    case Family::QTorus: return lower_qtorus(e);
    case Family::Module: return lower_module(e);
  }
  return Laurent();
}

}  // namespace skeinlab

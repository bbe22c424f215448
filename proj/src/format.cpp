#include "skeinlab/format.hpp"

#include <sstream>

#include "skeinlab/json_io.hpp"

namespace skeinlab {

namespace {

// one term "coefficient * atom" with the sign pulled out front
struct Piece {
  bool negative = false;
  std::string text;
};

Piece coeff_atom(const Laurent& c, const std::string& atom) {
  Piece p;
  if (c.terms().size() == 1) {
    const auto& [e, r] = *c.terms().begin();
    Rat mag = r;
    if (mag < 0) {
      p.negative = true;
      mag = -mag;
    }
    std::string factor;
    if (mag != 1 || (e == 0 && atom.empty())) factor = rat_to_string(mag);
    if (e != 0) {
      if (!factor.empty()) factor += "*";
      factor += e == 1 ? "t" : "t^" + std::to_string(e);
    }
    if (atom.empty()) {
      p.text = factor;
    } else if (factor.empty()) {
      p.text = atom;
    } else {
      p.text = factor + "*" + atom;
    }
    return p;
  }
  p.text = "(" + c.str() + ")";
  if (!atom.empty()) p.text += "*" + atom;
  return p;
}

std::string join(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      if (pieces[i].negative) os << "-";
    } else {
      os << (pieces[i].negative ? " - " : " + ");
    }
    os << pieces[i].text;
  }
  return os.str();
}

std::string qmono_atom(int l, int m) {
  std::string s;
  if (l != 0) s += l == 1 ? "l" : "l^" + std::to_string(l);
  if (m != 0) {
    if (!s.empty()) s += "*";
    s += m == 1 ? "m" : "m^" + std::to_string(m);
  }
  return s;
}

}  // namespace

std::string format(const Laurent& v, FormatMode mode) {
  if (mode == FormatMode::Json) return to_json(v).dump();
  return v.str();
}

std::string format(const TorusSkein& v, FormatMode mode) {
  if (mode == FormatMode::Json) return to_json(v).dump();
  std::vector<Piece> pieces;
  for (const auto& [l, c] : v.terms)
    pieces.push_back(coeff_atom(
        c, "T(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")"));
  if (!v.unit.is_zero()) pieces.push_back(coeff_atom(v.unit, ""));
  return join(pieces);
}

std::string format(const QTorusPoly& v, FormatMode mode) {
  if (mode == FormatMode::Json) return to_json(v).dump();
  std::vector<Piece> pieces;
  for (const auto& [k, c] : v.terms)
    pieces.push_back(coeff_atom(c, qmono_atom(k.l, k.m)));
  return join(pieces);
}

std::string format(const ModuleElt& v, FormatMode mode) {
  if (mode == FormatMode::Json) return to_json(v).dump();
  std::vector<Piece> pieces;
  for (auto it = v.s.rbegin(); it != v.s.rend(); ++it)
    pieces.push_back(coeff_atom(it->second, "S(" + std::to_string(it->first) + ")"));
  for (auto it = v.sy.rbegin(); it != v.sy.rend(); ++it)
    pieces.push_back(
        coeff_atom(it->second, "S(" + std::to_string(it->first) + ")*y"));
  return join(pieces);
}

std::string format(const Lowered& v, FormatMode mode) {
  return std::visit([&](const auto& x) { return format(x, mode); }, v);
}

}  // namespace skeinlab

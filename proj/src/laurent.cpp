#include "skeinlab/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace skeinlab {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' ||
              ((c == '-' || c == '+') && (i == 0 || s[i - 1] == '/'));
    if (!ok) throw std::invalid_argument("malformed rational literal: " + s);
  }
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

Laurent::Laurent(long c) {
  if (c != 0) terms_[0] = Rat(c);
}

Laurent::Laurent(const Rat& c_in) {
  Rat c = c_in;
  c.canonicalize();
  if (c != 0) terms_[0] = c;
}

Laurent Laurent::t_pow(int e, const Rat& c_in) {
  Rat c = c_in;
  c.canonicalize();
  Laurent r;
  if (c != 0) r.terms_[e] = c;
  return r;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

int Laurent::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int Laurent::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

Rat Laurent::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Laurent::add_term(int e, const Rat& c_in) {
  Rat c = c_in;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

Laurent Laurent::invert_t() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

Rat Laurent::eval(const Rat& t0_in) const {
  Rat t0 = t0_in;
  t0.canonicalize();
  if (t0 == 0) throw std::domain_error("specialization at t = 0");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat p(1);
    Rat base = e >= 0 ? t0 : Rat(1) / t0;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
    acc += c * p;
  }
  return acc;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest exponent first, matching the usual written order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat c = it->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    int e = it->first;
    if (e == 0) {
      os << rat_to_string(c);
    } else {
      if (c == -1)
        os << "-";
      else if (c != 1)
        os << rat_to_string(c) << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace skeinlab

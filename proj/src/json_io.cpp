#include "skeinlab/json_io.hpp"

#include <stdexcept>

namespace skeinlab {

Json to_json(const Laurent& v) {
  Json j = Json::object();
  for (const auto& [e, c] : v.terms()) j[std::to_string(e)] = rat_to_string(c);
  return j;
}

Json to_json(const RatFunc& v) {
  return Json{{"num", to_json(v.num())}, {"den", to_json(v.den())}};
}

Json to_json(const PolyX& v) {
  const char* basis = v.basis == Basis::Power ? "power"
                      : v.basis == Basis::T  ? "T"
                                             : "S";
  Json coeffs = Json::object();
  for (const auto& [k, c] : v.coeffs) coeffs[std::to_string(k)] = to_json(c);
  return Json{{"basis", basis}, {"coeffs", coeffs}};
}

Json to_json(const TorusSkein& v) {
  Json terms = Json::array();
  for (const auto& [l, c] : v.terms)
    terms.push_back(Json{{"p", l.p}, {"q", l.q}, {"c", to_json(c)}});
  return Json{{"type", "torus_skein"}, {"unit", to_json(v.unit)}, {"terms", terms}};
}

Json to_json(const QTorusPoly& v) {
  Json terms = Json::array();
  for (const auto& [k, c] : v.terms)
    terms.push_back(Json{{"l", k.l}, {"m", k.m}, {"c", to_json(c)}});
  return Json{{"type", "qtorus"}, {"terms", terms}};
}

Json to_json(const PlanePoly& v) { return to_json(v.poly()); }

Json to_json(const ModuleElt& v) {
  Json s = Json::array(), sy = Json::array();
  for (const auto& [n, c] : v.s) s.push_back(Json{{"n", n}, {"c", to_json(c)}});
  for (const auto& [n, c] : v.sy) sy.push_back(Json{{"n", n}, {"c", to_json(c)}});
  return Json{{"type", "module_elt"}, {"s", s}, {"sy", sy}};
}

Json to_json(const SkeinCertificate& v) {
  Json combo = Json::array();
  for (const SkeinCertEntry& e : v.combination)
    combo.push_back(Json{{"multiplier", to_json(e.multiplier)},
                         {"coeff", to_json(e.coeff)},
                         {"gen", e.gen}});
  return Json{{"target", to_json(v.target)}, {"combination", combo}};
}

Json to_json(const PlaneCertificate& v) {
  Json combo = Json::array();
  for (const PlaneCertEntry& e : v.combination)
    combo.push_back(Json{{"multiplier", Json{{"l", e.multiplier.l}, {"m", e.multiplier.m}}},
                         {"coeff", to_json(e.coeff)},
                         {"gen", e.gen}});
  return Json{{"target", to_json(v.target)},
              {"ambient", v.ambient == Ambient::Trig ? "trig" : "plane"},
              {"combination", combo}};
}

Json to_json(const Lowered& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

Laurent laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a coefficient object");
  Laurent r;
  for (const auto& [key, val] : j.items())
    r.add_term(std::stoi(key), rat_from_string(val.get<std::string>()));
  return r;
}

RatFunc ratfunc_from_json(const Json& j) {
  return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

PolyX polyx_from_json(const Json& j) {
  PolyX r;
  const std::string basis = j.at("basis").get<std::string>();
  r.basis = basis == "power" ? Basis::Power : basis == "T" ? Basis::T : Basis::S;
  for (const auto& [key, val] : j.at("coeffs").items())
    r.add(std::stoi(key), laurent_from_json(val));
  return r;
}

TorusSkein torus_skein_from_json(const Json& j) {
  TorusSkein r;
  if (j.contains("unit")) r.add_unit(laurent_from_json(j.at("unit")));
  for (const Json& term : j.at("terms"))
    r.add_term(term.at("p").get<int>(), term.at("q").get<int>(),
               laurent_from_json(term.at("c")));
  return r;
}

QTorusPoly qtorus_from_json(const Json& j) {
  QTorusPoly r;
  for (const Json& term : j.at("terms"))
    r.add_term(term.at("l").get<int>(), term.at("m").get<int>(),
               laurent_from_json(term.at("c")));
  return r;
}

ModuleElt module_elt_from_json(const Json& j) {
  ModuleElt r;
  for (const Json& term : j.at("s"))
    r.add_s(term.at("n").get<int>(), laurent_from_json(term.at("c")));
  for (const Json& term : j.at("sy"))
    r.add_sy(term.at("n").get<int>(), laurent_from_json(term.at("c")));
  return r;
}

std::vector<TorusSkein> skein_list_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("generator file must be a JSON array");
  std::vector<TorusSkein> out;
  for (const Json& item : j) out.push_back(torus_skein_from_json(item));
  return out;
}

}  // namespace skeinlab

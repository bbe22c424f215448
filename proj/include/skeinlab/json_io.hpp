#pragma once

#include <json.hpp>

#include "skeinlab/chebyshev.hpp"
#include "skeinlab/expr.hpp"
#include "skeinlab/ideal.hpp"

namespace skeinlab {

using Json = nlohmann::ordered_json;

Json to_json(const Laurent& v);
Json to_json(const RatFunc& v);
Json to_json(const PolyX& v);
Json to_json(const TorusSkein& v);
Json to_json(const QTorusPoly& v);
Json to_json(const PlanePoly& v);
Json to_json(const ModuleElt& v);
Json to_json(const SkeinCertificate& v);
Json to_json(const PlaneCertificate& v);
Json to_json(const Lowered& v);

Laurent laurent_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
PolyX polyx_from_json(const Json& j);
TorusSkein torus_skein_from_json(const Json& j);
QTorusPoly qtorus_from_json(const Json& j);
ModuleElt module_elt_from_json(const Json& j);

// A generator file is a JSON array of serialized torus skeins.
std::vector<TorusSkein> skein_list_from_json(const Json& j);

}  // namespace skeinlab

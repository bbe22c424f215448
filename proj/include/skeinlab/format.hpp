#pragma once

#include <string>

#include "skeinlab/expr.hpp"

namespace skeinlab {

enum class FormatMode { Text, Json };

// Text output reparses to an equal value; terms follow a deterministic
// order (ascending labels for skeins and torus polynomials, descending
// S index within each module part).
std::string format(const Laurent& v, FormatMode mode = FormatMode::Text);
std::string format(const TorusSkein& v, FormatMode mode = FormatMode::Text);
std::string format(const QTorusPoly& v, FormatMode mode = FormatMode::Text);
std::string format(const ModuleElt& v, FormatMode mode = FormatMode::Text);
std::string format(const Lowered& v, FormatMode mode = FormatMode::Text);

}  // namespace skeinlab

#pragma once

#include <gmpxx.h>
#include <string>

namespace skeinlab {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p" or "p/q" (optional leading sign) into a canonical rational.
// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

}  // namespace skeinlab

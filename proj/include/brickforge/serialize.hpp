#pragma once

// Line-oriented text and JSON serialization for polytopes and fans. Entries
// are always written as "p/q" in lowest terms, so both formats round-trip
// bit-exactly.

#include "brickforge/fan.hpp"
#include "brickforge/polytope.hpp"

#include <iosfwd>
#include <string>

namespace brickforge {

std::string polytope_to_text(const VPolytope& p);
VPolytope polytope_from_text(const std::string& text);

std::string fan_to_text(const Fan& fan);
Fan fan_from_text(const std::string& text);

std::string polytope_to_json(const VPolytope& p);
VPolytope polytope_from_json(const std::string& json);

std::string fan_to_json(const Fan& fan);
Fan fan_from_json(const std::string& json);

}  // namespace brickforge

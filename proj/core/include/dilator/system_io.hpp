#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dilator/cocycle.hpp"
#include "dilator/dilation.hpp"
#include "dilator/report.hpp"
#include "dilator/shift_space.hpp"

namespace dilator {

/// JSON form of a cylinder function: {"depth":[...], "table":{word: "p/q"}}.
Json cylinder_to_json(const CylinderFunction& f);
CylinderFunction cylinder_from_json(const ShiftSystem& sys, const nlohmann::json& j);

/// {"level":[...], "fn":{...}}.
Json dilation_to_json(const DilationElement& e);

/// System description files:
///   {"factors":[{"alphabet":2}], "mode":"strict",
///    "generators":[{"depth":[1],"table":{"0":"1/3","1":"2/3"}}]}
/// Parsing then serializing is the identity up to key order; all rationals
/// are canonicalized to lowest terms.
Cocycle system_from_json(const nlohmann::json& j);
Json system_to_json(const Cocycle& c);
Cocycle load_system_file(const std::string& path);

/// Digest of a parsed input, stable across key order and whitespace.
std::string input_digest(const nlohmann::json& j);

}  // namespace dilator

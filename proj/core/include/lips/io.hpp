#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "lips/model.hpp"

namespace lips {

/// Parsed system file.
struct SystemDocument {
    ParametricSystem system;
    QuantifierAssignment quantifiers;
    /// True when at least one parameter carried a "quantifier" field.
    bool explicit_quantifiers = false;
    /// Present when the existential parameters touch the rhs only.
    std::optional<TolerableSystem> tolerable;
};

/// Reads the JSON system format:
///
///   {"m":2,"n":2,
///    "constant":{"A":[["1","0"],["1","0"]],"b":["1","0"]},
///    "parameters":[{"name":"p1","interval":["0","1"],
///                   "A":[["0","0"],["0","1"]],"b":["0","1"],
///                   "quantifier":"exists"}]}
///
/// Literals are strings holding integers, decimals or "num/den" (plain JSON
/// integers are accepted too). "constant", "parameters", and a parameter's
/// "A" or "b" default to zero; "quantifier" defaults to "exists".
/// Errors are InputError with the offending JSON path in the message.
SystemDocument parse_system(std::string_view text);
SystemDocument load_system(const std::filesystem::path& path);

/// Inverse of parse_system (up to literal spelling).
std::string serialize_system(const ParametricSystem& sys, const QuantifierAssignment& quant);

/// Comma separated rational literals, e.g. "1,-1/2,0.25".
Vector parse_vector(std::string_view text);

}  // namespace lips

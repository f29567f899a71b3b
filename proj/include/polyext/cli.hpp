#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polyext/ext_api.hpp"

namespace polyext {

// Parses a functor expression: "ab" | "T^<n>" | "Lambda^<n>" | "Gamma^<n>" |
// "S^<n>" | "Pa^<n>", with a case-insensitive keyword and a decimal arity
// (>= 0 everywhere, >= 1 for Pa). Throws ParseError carrying the offending
// position and the expected tokens.
FunctorDescriptor parse_functor(const std::string& text);

// Runs one command given argv-style arguments (program name excluded).
// Primary output goes to `out` unless --out redirects it to a file;
// diagnostics go to `err`. Exit codes: 0 success, 1 usage/parse error,
// 2 unsupported pair or functor, 3 cross-check mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyext

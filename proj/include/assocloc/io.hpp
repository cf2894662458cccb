#pragma once

#include <string>
#include <string_view>

#include "assocloc/algebra.hpp"
#include "assocloc/module.hpp"

namespace assocloc {

// Algebra files:
//   algebra <name> p=<prime> dim=<n>
//   basis <label_1> ... <label_n>      (optional)
//   unit <n coords>
//   mul <i> <j> : <n coords>          (1-based i, j; every pair exactly once)
// Module files:
//   module <name> over <algebra-name> dim=<m>
//   act <i>                            (1-based, one block per basis element)
//   <m rows of m coords>
// Blank lines and text after '#' are ignored. Parse errors name the line.

RawAlgebra parse_algebra(std::string_view text, const std::string& source = "<text>");
// Parses and validates; validation messages carry the line of the offending
// mul entry.
Algebra read_algebra(std::string_view text, const std::string& source = "<text>");
Algebra load_algebra(const std::string& path);

ModuleRep read_module(std::string_view text, const Algebra& a,
                      const std::string& source = "<text>");
ModuleRep load_module(const std::string& path, const Algebra& a);

std::string serialize_algebra(const Algebra& a);
std::string serialize_module(const ModuleRep& m);

std::string read_file(const std::string& path);

}  // namespace assocloc

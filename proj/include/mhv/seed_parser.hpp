#pragma once

#include "mhv/modules.hpp"

#include <string>

namespace mhv {

// Grammar for seed expressions over a declared module:
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := chunk ('(x)' chunk)*            tensor separator
//   chunk   := factor ('*' factor)*
//   factor  := rational | generator ['^' nat] | 'w' | 't' ['^' nat]
//   generator := ('d' | 'h') '(' rational ')'
//
// A chunk denotes coefficient * basis key: 'h(-3/2)^2 * d(0) * w' is the PBW
// basis vector with the factors in canonical (splitting-order) sequence;
// 't^2' is the polynomial basis vector; plain rationals denote multiples of
// t^0 in polynomial modules. Errors: ParseError with position, KeyError when
// a well-formed monomial is not a valid basis key of the module.
Vector parse_seed(const std::string& text, const ModulePtr& module);

// Canonical rendering; parse_seed(render_vector(v), v.module()) == v.
std::string render_vector(const Vector& v);

} // namespace mhv

#pragma once

#include <string>
#include <string_view>

#include "fracterm/term.hpp"

namespace fracterm {

/// Parses infix text.
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | atom
///   atom   := natural | mixed | identifier | '(' expr ')'
///   mixed  := digits '_' digits '/' digits      (n_p/q == n + p/q)
///
/// All binary operators are left-associative; a - b is read as a + (-b).
/// Throws ParseError on malformed input, including the empty string.
Term parse(std::string_view src);

/// Fully parenthesized infix text; parse(print(t)) == t.
std::string print(const Term& t);

/// JSON tree: {"num":"<decimal>"} | {"var":"<name>"} |
/// {"op":"add"|"mul"|"neg"|"div","args":[...]}. Compact, no whitespace.
std::string to_json(const Term& t);

/// Inverse of to_json. Throws ParseError on malformed documents.
Term term_from_json(std::string_view json);

}  // namespace fracterm

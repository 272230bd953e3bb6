#pragma once

#include <string>

#include "millkit/heurlang/ast.hpp"

namespace millkit::heurlang {

// Canonical formatter. pretty_print(parse(s)) reparses to a structurally
// identical AST; numbers are printed with round-trip precision.
std::string pretty_print(const HeuristicProgram& p);
std::string print_expr(const Expr& e);
std::string format_number(double value, bool is_integer);

}  // namespace millkit::heurlang

#pragma once

#include <string>

#include "ethracer/ast.hpp"

namespace ethracer {

// Canonical source form. print(parse(print(parse(s)))) == print(parse(s)).
std::string print_contract(const Contract& c);
std::string print_expr(const Expr& e);

}  // namespace ethracer

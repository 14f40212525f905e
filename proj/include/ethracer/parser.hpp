#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ethracer/ast.hpp"
#include "ethracer/lexer.hpp"

namespace ethracer {

struct ParseResult {
    std::optional<Contract> contract;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return contract.has_value() && diagnostics.empty(); }
};

// Parses and statically checks one contract. All errors carry line/col.
ParseResult parse_contract(const std::string& source);

}  // namespace ethracer

#pragma once

#include <stdexcept>
#include <vector>

#include "ethracer/ast.hpp"
#include "ethracer/scenario.hpp"
#include "ethracer/state.hpp"

namespace ethracer {

struct GenError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Concrete events for every non-pure function except __callback (whose
// events depend on issued qids and are built by the linearizer).
// Explicit per_function tuples replace generated ones for that function;
// otherwise tuples come from the cartesian product of sender, msg.value
// (payable only), and per-parameter domains, rightmost varying fastest.
// The draw for each function is truncated to its budget.
std::vector<Event> generate_events(const Contract& c, const Scenario& sc);

// Argument domain for one parameter kind, as used by generate_events.
std::vector<u256> arg_domain(const Contract& c, const Scenario& sc, ScalarKind kind);

}  // namespace ethracer

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ethracer/ast.hpp"
#include "ethracer/state.hpp"

namespace ethracer {

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Actor {
    std::string name;
    u256 address;
    u256 balance;
};

struct ExplicitTuple {
    std::optional<u256> sender;  // defaults to the first actor
    std::optional<u256> value;
    std::optional<u256> timestamp;
    std::optional<u256> blocknumber;
    std::vector<u256> args;
};

struct Budgets {
    int events_per_hb_pair = 3;
    int events_per_other_fn = 1;
};

struct Scenario {
    std::vector<Actor> actors;
    std::vector<u256> value_domain{0};
    std::vector<u256> uint_domain;  // extra uint argument constants
    std::map<std::string, std::vector<ExplicitTuple>> per_function;
    Budgets budgets;
    u256 timestamp = 1;
    u256 blocknumber = 1;
    int max_trace_len = 6;
    int min_trace_len = 2;
    std::vector<u256> callback_results{0};
    nlohmann::json initial_state;  // raw snapshot, applied by make_initial_state

    const Actor* actor(const std::string& name) const;
    // Actor name, decimal, 0x-hex, or true/false.
    u256 resolve_word(const std::string& text) const;
};

Scenario load_scenario(const nlohmann::json& j);
Scenario load_scenario_file(const std::string& path);

// Default state + scenario snapshot + actor balances.
WorldState make_initial_state(const Contract& c, const Scenario& sc);

// Apply a raw snapshot {fields, balance, ext_balances} on top of st.
void apply_snapshot(WorldState& st, const nlohmann::json& j, const Contract& c,
                    const Scenario& sc);

}  // namespace ethracer

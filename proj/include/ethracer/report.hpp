#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ethracer/ast.hpp"
#include "ethracer/effects.hpp"
#include "ethracer/fuzzer.hpp"
#include "ethracer/hb.hpp"
#include "ethracer/linearizer.hpp"
#include "ethracer/scenario.hpp"
#include "ethracer/state.hpp"

namespace ethracer {

inline constexpr const char* kToolName = "ethracer";
inline constexpr const char* kToolVersion = "0.1.0";

struct ReplayMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReportConfig {
    bool mode_sync = true;
    bool mode_lin = false;
    bool compare_transfers = false;
    int kmin = 2;
    int kmax = 6;
    int witness_cap = 8;
    uint64_t seed = 0;
    int jobs = 1;
    std::optional<uint64_t> wall_ms;  // present only when timing was requested
};

// Snapshot form {fields, balance, ext_balances} of a state, parseable by
// apply_snapshot.
nlohmann::json state_to_json(const WorldState& s, const Contract& c);

nlohmann::json event_to_json(const Contract& c, const Event& e, int index);

// Self-contained analysis report: embeds source, scenario, initial state
// and the event table so every finding can be replayed from the file
// alone. fuzz/lin may be null when that mode did not run.
nlohmann::json build_report(const Contract& c, const std::string& source,
                            const nlohmann::json& scenario_json, const WorldState& s0,
                            const std::vector<Event>& events, const RwTable& rws,
                            const std::set<std::string>& pure, const HBRelation& hb,
                            const FuzzResult* fuzz, const LinResult* lin,
                            const ReportConfig& rc);

void write_report(const nlohmann::json& report, const std::string& path);
nlohmann::json read_report(const std::string& path);

// Replays every HB pair, every witness pair (raw and minimized), and
// every linearizability violation recorded in the report. Throws
// ReplayMismatch on the first finding that no longer reproduces.
void verify_report(const nlohmann::json& report);

}  // namespace ethracer

#pragma once

#include <cstdint>
#include <vector>

#include "ethracer/ast.hpp"
#include "ethracer/enumerate.hpp"
#include "ethracer/hb.hpp"
#include "ethracer/state.hpp"

namespace ethracer {

struct WitnessPair {
    std::vector<int> trace_a;  // reference order (valid)
    std::vector<int> trace_b;  // divergent order (valid)
    Output output_a;
    Output output_b;
};

struct FuzzStats {
    uint64_t traces_enumerated = 0;
    uint64_t traces_skipped_by_hb = 0;
    uint64_t subsets_visited = 0;
    uint64_t witnesses_found = 0;   // raw, before minimization
    uint64_t minimized_count = 0;   // distinct after dedupe
    bool truncated = false;
};

struct FuzzConfig {
    int kmin = 2;
    int kmax = 6;
    int witness_cap = 8;        // per interleaving class
    bool pairwise_diff = false; // compare against every kept trace, not just the reference
    bool compare_transfers = false;
    double timeout_sec = 150.0 * 60.0;
    int jobs = 1;
};

struct FuzzResult {
    std::vector<WitnessPair> raw;
    std::vector<WitnessPair> minimized;  // deduped
    FuzzStats stats;
};

// Enumerates HB-respecting traces grouped by event subset, executes them
// in Strict mode, and reports output divergence between valid traces of
// the same interleaving class (equal relative order of each function's
// events; reordering two events of one function is a different class,
// not a divergence).
FuzzResult find_eo_bugs(const Contract& c, const WorldState& s0, const std::vector<Event>& events,
                        const HBRelation& r, const FuzzConfig& cfg);

// Drops shared events (scanned left-to-right by position in trace_a, one
// at a time, restarting after each success) while both sides stay valid
// and keep diverging.
WitnessPair minimize(const Contract& c, const WorldState& s0, const std::vector<Event>& events,
                     const WitnessPair& w, bool compare_transfers = false);

// Structural dedupe on the unordered pair of function-name sequences;
// first occurrence wins, input order preserved.
std::vector<WitnessPair> dedupe_witnesses(const std::vector<Event>& events,
                                          const std::vector<WitnessPair>& ws);

}  // namespace ethracer

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ethracer/ast.hpp"
#include "ethracer/interp.hpp"
#include "ethracer/scenario.hpp"
#include "ethracer/state.hpp"

namespace ethracer {

// Sender used for synthesized __callback events.
inline const u256 oracle_sender = parse_u256("0xfeedfeedfeedfeedfeedfeedfeedfeedfeedfeed");

struct NoCallbackError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Positions are indices into the analyzed trace.
struct LogicalTransaction {
    int call_pos = -1;
    int ret_pos = -1;
    u256 qid;
};

struct LinPairing {
    std::vector<LogicalTransaction> txs;
    std::vector<int> unmatched_rets;   // callbacks whose qid was never issued
    std::vector<int> duplicate_rets;   // callbacks re-using an already matched qid
};

// Executes h in Tolerant mode and pairs each issued qid with the callback
// event carrying it as its first argument. Reverted calls issue nothing.
LinPairing match_call_return(const Contract& c, const WorldState& s0, const std::vector<Event>& h);

// True iff no two logical transactions strictly interleave
// (call1 < call2 < ret1 < ret2 across distinct transactions).
bool is_linearizable(const LinPairing& p);

struct SchedTok {
    int tx = 0;
    bool is_ret = false;
};

struct LinTrace {
    std::vector<SchedTok> sched;
    std::vector<EventStatus> statuses;  // parallel to sched (Skipped: callback never issued)
    std::vector<Event> events;          // concrete events actually executed, in order
    Output output;
};

struct LinViolation {
    LinTrace flagged;
    LinTrace closest;  // linearizable trace at minimal Kendall-tau distance
    int distance = 0;
};

struct LinResult {
    bool skipped = false;  // fewer than two oracle-calling events
    std::vector<LinTrace> canonical;          // phase 1: atomic schedules
    std::vector<Output> canonical_outputs;    // distinct, in first-seen order
    std::vector<LinViolation> violations;     // deduped
    uint64_t interleavings_checked = 0;
};

// Phase 1 runs every atomic schedule (each call immediately followed by
// its callback) over the oracle-calling events, memoizing canonical
// outputs; phase 2 runs every other call-before-return interleaving and
// flags traces whose output is not canonical. Throws NoCallbackError if
// the contract has no __callback.
LinResult check_lin(const Contract& c, const WorldState& s0, const std::vector<Event>& call_pool,
                    const Scenario& sc, int kmax);

// Discordant-pair count between two schedules over the same tokens.
int kendall_tau(const std::vector<SchedTok>& a, const std::vector<SchedTok>& b);

}  // namespace ethracer

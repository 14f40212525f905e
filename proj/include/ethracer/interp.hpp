#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ethracer/ast.hpp"
#include "ethracer/state.hpp"

namespace ethracer {

enum class RevertReason {
    RequireFailed,
    ExplicitThrow,
    DivByZero,
    IndexOOB,
    NonPayableValue,
    LoopCap,
    InsufficientFunds,  // sender cannot cover msg.value
};

std::string revert_reason_name(RevertReason r);

struct InterpError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunOutcome {
    bool ok = false;
    WorldState state;  // committed post-state, only meaningful when ok
    RevertReason reason = RevertReason::RequireFailed;
};

// Atomic: commits every write on success, leaves the caller's state
// untouched on revert. event_index tags pending queries issued here.
RunOutcome exec_event(const Contract& c, const WorldState& s, const Event& e, int event_index = -1);

enum class TraceMode { Strict, Tolerant };

enum class EventStatus { Ok, Reverted, Skipped, NotRun };

std::string event_status_name(EventStatus st);

struct TraceOutcome {
    std::vector<EventStatus> statuses;
    std::vector<std::optional<RevertReason>> reasons;  // set where status == Reverted
    WorldState final_state;
    bool valid = false;  // true iff every status is Ok
};

// Strict stops at the first revert; Tolerant rolls back the offending
// event only and keeps going.
TraceOutcome exec_trace(const Contract& c, const WorldState& s0, const std::vector<Event>& h,
                        TraceMode mode);

inline constexpr unsigned kLoopCap = 10000;

}  // namespace ethracer

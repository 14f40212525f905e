#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ethracer/ast.hpp"
#include "ethracer/u256.hpp"

namespace ethracer {

// Scalar, array, single map, nested map. All runtime words are u256;
// the declared type decides rendering, not storage.
using FieldValue =
    std::variant<u256, std::vector<u256>, std::map<u256, u256>, std::map<u256, std::map<u256, u256>>>;

struct Message {
    u256 sender;
    u256 value;
    std::string fname;
    std::vector<u256> args;
    u256 timestamp;
    u256 blocknumber;

    bool operator==(const Message&) const = default;
};

struct Event {
    std::string fn;  // always equal to msg.fname
    Message msg;

    bool operator==(const Event&) const = default;
};

Event make_event(const std::string& fn, const u256& sender, const u256& value,
                 std::vector<u256> args, const u256& timestamp, const u256& blocknumber);

struct PendingQuery {
    int origin_event = -1;  // position of the issuing event in the current trace
    std::vector<std::string> args;

    bool operator==(const PendingQuery&) const = default;
};

struct TransferRec {
    u256 to;
    u256 amount;
    bool ok = false;

    bool operator==(const TransferRec&) const = default;
};

struct WorldState {
    std::map<std::string, FieldValue> fields;
    u256 balance;
    std::map<u256, u256> ext_balances;
    std::map<u256, PendingQuery> pending;  // qid -> query, keys strictly increasing
    u256 next_qid = 1;
    std::vector<TransferRec> transfer_log;
};

// All declared fields at their zero values, balance 0.
WorldState default_state(const Contract& c);

struct Output {
    std::string canonical;
    uint64_t hash = 0;

    bool operator==(const Output& o) const { return canonical == o.canonical; }
    bool operator!=(const Output& o) const { return canonical != o.canonical; }
    bool operator<(const Output& o) const { return canonical < o.canonical; }
};

// Canonical bytes over (fields, balance). Map entries with value 0 are
// dropped so an explicit x[k]=0 equals an absent key. Address-typed
// values render as 0x-hex, everything else as decimal.
Output output_of(const WorldState& s, const Contract& c, bool compare_transfers = false);

// Total Ether visible to the model; constant across any Ok event.
u256 total_ether(const WorldState& s);

}  // namespace ethracer

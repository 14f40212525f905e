#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "ethracer/ast.hpp"

namespace ethracer {

// Field-level over-approximation. Map/array accesses count as touching
// the whole field. Ether flow shows up as the pseudo-field "@balance",
// oracle query issuance as "@oracle".
struct RwSet {
    std::set<std::string> reads;
    std::set<std::string> writes;

    bool pure() const { return reads.empty() && writes.empty(); }
};

using RwTable = std::map<std::string, RwSet>;

RwSet rw_set(const Contract& c, const Function& f);
RwTable rw_table(const Contract& c);

// Functions that touch no state at all; their events are never generated.
std::set<std::string> pure_events_filter(const Contract& c);

// Unordered function pairs (lexicographically normalized, self-pairs
// allowed) that share a field at least one side writes. Pure functions
// never appear.
std::set<std::pair<std::string, std::string>> hb_candidate_pairs(const Contract& c);

}  // namespace ethracer

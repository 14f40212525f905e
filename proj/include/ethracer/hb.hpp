#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ethracer/ast.hpp"
#include "ethracer/state.hpp"

namespace ethracer {

// Ordered event-index pairs (i, j): e_i must come before e_j. Irreflexive
// and antisymmetric by construction.
struct HBRelation {
    std::set<std::pair<int, int>> pairs;

    bool independent(int i, int j) const {
        return !pairs.count({i, j}) && !pairs.count({j, i});
    }
};

// Probes both orders of each candidate event pair from s0 (Strict mode):
// (i, j) is recorded iff [e_i, e_j] is valid and [e_j, e_i] reverts.
// Only events whose functions form a candidate pair are probed, and only
// when their uint-argument value sets overlap (or either has none): pairs
// acting on unrelated amounts are treated as independent without probing.
HBRelation extract_whb(const Contract& c, const WorldState& s0, const std::vector<Event>& events,
                       const std::set<std::pair<std::string, std::string>>& candidates);

}  // namespace ethracer

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ethracer/hb.hpp"

namespace ethracer {

// Visitor returns false to abort the whole enumeration.
using TraceVisitor = std::function<bool(const std::vector<int>&)>;

// Subset visitor: called once per event subset before its permutations.
using SubsetVisitor = std::function<bool(const std::vector<int>&)>;

struct EnumStats {
    uint64_t enumerated = 0;      // traces yielded
    uint64_t skipped = 0;         // pruned by HB; enumerated + skipped = sum of P(n,k)
    uint64_t subsets = 0;
    bool completed = true;        // false when the visitor aborted
};

uint64_t factorial(int k);

// k-subsets of [0, n): subsets whose events all carry distinct function
// names first, then the rest; lexicographic within each class.
std::vector<std::vector<int>> ordered_subsets(const std::vector<std::string>& fn_of, int k);

// R-respecting permutations of one subset, lexicographic, generated by
// backtracking that never builds a violating order. Returns false iff
// aborted by the visitor.
bool hb_permutations(const std::vector<int>& subset, const HBRelation& r, const TraceVisitor& v);

// Full POR enumeration: k ascending, subsets in priority order.
// on_subset (optional) announces each subset before its permutations.
EnumStats enumerate_traces(const std::vector<std::string>& fn_of, const HBRelation& r, int kmin,
                           int kmax, const TraceVisitor& v, const SubsetVisitor& on_subset = {});

// Brute-force oracle: filters every permutation of every subset.
uint64_t count_traces(int n_events, const HBRelation& r, int kmin, int kmax);

}  // namespace ethracer

#include "ethracer/enumerate.hpp"

#include <algorithm>
#include <set>

namespace ethracer {

uint64_t factorial(int k) {
    uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

namespace {

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    if (k > n) return;
    while (true) {
        emit(comb);
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
}

}  // namespace

std::vector<std::vector<int>> ordered_subsets(const std::vector<std::string>& fn_of, int k) {
    std::vector<std::vector<int>> distinct, mixed;
    combinations(static_cast<int>(fn_of.size()), k, [&](const std::vector<int>& comb) {
        std::set<std::string> names;
        for (int i : comb) names.insert(fn_of[i]);
        (names.size() == comb.size() ? distinct : mixed).push_back(comb);
    });
    distinct.insert(distinct.end(), mixed.begin(), mixed.end());
    return distinct;
}

bool hb_permutations(const std::vector<int>& subset, const HBRelation& r, const TraceVisitor& v) {
    const size_t k = subset.size();
    // preds[p] = positions (within subset) that must be placed before subset[p]
    std::vector<std::vector<size_t>> preds(k);
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b)
            if (a != b && r.pairs.count({subset[a], subset[b]})) preds[b].push_back(a);

    std::vector<int> trace;
    trace.reserve(k);
    std::vector<bool> used(k, false);
    std::function<bool()> rec = [&]() -> bool {
        if (trace.size() == k) return v(trace);
        for (size_t p = 0; p < k; ++p) {
            if (used[p]) continue;
            bool ready = true;
            for (size_t q : preds[p])
                if (!used[q]) ready = false;
            if (!ready) continue;
            used[p] = true;
            trace.push_back(subset[p]);
            bool go = rec();
            trace.pop_back();
            used[p] = false;
            if (!go) return false;
        }
        return true;
    };
    return rec();
}

EnumStats enumerate_traces(const std::vector<std::string>& fn_of, const HBRelation& r, int kmin,
                           int kmax, const TraceVisitor& v, const SubsetVisitor& on_subset) {
    EnumStats st;
    for (int k = kmin; k <= kmax && k <= static_cast<int>(fn_of.size()); ++k) {
        uint64_t kfact = factorial(k);
        for (const auto& subset : ordered_subsets(fn_of, k)) {
            ++st.subsets;
            if (on_subset && !on_subset(subset)) {
                st.completed = false;
                return st;
            }
            uint64_t before = st.enumerated;
            bool go = hb_permutations(subset, r, [&](const std::vector<int>& trace) {
                ++st.enumerated;
                return v(trace);
            });
            st.skipped += kfact - (st.enumerated - before);
            if (!go) {
                st.completed = false;
                return st;
            }
        }
    }
    return st;
}

uint64_t count_traces(int n_events, const HBRelation& r, int kmin, int kmax) {
    uint64_t total = 0;
    for (int k = kmin; k <= kmax && k <= n_events; ++k) {
        combinations(n_events, k, [&](const std::vector<int>& comb) {
            std::vector<int> perm = comb;
            do {
                std::vector<int> pos(n_events, -1);
                for (size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
                bool ok = true;
                for (const auto& [a, b] : r.pairs)
                    if (pos[a] >= 0 && pos[b] >= 0 && pos[a] > pos[b]) ok = false;
                if (ok) ++total;
            } while (std::next_permutation(perm.begin(), perm.end()));
        });
    }
    return total;
}

}  // namespace ethracer

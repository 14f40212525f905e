#include "ethracer/fuzzer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "ethracer/interp.hpp"

namespace ethracer {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Event> events_of(const std::vector<Event>& pool, const std::vector<int>& trace) {
    std::vector<Event> out;
    out.reserve(trace.size());
    for (int i : trace) out.push_back(pool[i]);
    return out;
}

// Relative order of each function's events; traces compare only within
// their class.
std::string class_key(const std::vector<Event>& pool, const std::vector<int>& trace) {
    std::map<std::string, std::string> per_fn;
    for (int i : trace) {
        std::string& s = per_fn[pool[i].fn];
        if (!s.empty()) s += ',';
        s += std::to_string(i);
    }
    std::string key;
    for (const auto& [fn, order] : per_fn) {
        key += fn;
        key += ':';
        key += order;
        key += ';';
    }
    return key;
}

struct ClassState {
    std::vector<std::pair<std::vector<int>, Output>> kept;  // [0] is the reference
    int emitted = 0;
};

struct SubsetJob {
    std::vector<int> subset;
    uint64_t kfact = 0;
};

struct SubsetResult {
    std::vector<WitnessPair> witnesses;
    uint64_t enumerated = 0;
    uint64_t skipped = 0;
    bool aborted = false;
};

SubsetResult run_subset(const Contract& c, const WorldState& s0, const std::vector<Event>& pool,
                        const HBRelation& r, const FuzzConfig& cfg, const SubsetJob& job,
                        Clock::time_point deadline) {
    SubsetResult res;
    std::map<std::string, ClassState> classes;
    bool finished = hb_permutations(job.subset, r, [&](const std::vector<int>& trace) {
        if (Clock::now() >= deadline) return false;
        ++res.enumerated;
        TraceOutcome out = exec_trace(c, s0, events_of(pool, trace), TraceMode::Strict);
        if (!out.valid) return true;
        Output output = output_of(out.final_state, c, cfg.compare_transfers);
        ClassState& cls = classes[class_key(pool, trace)];
        if (cls.kept.empty()) {
            cls.kept.emplace_back(trace, std::move(output));
            return true;
        }
        size_t compare_to = cfg.pairwise_diff ? cls.kept.size() : 1;
        for (size_t i = 0; i < compare_to && cls.emitted < cfg.witness_cap; ++i) {
            if (cls.kept[i].second != output) {
                res.witnesses.push_back(
                    {cls.kept[i].first, trace, cls.kept[i].second, output});
                ++cls.emitted;
            }
        }
        if (cfg.pairwise_diff) cls.kept.emplace_back(trace, std::move(output));
        return true;
    });
    if (!finished) res.aborted = true;
    res.skipped = job.kfact - res.enumerated;
    return res;
}

}  // namespace

FuzzResult find_eo_bugs(const Contract& c, const WorldState& s0, const std::vector<Event>& events,
                        const HBRelation& r, const FuzzConfig& cfg) {
    FuzzResult result;
    std::vector<std::string> fn_of;
    fn_of.reserve(events.size());
    for (const auto& e : events) fn_of.push_back(e.fn);

    std::vector<SubsetJob> jobs;
    for (int k = cfg.kmin; k <= cfg.kmax && k <= static_cast<int>(events.size()); ++k) {
        uint64_t kfact = factorial(k);
        for (auto& subset : ordered_subsets(fn_of, k)) jobs.push_back({std::move(subset), kfact});
    }

    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(cfg.timeout_sec));
    std::vector<SubsetResult> slots(jobs.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> stop{false};
    int workers = std::max(1, cfg.jobs);

    auto work = [&]() {
        while (!stop.load(std::memory_order_relaxed)) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            slots[i] = run_subset(c, s0, events, r, cfg, jobs[i], deadline);
            if (slots[i].aborted) stop.store(true, std::memory_order_relaxed);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    for (size_t i = 0; i < slots.size(); ++i) {
        const SubsetResult& sr = slots[i];
        // A claimed subset always has enumerated + skipped = k! >= 2 or is
        // marked aborted; anything else was never claimed (truncation).
        if (sr.enumerated == 0 && sr.skipped == 0 && !sr.aborted) {
            result.stats.truncated = true;
            continue;
        }
        ++result.stats.subsets_visited;
        result.stats.traces_enumerated += sr.enumerated;
        result.stats.traces_skipped_by_hb += sr.aborted ? 0 : sr.skipped;
        if (sr.aborted) result.stats.truncated = true;
        for (const auto& w : sr.witnesses) result.raw.push_back(w);
    }
    result.stats.witnesses_found = result.raw.size();

    std::vector<WitnessPair> mins;
    mins.reserve(result.raw.size());
    for (const auto& w : result.raw)
        mins.push_back(minimize(c, s0, events, w, cfg.compare_transfers));
    result.minimized = dedupe_witnesses(events, mins);
    result.stats.minimized_count = result.minimized.size();
    return result;
}

WitnessPair minimize(const Contract& c, const WorldState& s0, const std::vector<Event>& events,
                     const WitnessPair& w, bool compare_transfers) {
    std::vector<int> a = w.trace_a;
    std::vector<int> b = w.trace_b;
    Output out_a = w.output_a;
    Output out_b = w.output_b;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int ev : std::vector<int>(a)) {
            std::vector<int> na, nb;
            for (int x : a)
                if (x != ev) na.push_back(x);
            for (int x : b)
                if (x != ev) nb.push_back(x);
            TraceOutcome ra = exec_trace(c, s0, events_of(events, na), TraceMode::Strict);
            if (!ra.valid) continue;
            TraceOutcome rb = exec_trace(c, s0, events_of(events, nb), TraceMode::Strict);
            if (!rb.valid) continue;
            Output oa = output_of(ra.final_state, c, compare_transfers);
            Output ob = output_of(rb.final_state, c, compare_transfers);
            if (oa == ob) continue;
            a = std::move(na);
            b = std::move(nb);
            out_a = std::move(oa);
            out_b = std::move(ob);
            changed = true;
            break;  // restart the scan on the shrunk pair
        }
    }
    return {std::move(a), std::move(b), std::move(out_a), std::move(out_b)};
}

std::vector<WitnessPair> dedupe_witnesses(const std::vector<Event>& events,
                                          const std::vector<WitnessPair>& ws) {
    auto names_of = [&](const std::vector<int>& trace) {
        std::string s;
        for (int i : trace) {
            s += events[i].fn;
            s += ',';
        }
        return s;
    };
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<WitnessPair> out;
    for (const auto& w : ws) {
        std::string fa = names_of(w.trace_a);
        std::string fb = names_of(w.trace_b);
        auto key = std::make_pair(std::min(fa, fb), std::max(fa, fb));
        if (seen.insert(key).second) out.push_back(w);
    }
    return out;
}

}  // namespace ethracer

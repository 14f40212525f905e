// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Kept binary-separate from the unit
// tests so the checklist reads as a checklist.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ethracer/enumerate.hpp"
#include "ethracer/fuzzer.hpp"
#include "ethracer/interp.hpp"
#include "ethracer/linearizer.hpp"
#include "ethracer/report.hpp"
#include "helpers.hpp"

using namespace ethracer;
using Clock = std::chrono::steady_clock;

namespace {

struct CheckFail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw CheckFail(what);
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

const std::vector<std::string> kCorpus = {"iou", "escrow", "contest", "bounty", "casino"};

std::map<std::string, testutil::Pipeline>& pipelines() {
    static std::map<std::string, testutil::Pipeline> cache;
    if (cache.empty())
        for (const auto& base : kCorpus) cache.emplace(base, testutil::load_pipeline(base));
    return cache;
}

std::vector<Event> events_of(const std::vector<Event>& pool, const std::vector<int>& trace) {
    std::vector<Event> out;
    for (int i : trace) out.push_back(pool[static_cast<size_t>(i)]);
    return out;
}

bool respects(const HBRelation& r, const std::vector<int>& t) {
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            if (r.pairs.count({t[j], t[i]})) return false;
    return true;
}

// Relabels indices by first appearance (pairs visited in sorted order),
// so two relations compare equal iff some index bijection maps one onto
// the other.
std::set<std::pair<int, int>> canon_shape(const std::set<std::pair<int, int>>& in) {
    std::map<int, int> relabel;
    auto id = [&](int v) {
        auto [it, fresh] = relabel.try_emplace(v, static_cast<int>(relabel.size()));
        return it->second;
    };
    std::set<std::pair<int, int>> out;
    for (const auto& [a, b] : in) out.insert({id(a), id(b)});
    return out;
}

// ---- criterion bodies -------------------------------------------------

std::string crit1_por_counts() {
    auto t0 = Clock::now();
    std::vector<std::string> fns;
    for (int i = 0; i < 7; ++i) fns.push_back("e" + std::to_string(i));
    HBRelation r;
    r.pairs = {{0, 1}, {2, 3}, {0, 4}, {2, 5}};
    HBRelation free;

    auto count = [&](const HBRelation& rel) {
        return enumerate_traces(fns, rel, 2, 6, [](const std::vector<int>&) { return true; })
            .enumerated;
    };
    uint64_t constrained = count(r);
    uint64_t unconstrained = count(free);
    expect(constrained == 2560, "constrained count " + std::to_string(constrained) + " != 2560");
    expect(unconstrained == 8652, "free count " + std::to_string(unconstrained) + " != 8652");
    expect(count_traces(7, r, 2, 6) == 2560, "oracle disagrees on constrained count");
    expect(count_traces(7, free, 2, 6) == 8652, "oracle disagrees on free count");
    double dt = seconds_since(t0);
    expect(dt < 1.0, "took " + fmt_secs(dt) + ", bound is 1s");
    return "2560 constrained / 8652 free, oracle-confirmed, " + fmt_secs(dt);
}

std::string crit2_iou_witness() {
    auto t0 = Clock::now();
    auto p = testutil::load_pipeline("iou");
    FuzzResult res = find_eo_bugs(p.contract, p.s0, p.events, p.hb, FuzzConfig{});
    expect(res.minimized.size() == 1,
           "expected exactly 1 minimized witness, got " + std::to_string(res.minimized.size()));
    const WitnessPair& w = res.minimized[0];
    std::vector<std::string> a = testutil::fn_names(p.events, w.trace_a);
    std::vector<std::string> b = testutil::fn_names(p.events, w.trace_b);
    std::vector<std::string> want_a = {"approve", "approve", "transferFrom"};
    std::vector<std::string> want_b = {"approve", "transferFrom", "approve"};
    expect((a == want_a && b == want_b) || (a == want_b && b == want_a),
           "witness is not the approve/approve/transferFrom reorder");
    expect(w.output_a != w.output_b, "witness outputs do not diverge");
    expect(w.output_a.canonical.find("allowed") != std::string::npos,
           "divergence is not in the allowance field");
    double dt = seconds_since(t0);
    expect(dt < 60.0, "took " + fmt_secs(dt) + ", bound is 60s");
    return "1 minimized witness, allowance 200 vs 300, " + fmt_secs(dt);
}

std::string crit3_iou_hb() {
    const auto& p = pipelines().at("iou");
    expect(p.hb.pairs.size() == 4,
           "expected 4 hb pairs, got " + std::to_string(p.hb.pairs.size()));
    std::set<std::pair<int, int>> reference = {{1, 2}, {3, 4}, {1, 5}, {3, 6}};
    expect(canon_shape(p.hb.pairs) == canon_shape(reference),
           "hb pairs are not index-isomorphic to the reference set");
    for (const auto& [i, j] : p.hb.pairs) {
        expect(p.events[static_cast<size_t>(i)].fn == "approve", "pair source is not approve");
        expect(p.events[static_cast<size_t>(j)].fn == "transferFrom",
               "pair target is not transferFrom");
    }
    return "4 approve->transferFrom pairs, isomorphic to the reference";
}

std::string crit4_casino_lin() {
    auto t0 = Clock::now();
    const auto& p = pipelines().at("casino");
    LinResult lin = check_lin(p.contract, p.s0, p.events, p.scenario, 6);
    expect(!lin.skipped, "linearizability check skipped");

    auto sched_eq = [](const std::vector<SchedTok>& s, std::vector<std::pair<int, bool>> want) {
        if (s.size() != want.size()) return false;
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i].tx != want[i].first || s[i].is_ret != want[i].second) return false;
        return true;
    };

    bool interleaved_flagged = false;
    for (const auto& v : lin.violations) {
        interleaved_flagged |=
            sched_eq(v.flagged.sched, {{0, false}, {1, false}, {0, true}, {1, true}});
        bool canonical = false;
        for (const auto& o : lin.canonical_outputs) canonical |= (o == v.flagged.output);
        expect(!canonical, "flagged trace output is canonical");
    }
    expect(interleaved_flagged, "[bet1,bet2,cb1,cb2] was not flagged");

    expect(lin.canonical.size() == 2, "expected 2 atomic schedules");
    bool atomic01 = false, atomic10 = false;
    for (const auto& t : lin.canonical) {
        atomic01 |= sched_eq(t.sched, {{0, false}, {0, true}, {1, false}, {1, true}});
        atomic10 |= sched_eq(t.sched, {{1, false}, {1, true}, {0, false}, {0, true}});
        bool canonical = false;
        for (const auto& o : lin.canonical_outputs) canonical |= (o == t.output);
        expect(canonical, "an atomic schedule's output is missing from the canonical set");
    }
    expect(atomic01 && atomic10, "an atomic order is missing");
    double dt = seconds_since(t0);
    expect(dt < 30.0, "took " + fmt_secs(dt) + ", bound is 30s");
    return "interleaved bets flagged, both atomic orders canonical, " + fmt_secs(dt);
}

std::string crit5_corpus_sync() {
    const auto& escrow = pipelines().at("escrow");
    FuzzResult er = find_eo_bugs(escrow.contract, escrow.s0, escrow.events, escrow.hb, FuzzConfig{});
    bool escrow_hit = false;
    for (const auto& w : er.minimized) {
        auto a = testutil::fn_names(escrow.events, w.trace_a);
        auto b = testutil::fn_names(escrow.events, w.trace_b);
        std::vector<std::string> sf_ne = {"setEscrowFee", "newEscrow"};
        std::vector<std::string> ne_sf = {"newEscrow", "setEscrowFee"};
        escrow_hit |= (a == sf_ne && b == ne_sf) || (a == ne_sf && b == sf_ne);
    }
    expect(escrow_hit, "escrow setEscrowFee/newEscrow witness missing");

    const auto& contest = pipelines().at("contest");
    FuzzResult cr =
        find_eo_bugs(contest.contract, contest.s0, contest.events, contest.hb, FuzzConfig{});
    bool contest_hit = false;
    std::vector<std::string> pvd = {"participate", "vote", "determineLuckyVoters"};
    std::vector<std::string> pdv = {"participate", "determineLuckyVoters", "vote"};
    for (const auto& w : cr.minimized) {
        auto a = testutil::fn_names(contest.events, w.trace_a);
        auto b = testutil::fn_names(contest.events, w.trace_b);
        contest_hit |= (a == pvd && b == pdv) || (a == pdv && b == pvd);
    }
    expect(contest_hit, "contest participate/vote/determineLuckyVoters witness missing");
    return "escrow fee-timing witness + contest lucky-voter witness, exact sequences";
}

std::string crit6_bounty_whb() {
    const auto& p = pipelines().at("bounty");
    bool found = false;
    for (const auto& [i, j] : p.hb.pairs)
        found |= p.events[static_cast<size_t>(i)].fn == "donate" &&
                 p.events[static_cast<size_t>(j)].fn == "payout";
    expect(found, "whb(donate, payout) not extracted");
    return "whb(donate, payout) present";
}

// 7a: whenever an event reverts mid-trace, the trace's output must equal
// the output of the same trace with the reverted events removed.
int suite_atomicity(std::mt19937& rng) {
    int probes = 0;
    int guard = 0;
    while (probes < 1000) {
        expect(++guard < 100000, "atomicity suite starved of reverting events");
        const auto& base = kCorpus[static_cast<size_t>(guard) % kCorpus.size()];
        const auto& p = pipelines().at(base);
        size_t len = 2 + rng() % 5;
        std::vector<Event> trace;
        for (size_t i = 0; i < len; ++i)
            trace.push_back(p.events[rng() % p.events.size()]);

        TraceOutcome tol = exec_trace(p.contract, p.s0, trace, TraceMode::Tolerant);
        std::vector<Event> kept;
        int reverted = 0;
        for (size_t i = 0; i < trace.size(); ++i) {
            if (tol.statuses[i] == EventStatus::Ok) kept.push_back(trace[i]);
            if (tol.statuses[i] == EventStatus::Reverted) ++reverted;
        }
        if (reverted == 0) continue;
        TraceOutcome strict = exec_trace(p.contract, p.s0, kept, TraceMode::Strict);
        expect(strict.valid, "surviving events no longer execute cleanly (" + base + ")");
        expect(output_of(strict.final_state, p.contract) == output_of(tol.final_state, p.contract),
               "a reverted event left residue (" + base + ")");
        probes += reverted;
    }
    return probes;
}

int suite_determinism(std::mt19937& rng) {
    for (int n = 0; n < 200; ++n) {
        const auto& base = kCorpus[static_cast<size_t>(n) % kCorpus.size()];
        const auto& p = pipelines().at(base);
        size_t len = 2 + rng() % 5;
        std::vector<Event> trace;
        for (size_t i = 0; i < len; ++i)
            trace.push_back(p.events[rng() % p.events.size()]);
        for (TraceMode mode : {TraceMode::Strict, TraceMode::Tolerant}) {
            TraceOutcome first = exec_trace(p.contract, p.s0, trace, mode);
            TraceOutcome second = exec_trace(p.contract, p.s0, trace, mode);
            expect(first.statuses == second.statuses, "statuses differ across replays (" + base + ")");
            expect(first.reasons == second.reasons, "reasons differ across replays (" + base + ")");
            expect(output_of(first.final_state, p.contract) ==
                       output_of(second.final_state, p.contract),
                   "outputs differ across replays (" + base + ")");
        }
    }
    return 200;
}

int suite_enumeration(std::mt19937& rng) {
    int relations = 0;
    auto check = [&](int n, const HBRelation& r) {
        std::vector<std::string> fns;
        for (int i = 0; i < n; ++i) fns.push_back("f" + std::to_string(i));
        uint64_t got =
            enumerate_traces(fns, r, 2, n, [](const std::vector<int>&) { return true; }).enumerated;
        uint64_t want = count_traces(n, r, 2, n);
        expect(got == want, "enumeration " + std::to_string(got) + " != oracle " +
                                std::to_string(want) + " at n=" + std::to_string(n));
        ++relations;
    };

    // Every antisymmetric relation: each unordered pair is absent, forward,
    // or backward.
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
        uint64_t total = 1;
        for (size_t i = 0; i < slots.size(); ++i) total *= 3;
        for (uint64_t code = 0; code < total; ++code) {
            HBRelation r;
            uint64_t c = code;
            for (const auto& [i, j] : slots) {
                switch (c % 3) {
                    case 1: r.pairs.insert({i, j}); break;
                    case 2: r.pairs.insert({j, i}); break;
                    default: break;
                }
                c /= 3;
            }
            check(n, r);
        }
    }
    for (int rep = 0; rep < 100; ++rep) {
        HBRelation r;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                switch (rng() % 3) {
                    case 1: r.pairs.insert({i, j}); break;
                    case 2: r.pairs.insert({j, i}); break;
                    default: break;
                }
            }
        check(6, r);
    }
    return relations;
}

int suite_witness_soundness() {
    int checked = 0;
    for (const auto& base : kCorpus) {
        const auto& p = pipelines().at(base);
        FuzzResult res = find_eo_bugs(p.contract, p.s0, p.events, p.hb, FuzzConfig{});
        auto sound = [&](const WitnessPair& w) {
            auto ma = w.trace_a, mb = w.trace_b;
            std::sort(ma.begin(), ma.end());
            std::sort(mb.begin(), mb.end());
            expect(ma == mb, "witness traces are not permutations of each other (" + base + ")");
            expect(w.trace_a != w.trace_b, "witness traces are identical (" + base + ")");
            expect(respects(p.hb, w.trace_a) && respects(p.hb, w.trace_b),
                   "witness violates hb (" + base + ")");
            TraceOutcome a = exec_trace(p.contract, p.s0, events_of(p.events, w.trace_a),
                                        TraceMode::Strict);
            TraceOutcome b = exec_trace(p.contract, p.s0, events_of(p.events, w.trace_b),
                                        TraceMode::Strict);
            expect(a.valid && b.valid, "witness trace is not valid (" + base + ")");
            expect(output_of(a.final_state, p.contract) == w.output_a &&
                       output_of(b.final_state, p.contract) == w.output_b,
                   "recorded outputs drift on replay (" + base + ")");
            expect(w.output_a != w.output_b, "witness does not diverge (" + base + ")");
            ++checked;
        };
        for (const auto& w : res.raw) sound(w);
        for (const auto& w : res.minimized) {
            sound(w);
            WitnessPair again = minimize(p.contract, p.s0, p.events, w);
            expect(again.trace_a == w.trace_a && again.trace_b == w.trace_b,
                   "minimized witness is not a fixpoint (" + base + ")");
        }
    }
    return checked;
}

int suite_purity(std::mt19937& rng) {
    struct PureCase {
        const char* base;
        const char* fn;
    };
    const std::vector<PureCase> cases = {{"iou", "spendable"}, {"escrow", "feeOf"}};
    for (const auto& pc : cases) {
        const auto& p = pipelines().at(pc.base);
        expect(pure_events_filter(p.contract).count(pc.fn) == 1,
               std::string(pc.fn) + " not classified pure");
        for (const auto& e : p.events)
            expect(e.fn != pc.fn, std::string(pc.fn) + " leaked into the event pool");
    }

    auto rand_word = [&](std::mt19937& g) {
        u256 v = g();
        if (g() % 4 == 0) v = v * u256(g()) + g();
        if (g() % 16 == 0) v = u256(0) - 1;  // wrap to max
        return v;
    };

    int probes = 0;
    while (probes < 500) {
        const auto& pc = cases[static_cast<size_t>(probes) % cases.size()];
        const auto& p = pipelines().at(pc.base);

        // Scramble the state with a random prefix first.
        size_t len = rng() % 4;
        std::vector<Event> prefix;
        for (size_t i = 0; i < len; ++i) prefix.push_back(p.events[rng() % p.events.size()]);
        TraceOutcome pre = exec_trace(p.contract, p.s0, prefix, TraceMode::Tolerant);

        u256 sender = p.events[rng() % p.events.size()].msg.sender;
        Event e = make_event(pc.fn, sender, 0, {rand_word(rng), rand_word(rng)}, 0, 0);
        RunOutcome r = exec_event(p.contract, pre.final_state, e);
        expect(r.ok, std::string(pc.fn) + " reverted on a purity probe");
        expect(output_of(r.state, p.contract) == output_of(pre.final_state, p.contract),
               std::string(pc.fn) + " changed the output");
        ++probes;
    }
    return probes;
}

std::string crit7_property_suites() {
    std::mt19937 rng(20260818);
    int atom = suite_atomicity(rng);
    int det = suite_determinism(rng);
    int rels = suite_enumeration(rng);
    int wits = suite_witness_soundness();
    int pure = suite_purity(rng);
    std::ostringstream os;
    os << atom << " atomicity probes, " << det << " replays, " << rels << " relations, " << wits
       << " witnesses, " << pure << " purity probes, zero failures";
    return os.str();
}

std::string crit8_replay_roundtrip() {
    int verified = 0;
    for (const auto& base : kCorpus) {
        const auto& p = pipelines().at(base);
        std::string source = testutil::read_file(testutil::corpus_path(base + ".fsol"));
        nlohmann::json scenario_json = nlohmann::json::parse(
            testutil::read_file(testutil::corpus_path(base + ".scenario.json")));
        FuzzResult fuzz = find_eo_bugs(p.contract, p.s0, p.events, p.hb, FuzzConfig{});
        bool with_lin = p.contract.function("__callback") != nullptr;
        LinResult lin;
        if (with_lin) lin = check_lin(p.contract, p.s0, p.events, p.scenario, 6);
        ReportConfig rc;
        rc.mode_lin = with_lin;
        nlohmann::json rep = build_report(p.contract, source, scenario_json, p.s0, p.events,
                                          rw_table(p.contract), pure_events_filter(p.contract),
                                          p.hb, &fuzz, with_lin ? &lin : nullptr, rc);
        try {
            verify_report(rep);
        } catch (const ReplayMismatch& e) {
            throw CheckFail(base + " report failed verification: " + e.what());
        }
        ++verified;
    }
    return std::to_string(verified) + " reports verified";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::string (*run)();
    };
    const std::vector<Criterion> criteria = {
        {1, "POR trace counts", crit1_por_counts},
        {2, "IOU minimized witness", crit2_iou_witness},
        {3, "IOU HB extraction", crit3_iou_hb},
        {4, "Casino linearizability", crit4_casino_lin},
        {5, "Corpus sync bugs", crit5_corpus_sync},
        {6, "Bounty WHB", crit6_bounty_whb},
        {7, "Property suites", crit7_property_suites},
        {8, "Replay round-trip", crit8_replay_roundtrip},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        if (!ok) ++failed;
        std::cout << (ok ? "PASS" : "FAIL") << " " << c.id << ": " << c.label << " (" << detail
                  << ")" << std::endl;
    }
    if (failed) std::cout << failed << " criteria failed" << std::endl;
    return failed == 0 ? 0 : 1;
}

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ethracer/eventgen.hpp"
#include "ethracer/parser.hpp"
#include "ethracer/report.hpp"

namespace {

using namespace ethracer;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct AnalyzeArgs {
    std::string contract_path;
    std::string scenario_path;
    std::string state_path;
    std::string report_path;
    std::string mode = "auto";
    int max_len = -1;  // -1: take the scenario's value
    int min_len = -1;
    double timeout_min = 150.0;
    int witness_cap = 8;
    uint64_t seed = 0;
    int jobs = 0;  // 0: hardware concurrency
    bool dump_rwsets = false;
    bool compare_transfers = false;
    bool pairwise_diff = false;
    bool timing = false;
};

int run_analyze(const AnalyzeArgs& args) {
    std::string source;
    try {
        source = read_file(args.contract_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    ParseResult pr = parse_contract(source);
    if (!pr.ok()) {
        for (const auto& d : pr.diagnostics)
            std::cerr << args.contract_path << ":" << d.loc.line << ":" << d.loc.col << ": error: "
                      << d.message << "\n";
        return 1;
    }
    const Contract& c = *pr.contract;

    Scenario sc;
    nlohmann::json scenario_json;
    try {
        std::istringstream raw(read_file(args.scenario_path));
        raw >> scenario_json;
        sc = load_scenario(scenario_json);
        if (!args.state_path.empty()) {
            nlohmann::json snap;
            std::istringstream sraw(read_file(args.state_path));
            sraw >> snap;
            sc.initial_state = snap;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    bool has_callback = c.function("__callback") != nullptr;
    bool mode_sync, mode_lin;
    if (args.mode == "auto") {
        mode_sync = true;
        mode_lin = has_callback;
    } else if (args.mode == "sync") {
        mode_sync = true;
        mode_lin = false;
    } else if (args.mode == "lin") {
        mode_sync = false;
        mode_lin = true;
    } else if (args.mode == "both") {
        mode_sync = true;
        mode_lin = true;
    } else {
        std::cerr << "error: --mode must be sync, lin, or both\n";
        return 1;
    }
    if (mode_lin && !has_callback) {
        std::cerr << "error: contract " << c.name
                  << " declares no __callback; linearizability mode is inapplicable\n";
        return 1;
    }

    int kmax = args.max_len > 0 ? args.max_len : sc.max_trace_len;
    int kmin = args.min_len > 0 ? args.min_len : sc.min_trace_len;
    if (kmin < 2 || kmax < kmin) {
        std::cerr << "error: trace length bounds must satisfy 2 <= min <= max\n";
        return 1;
    }

    auto started = std::chrono::steady_clock::now();
    WorldState s0;
    std::vector<Event> events;
    RwTable rws = rw_table(c);
    std::set<std::string> pure = pure_events_filter(c);
    HBRelation hb;
    try {
        s0 = make_initial_state(c, sc);
        events = generate_events(c, sc);
        hb = extract_whb(c, s0, events, hb_candidate_pairs(c));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (args.dump_rwsets) {
        nlohmann::json rwj = nlohmann::json::object();
        for (const auto& [fn, rw] : rws)
            rwj[fn] = {{"reads", std::vector<std::string>(rw.reads.begin(), rw.reads.end())},
                       {"writes", std::vector<std::string>(rw.writes.begin(), rw.writes.end())}};
        std::cout << rwj.dump(2) << "\n";
    }

    FuzzResult fuzz;
    LinResult lin;
    bool bugs = false;
    if (mode_sync) {
        FuzzConfig fc;
        fc.kmin = kmin;
        fc.kmax = kmax;
        fc.witness_cap = args.witness_cap;
        fc.pairwise_diff = args.pairwise_diff;
        fc.compare_transfers = args.compare_transfers;
        fc.timeout_sec = args.timeout_min * 60.0;
        fc.jobs = args.jobs > 0 ? args.jobs
                                : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        fuzz = find_eo_bugs(c, s0, events, hb, fc);
        bugs = bugs || !fuzz.minimized.empty();
    }
    if (mode_lin) {
        try {
            lin = check_lin(c, s0, events, sc, kmax);
        } catch (const NoCallbackError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        bugs = bugs || !lin.violations.empty();
    }
    auto wall_ms = static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                             std::chrono::steady_clock::now() - started)
                                             .count());

    std::cout << "contract " << c.name << ": " << events.size() << " events, " << hb.pairs.size()
              << " hb pairs, " << pure.size() << " pure functions excluded\n";
    if (mode_sync) {
        std::cout << "sync: " << fuzz.stats.traces_enumerated << " traces ("
                  << fuzz.stats.traces_skipped_by_hb << " pruned by hb), "
                  << fuzz.stats.witnesses_found << " raw witnesses, " << fuzz.minimized.size()
                  << " minimized\n";
        if (fuzz.stats.truncated) std::cout << "sync: truncated by timeout; results are partial\n";
        for (const auto& w : fuzz.minimized) {
            std::cout << "  witness:";
            for (int i : w.trace_a) std::cout << " " << events[static_cast<size_t>(i)].fn;
            std::cout << "  vs ";
            for (int i : w.trace_b) std::cout << " " << events[static_cast<size_t>(i)].fn;
            std::cout << "\n";
        }
    }
    if (mode_lin) {
        if (lin.skipped) {
            std::cout << "lin: skipped (fewer than two oracle calls)\n";
        } else {
            std::cout << "lin: " << lin.interleavings_checked << " interleavings, "
                      << lin.canonical_outputs.size() << " canonical outputs, "
                      << lin.violations.size() << " violations\n";
            for (const auto& v : lin.violations) {
                std::cout << "  violation:";
                for (const auto& t : v.flagged.sched)
                    std::cout << " " << (t.is_ret ? "ret" : "call") << t.tx;
                std::cout << " (distance " << v.distance << " from canonical)\n";
            }
        }
    }
    if (args.timing) std::cout << "wall time: " << wall_ms << " ms\n";

    if (!args.report_path.empty()) {
        ReportConfig rc;
        rc.mode_sync = mode_sync;
        rc.mode_lin = mode_lin;
        rc.compare_transfers = args.compare_transfers;
        rc.kmin = kmin;
        rc.kmax = kmax;
        rc.witness_cap = args.witness_cap;
        rc.seed = args.seed;
        rc.jobs = args.jobs;
        if (args.timing) rc.wall_ms = wall_ms;
        nlohmann::json rep = build_report(c, source, scenario_json, s0, events, rws, pure, hb,
                                          mode_sync ? &fuzz : nullptr, mode_lin ? &lin : nullptr, rc);
        try {
            write_report(rep, args.report_path);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }
    return bugs ? 2 : 0;
}

int run_verify(const std::string& path) {
    nlohmann::json rep;
    try {
        rep = read_report(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    try {
        verify_report(rep);
    } catch (const ReplayMismatch& e) {
        std::cerr << "replay mismatch: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << "report verified: all findings replay\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"event-ordering bug detector for contract DSL sources"};
    app.require_subcommand(1);

    AnalyzeArgs args;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze a contract against a scenario");
    analyze->add_option("contract", args.contract_path, "contract source (.fsol)")->required();
    analyze->add_option("--scenario", args.scenario_path, "scenario JSON file")
        ->required()
        ->envname("ETHRACER_SCENARIO");
    analyze->add_option("--state", args.state_path, "initial state snapshot JSON (overrides scenario)")
        ->envname("ETHRACER_STATE");
    analyze->add_option("--report", args.report_path, "write the JSON report here")
        ->envname("ETHRACER_REPORT");
    analyze->add_option("--mode", args.mode, "sync, lin, or both (default: both if __callback)")
        ->envname("ETHRACER_MODE");
    analyze->add_option("--max-len", args.max_len, "longest trace to enumerate")
        ->envname("ETHRACER_MAX_LEN");
    analyze->add_option("--min-len", args.min_len, "shortest trace to enumerate")
        ->envname("ETHRACER_MIN_LEN");
    analyze->add_option("--timeout-min", args.timeout_min, "fuzzing budget in minutes")
        ->envname("ETHRACER_TIMEOUT_MIN");
    analyze->add_option("--witness-cap", args.witness_cap, "witnesses kept per interleaving class")
        ->envname("ETHRACER_WITNESS_CAP");
    analyze->add_option("--seed", args.seed, "seed recorded in the report")
        ->envname("ETHRACER_SEED");
    analyze->add_option("--jobs", args.jobs, "worker threads (default: cores)")
        ->envname("ETHRACER_JOBS");
    analyze->add_flag("--dump-rwsets", args.dump_rwsets, "print the read/write-set table");
    analyze->add_flag("--compare-transfers", args.compare_transfers,
                      "include the transfer log in outputs");
    analyze->add_flag("--pairwise-diff", args.pairwise_diff,
                      "compare every trace pair in a class, not just against the reference");
    analyze->add_flag("--timing", args.timing, "report wall time (breaks byte determinism)");

    std::string report_path;
    CLI::App* verify = app.add_subcommand("verify", "replay all findings of a report");
    verify->add_option("report", report_path, "report JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (analyze->parsed()) return run_analyze(args);
    return run_verify(report_path);
}

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ethracer/effects.hpp"
#include "ethracer/eventgen.hpp"
#include "ethracer/hb.hpp"
#include "ethracer/parser.hpp"
#include "ethracer/scenario.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::string corpus_path(const std::string& name) {
    return std::string(CORPUS_DIR) + "/" + name;
}

inline ethracer::Contract parse_ok(const std::string& source) {
    ethracer::ParseResult r = ethracer::parse_contract(source);
    if (!r.ok()) {
        std::string msg = "parse failed:";
        for (const auto& d : r.diagnostics)
            msg += " [" + std::to_string(d.loc.line) + ":" + std::to_string(d.loc.col) + "] " +
                   d.message;
        throw std::runtime_error(msg);
    }
    return std::move(*r.contract);
}

struct Pipeline {
    ethracer::Contract contract;
    ethracer::Scenario scenario;
    ethracer::WorldState s0;
    std::vector<ethracer::Event> events;
    ethracer::HBRelation hb;
};

// Parse corpus/<base>.fsol + corpus/<base>.scenario.json and run the
// front half of the analysis (events + whb).
inline Pipeline load_pipeline(const std::string& base) {
    Pipeline p;
    p.contract = parse_ok(read_file(corpus_path(base + ".fsol")));
    p.scenario = ethracer::load_scenario_file(corpus_path(base + ".scenario.json"));
    p.s0 = ethracer::make_initial_state(p.contract, p.scenario);
    p.events = ethracer::generate_events(p.contract, p.scenario);
    p.hb = ethracer::extract_whb(p.contract, p.s0, p.events,
                                 ethracer::hb_candidate_pairs(p.contract));
    return p;
}

inline std::vector<std::string> fn_names(const std::vector<ethracer::Event>& pool,
                                         const std::vector<int>& trace) {
    std::vector<std::string> out;
    for (int i : trace) out.push_back(pool[static_cast<size_t>(i)].fn);
    return out;
}

}  // namespace testutil

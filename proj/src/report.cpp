#include "ethracer/report.hpp"

#include <fstream>
#include <sstream>

#include "ethracer/interp.hpp"
#include "ethracer/parser.hpp"

namespace ethracer {

using nlohmann::json;

namespace {

std::string hex64(uint64_t v) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << v;
    return os.str();
}

std::string render_typed(const u256& v, ScalarKind k) {
    return k == ScalarKind::Address ? to_hex(v) : to_dec(v);
}

json sched_to_json(const std::vector<SchedTok>& sched) {
    json arr = json::array();
    for (const auto& t : sched)
        arr.push_back((t.is_ret ? "ret:" : "call:") + std::to_string(t.tx));
    return arr;
}

json lin_trace_to_json(const Contract& c, const LinTrace& t) {
    json j;
    j["sched"] = sched_to_json(t.sched);
    json statuses = json::array();
    for (const auto st : t.statuses) statuses.push_back(event_status_name(st));
    j["statuses"] = statuses;
    json evs = json::array();
    for (size_t i = 0; i < t.events.size(); ++i)
        evs.push_back(event_to_json(c, t.events[i], static_cast<int>(i)));
    j["events"] = evs;
    j["output"] = t.output.canonical;
    j["output_hash"] = hex64(t.output.hash);
    return j;
}

json witness_to_json(const Contract& c, const std::vector<Event>& pool, const WitnessPair& w) {
    json j;
    j["trace_a"] = w.trace_a;
    j["trace_b"] = w.trace_b;
    json fa = json::array(), fb = json::array();
    for (int i : w.trace_a) fa.push_back(pool[static_cast<size_t>(i)].fn);
    for (int i : w.trace_b) fb.push_back(pool[static_cast<size_t>(i)].fn);
    j["fns_a"] = fa;
    j["fns_b"] = fb;
    j["output_a"] = w.output_a.canonical;
    j["output_b"] = w.output_b.canonical;
    j["output_hash_a"] = hex64(w.output_a.hash);
    j["output_hash_b"] = hex64(w.output_b.hash);
    (void)c;
    return j;
}

Event event_from_json(const json& j) {
    std::vector<u256> args;
    for (const auto& a : j.at("args")) args.push_back(parse_u256(a.get<std::string>()));
    return make_event(j.at("fn").get<std::string>(), parse_u256(j.at("sender").get<std::string>()),
                      parse_u256(j.at("value").get<std::string>()), std::move(args),
                      parse_u256(j.at("timestamp").get<std::string>()),
                      parse_u256(j.at("blocknumber").get<std::string>()));
}

void fail_replay(const std::string& what) { throw ReplayMismatch(what); }

}  // namespace

json state_to_json(const WorldState& s, const Contract& c) {
    json fields = json::object();
    for (const auto& [name, value] : s.fields) {
        const FieldDecl* decl = c.field(name);
        ScalarKind k = decl ? decl->type.scalar : ScalarKind::Uint;
        if (std::holds_alternative<u256>(value)) {
            fields[name] = render_typed(std::get<u256>(value), k);
        } else if (std::holds_alternative<std::vector<u256>>(value)) {
            json arr = json::array();
            for (const auto& v : std::get<std::vector<u256>>(value))
                arr.push_back(render_typed(v, k));
            fields[name] = arr;
        } else if (std::holds_alternative<std::map<u256, u256>>(value)) {
            json m = json::object();
            for (const auto& [key, v] : std::get<std::map<u256, u256>>(value))
                m[to_hex(key)] = to_dec(v);
            fields[name] = m;
        } else {
            json m = json::object();
            for (const auto& [key, inner] : std::get<std::map<u256, std::map<u256, u256>>>(value)) {
                json im = json::object();
                for (const auto& [key2, v] : inner) im[to_hex(key2)] = to_dec(v);
                m[to_hex(key)] = im;
            }
            fields[name] = m;
        }
    }
    json out;
    out["fields"] = fields;
    out["balance"] = to_dec(s.balance);
    json ext = json::object();
    for (const auto& [addr, bal] : s.ext_balances) ext[to_hex(addr)] = to_dec(bal);
    out["ext_balances"] = ext;
    return out;
}

json event_to_json(const Contract& c, const Event& e, int index) {
    json j;
    j["index"] = index;
    j["fn"] = e.fn;
    j["sender"] = to_hex(e.msg.sender);
    j["value"] = to_dec(e.msg.value);
    json args = json::array();
    const Function* fn = c.function(e.fn);
    for (size_t i = 0; i < e.msg.args.size(); ++i) {
        ScalarKind k = fn && i < fn->params.size() ? fn->params[i].type : ScalarKind::Uint;
        args.push_back(render_typed(e.msg.args[i], k));
    }
    j["args"] = args;
    j["timestamp"] = to_dec(e.msg.timestamp);
    j["blocknumber"] = to_dec(e.msg.blocknumber);
    return j;
}

json build_report(const Contract& c, const std::string& source, const json& scenario_json,
                  const WorldState& s0, const std::vector<Event>& events, const RwTable& rws,
                  const std::set<std::string>& pure, const HBRelation& hb, const FuzzResult* fuzz,
                  const LinResult* lin, const ReportConfig& rc) {
    json r;
    r["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    r["contract"] = c.name;
    r["source"] = source;
    r["source_hash"] = hex64(fnv1a(source));
    r["scenario"] = scenario_json;
    r["initial_state"] = state_to_json(s0, c);

    json cfg;
    cfg["mode"] = {{"sync", rc.mode_sync}, {"lin", rc.mode_lin}};
    cfg["compare_transfers"] = rc.compare_transfers;
    cfg["min_len"] = rc.kmin;
    cfg["max_len"] = rc.kmax;
    cfg["witness_cap"] = rc.witness_cap;
    cfg["seed"] = rc.seed;
    cfg["jobs"] = rc.jobs;
    if (rc.wall_ms) cfg["wall_time_ms"] = *rc.wall_ms;
    r["config"] = cfg;

    json evs = json::array();
    for (size_t i = 0; i < events.size(); ++i)
        evs.push_back(event_to_json(c, events[i], static_cast<int>(i)));
    r["events"] = evs;

    json rwj = json::object();
    for (const auto& [fn, rw] : rws) {
        rwj[fn] = {{"reads", json(std::vector<std::string>(rw.reads.begin(), rw.reads.end()))},
                   {"writes", json(std::vector<std::string>(rw.writes.begin(), rw.writes.end()))}};
    }
    r["rw_sets"] = rwj;
    r["excluded_pure"] = std::vector<std::string>(pure.begin(), pure.end());

    json hbj;
    json pairs = json::array(), named = json::array();
    for (const auto& [i, j] : hb.pairs) {
        pairs.push_back({i, j});
        named.push_back({events[static_cast<size_t>(i)].fn, events[static_cast<size_t>(j)].fn});
    }
    hbj["pairs"] = pairs;
    hbj["named"] = named;
    r["hb"] = hbj;

    if (fuzz) {
        json f;
        f["stats"] = {{"traces_enumerated", fuzz->stats.traces_enumerated},
                      {"traces_skipped_by_hb", fuzz->stats.traces_skipped_by_hb},
                      {"subsets_visited", fuzz->stats.subsets_visited},
                      {"witnesses_found", fuzz->stats.witnesses_found},
                      {"minimized_count", fuzz->stats.minimized_count},
                      {"truncated", fuzz->stats.truncated}};
        json raw = json::array();
        for (const auto& w : fuzz->raw) raw.push_back(witness_to_json(c, events, w));
        f["witnesses"] = raw;
        json mins = json::array();
        for (const auto& w : fuzz->minimized) mins.push_back(witness_to_json(c, events, w));
        f["minimized"] = mins;
        r["fuzz"] = f;
    } else {
        r["fuzz"] = nullptr;
    }

    if (lin) {
        json l;
        l["skipped"] = lin->skipped;
        l["interleavings_checked"] = lin->interleavings_checked;
        json canon = json::array();
        for (const auto& o : lin->canonical_outputs) canon.push_back(o.canonical);
        l["canonical_outputs"] = canon;
        json viols = json::array();
        for (const auto& v : lin->violations) {
            json vj;
            vj["flagged"] = lin_trace_to_json(c, v.flagged);
            vj["closest"] = lin_trace_to_json(c, v.closest);
            vj["distance"] = v.distance;
            LinPairing p = match_call_return(c, s0, v.flagged.events);
            json txs = json::array();
            for (const auto& tx : p.txs)
                txs.push_back(
                    {{"call_pos", tx.call_pos}, {"ret_pos", tx.ret_pos}, {"qid", to_dec(tx.qid)}});
            vj["pairing"] = txs;
            vj["unmatched_rets"] = p.unmatched_rets;
            vj["duplicate_rets"] = p.duplicate_rets;
            viols.push_back(vj);
        }
        l["violations"] = viols;
        r["lin"] = l;
    } else {
        r["lin"] = nullptr;
    }
    return r;
}

void write_report(const json& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write report: " + path);
    out << report.dump(2) << '\n';
}

json read_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read report: " + path);
    json j;
    in >> j;
    return j;
}

void verify_report(const json& report) {
    ParseResult pr = parse_contract(report.at("source").get<std::string>());
    if (!pr.ok()) fail_replay("embedded source no longer parses");
    const Contract& c = *pr.contract;

    Scenario dummy;  // replay needs only numeric resolution
    WorldState s0 = default_state(c);
    apply_snapshot(s0, report.at("initial_state"), c, dummy);

    std::vector<Event> events;
    for (const auto& ej : report.at("events")) events.push_back(event_from_json(ej));
    bool compare_transfers = report.at("config").at("compare_transfers").get<bool>();

    for (const auto& pj : report.at("hb").at("pairs")) {
        int i = pj.at(0).get<int>();
        int j = pj.at(1).get<int>();
        if (i < 0 || j < 0 || i >= static_cast<int>(events.size()) ||
            j >= static_cast<int>(events.size()))
            fail_replay("hb pair indexes out of range");
        bool fwd = exec_trace(c, s0, {events[static_cast<size_t>(i)], events[static_cast<size_t>(j)]},
                              TraceMode::Strict)
                       .valid;
        bool bwd = exec_trace(c, s0, {events[static_cast<size_t>(j)], events[static_cast<size_t>(i)]},
                              TraceMode::Strict)
                       .valid;
        if (!fwd || bwd)
            fail_replay("hb pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") does not replay");
    }

    auto replay_witness = [&](const json& wj, const char* kind) {
        auto trace_events = [&](const json& idxs) {
            std::vector<Event> t;
            for (const auto& ij : idxs) {
                int i = ij.get<int>();
                if (i < 0 || i >= static_cast<int>(events.size()))
                    fail_replay(std::string(kind) + " witness index out of range");
                t.push_back(events[static_cast<size_t>(i)]);
            }
            return t;
        };
        TraceOutcome a = exec_trace(c, s0, trace_events(wj.at("trace_a")), TraceMode::Strict);
        TraceOutcome b = exec_trace(c, s0, trace_events(wj.at("trace_b")), TraceMode::Strict);
        if (!a.valid || !b.valid) fail_replay(std::string(kind) + " witness no longer valid");
        Output oa = output_of(a.final_state, c, compare_transfers);
        Output ob = output_of(b.final_state, c, compare_transfers);
        if (oa.canonical != wj.at("output_a").get<std::string>() ||
            ob.canonical != wj.at("output_b").get<std::string>())
            fail_replay(std::string(kind) + " witness outputs drifted");
        if (oa == ob) fail_replay(std::string(kind) + " witness no longer diverges");
    };
    if (!report.at("fuzz").is_null()) {
        for (const auto& wj : report.at("fuzz").at("witnesses")) replay_witness(wj, "raw");
        for (const auto& wj : report.at("fuzz").at("minimized")) replay_witness(wj, "minimized");
    }

    if (!report.at("lin").is_null()) {
        std::set<std::string> canon;
        for (const auto& oj : report.at("lin").at("canonical_outputs"))
            canon.insert(oj.get<std::string>());
        auto replay_lin_trace = [&](const json& tj) -> Output {
            std::vector<Event> t;
            for (const auto& ej : tj.at("events")) t.push_back(event_from_json(ej));
            TraceOutcome out = exec_trace(c, s0, t, TraceMode::Tolerant);
            std::vector<std::string> expect;
            for (const auto& sj : tj.at("statuses")) {
                std::string s = sj.get<std::string>();
                if (s != "skipped") expect.push_back(s);
            }
            if (expect.size() != out.statuses.size())
                fail_replay("lin trace status arity drifted");
            for (size_t i = 0; i < expect.size(); ++i)
                if (expect[i] != event_status_name(out.statuses[i]))
                    fail_replay("lin trace statuses drifted");
            Output o = output_of(out.final_state, c, false);
            if (o.canonical != tj.at("output").get<std::string>())
                fail_replay("lin trace output drifted");
            return o;
        };
        for (const auto& vj : report.at("lin").at("violations")) {
            Output flagged = replay_lin_trace(vj.at("flagged"));
            replay_lin_trace(vj.at("closest"));
            if (canon.count(flagged.canonical))
                fail_replay("flagged lin trace became canonical");
        }
    }
}

}  // namespace ethracer

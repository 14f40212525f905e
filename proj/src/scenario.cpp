#include "ethracer/scenario.hpp"

#include <fstream>

namespace ethracer {

using nlohmann::json;

const Actor* Scenario::actor(const std::string& name) const {
    for (const auto& a : actors)
        if (a.name == name) return &a;
    return nullptr;
}

u256 Scenario::resolve_word(const std::string& text) const {
    if (const Actor* a = actor(text)) return a->address;
    if (text == "true") return 1;
    if (text == "false") return 0;
    try {
        return parse_u256(text);
    } catch (const std::invalid_argument&) {
        throw ScenarioError("cannot resolve value '" + text + "' (not an actor, number, or bool)");
    }
}

namespace {

u256 word_of(const json& v, const Scenario& sc, const char* what) {
    if (v.is_string()) return sc.resolve_word(v.get<std::string>());
    if (v.is_number_unsigned()) return u256(v.get<uint64_t>());
    if (v.is_boolean()) return v.get<bool>() ? 1 : 0;
    throw ScenarioError(std::string(what) + ": expected a string or unsigned number");
}

std::vector<u256> word_list(const json& v, const Scenario& sc, const char* what) {
    if (!v.is_array()) throw ScenarioError(std::string(what) + ": expected an array");
    std::vector<u256> out;
    for (const auto& e : v) out.push_back(word_of(e, sc, what));
    return out;
}

u256 auto_address(size_t i) {
    // 0xa1 top byte, index in the low bits: distinct, recognizably synthetic.
    return (u256(0xa1) << 152) + (i + 1);
}

}  // namespace

Scenario load_scenario(const json& j) {
    if (!j.is_object()) throw ScenarioError("scenario: expected a JSON object");
    Scenario sc;
    if (!j.contains("actors") || !j["actors"].is_array() || j["actors"].empty())
        throw ScenarioError("scenario: 'actors' must be a non-empty array");
    size_t idx = 0;
    for (const auto& a : j["actors"]) {
        Actor actor;
        if (a.is_string()) {
            actor.name = a.get<std::string>();
        } else if (a.is_object()) {
            actor.name = a.value("name", "");
            if (a.contains("address")) actor.address = parse_u256(a["address"].get<std::string>());
            if (a.contains("balance")) actor.balance = parse_u256(a["balance"].get<std::string>());
        }
        if (actor.name.empty()) throw ScenarioError("scenario: actor without a name");
        if (sc.actor(actor.name)) throw ScenarioError("scenario: duplicate actor '" + actor.name + "'");
        if (actor.address == 0) actor.address = auto_address(idx);
        sc.actors.push_back(std::move(actor));
        ++idx;
    }
    if (j.contains("value_domain")) sc.value_domain = word_list(j["value_domain"], sc, "value_domain");
    if (sc.value_domain.empty()) throw ScenarioError("scenario: value_domain must not be empty");
    if (j.contains("uint_domain")) sc.uint_domain = word_list(j["uint_domain"], sc, "uint_domain");
    if (j.contains("callback_results"))
        sc.callback_results = word_list(j["callback_results"], sc, "callback_results");
    if (j.contains("budgets")) {
        const auto& b = j["budgets"];
        sc.budgets.events_per_hb_pair = b.value("events_per_hb_pair", 3);
        sc.budgets.events_per_other_fn = b.value("events_per_other_fn", 1);
    }
    if (sc.budgets.events_per_hb_pair < 1 || sc.budgets.events_per_other_fn < 1)
        throw ScenarioError("scenario: budgets must be >= 1");
    if (j.contains("timestamp")) sc.timestamp = word_of(j["timestamp"], sc, "timestamp");
    if (j.contains("blocknumber")) sc.blocknumber = word_of(j["blocknumber"], sc, "blocknumber");
    sc.max_trace_len = j.value("max_trace_len", 6);
    sc.min_trace_len = j.value("min_trace_len", 2);
    if (sc.min_trace_len < 2) throw ScenarioError("scenario: min_trace_len must be >= 2");
    if (sc.max_trace_len < sc.min_trace_len)
        throw ScenarioError("scenario: max_trace_len must be >= min_trace_len");
    if (j.contains("per_function")) {
        if (!j["per_function"].is_object())
            throw ScenarioError("scenario: per_function must be an object");
        for (const auto& [fn, tuples] : j["per_function"].items()) {
            if (!tuples.is_array())
                throw ScenarioError("scenario: per_function." + fn + " must be an array");
            for (const auto& t : tuples) {
                ExplicitTuple tup;
                if (t.is_array()) {
                    for (const auto& a : t) tup.args.push_back(word_of(a, sc, fn.c_str()));
                } else if (t.is_object()) {
                    if (t.contains("sender")) tup.sender = word_of(t["sender"], sc, "sender");
                    if (t.contains("value")) tup.value = word_of(t["value"], sc, "value");
                    if (t.contains("timestamp")) tup.timestamp = word_of(t["timestamp"], sc, "timestamp");
                    if (t.contains("blocknumber"))
                        tup.blocknumber = word_of(t["blocknumber"], sc, "blocknumber");
                    if (t.contains("args"))
                        for (const auto& a : t["args"]) tup.args.push_back(word_of(a, sc, fn.c_str()));
                } else {
                    throw ScenarioError("scenario: per_function." + fn + " entries must be arrays or objects");
                }
                sc.per_function[fn].push_back(std::move(tup));
            }
        }
    }
    if (j.contains("initial_state")) sc.initial_state = j["initial_state"];
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ScenarioError("scenario JSON parse error in " + path + ": " + e.what());
    }
    return load_scenario(j);
}

namespace {

void apply_field(FieldValue& slot, const json& v, const Type& t, const Scenario& sc,
                 const std::string& name) {
    switch (t.kind) {
        case Type::Kind::Scalar:
            slot = word_of(v, sc, name.c_str());
            break;
        case Type::Kind::Array: {
            if (!v.is_array()) throw ScenarioError("field " + name + ": expected an array");
            std::vector<u256> arr;
            for (const auto& e : v) arr.push_back(word_of(e, sc, name.c_str()));
            slot = std::move(arr);
            break;
        }
        case Type::Kind::Map: {
            if (!v.is_object()) throw ScenarioError("field " + name + ": expected an object");
            std::map<u256, u256> m;
            for (const auto& [k, val] : v.items())
                m[sc.resolve_word(k)] = word_of(val, sc, name.c_str());
            slot = std::move(m);
            break;
        }
        case Type::Kind::Map2: {
            if (!v.is_object()) throw ScenarioError("field " + name + ": expected an object");
            std::map<u256, std::map<u256, u256>> m;
            for (const auto& [k, inner] : v.items()) {
                if (!inner.is_object())
                    throw ScenarioError("field " + name + ": expected nested objects");
                for (const auto& [k2, val] : inner.items())
                    m[sc.resolve_word(k)][sc.resolve_word(k2)] = word_of(val, sc, name.c_str());
            }
            slot = std::move(m);
            break;
        }
    }
}

}  // namespace

void apply_snapshot(WorldState& st, const json& j, const Contract& c, const Scenario& sc) {
    if (j.is_null()) return;
    if (!j.is_object()) throw ScenarioError("state snapshot: expected a JSON object");
    if (j.contains("balance")) st.balance = word_of(j["balance"], sc, "balance");
    if (j.contains("fields")) {
        for (const auto& [name, v] : j["fields"].items()) {
            const FieldDecl* decl = c.field(name);
            if (!decl) throw ScenarioError("state snapshot: unknown field '" + name + "'");
            apply_field(st.fields.at(name), v, decl->type, sc, name);
        }
    }
    if (j.contains("ext_balances")) {
        for (const auto& [who, v] : j["ext_balances"].items())
            st.ext_balances[sc.resolve_word(who)] = word_of(v, sc, "ext_balances");
    }
}

WorldState make_initial_state(const Contract& c, const Scenario& sc) {
    WorldState st = default_state(c);
    for (const auto& a : sc.actors) st.ext_balances[a.address] = a.balance;
    apply_snapshot(st, sc.initial_state, c, sc);
    return st;
}

}  // namespace ethracer

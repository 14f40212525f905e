#include "ethracer/state.hpp"

#include <sstream>

namespace ethracer {

Event make_event(const std::string& fn, const u256& sender, const u256& value,
                 std::vector<u256> args, const u256& timestamp, const u256& blocknumber) {
    Event e;
    e.fn = fn;
    e.msg.sender = sender;
    e.msg.value = value;
    e.msg.fname = fn;
    e.msg.args = std::move(args);
    e.msg.timestamp = timestamp;
    e.msg.blocknumber = blocknumber;
    return e;
}

WorldState default_state(const Contract& c) {
    WorldState s;
    for (const auto& f : c.fields) {
        switch (f.type.kind) {
            case Type::Kind::Scalar: s.fields[f.name] = u256(0); break;
            case Type::Kind::Array: s.fields[f.name] = std::vector<u256>{}; break;
            case Type::Kind::Map: s.fields[f.name] = std::map<u256, u256>{}; break;
            case Type::Kind::Map2: s.fields[f.name] = std::map<u256, std::map<u256, u256>>{}; break;
        }
    }
    return s;
}

namespace {

std::string render_word(const u256& v, ScalarKind k) {
    return k == ScalarKind::Address ? to_hex(v) : to_dec(v);
}

void field_to(std::ostream& os, const FieldValue& v, const Type& t) {
    if (std::holds_alternative<u256>(v)) {
        os << '"' << render_word(std::get<u256>(v), t.scalar) << '"';
        return;
    }
    if (std::holds_alternative<std::vector<u256>>(v)) {
        os << '[';
        const auto& arr = std::get<std::vector<u256>>(v);
        for (size_t i = 0; i < arr.size(); ++i) {
            if (i) os << ',';
            os << '"' << render_word(arr[i], t.scalar) << '"';
        }
        os << ']';
        return;
    }
    if (std::holds_alternative<std::map<u256, u256>>(v)) {
        os << '{';
        bool first = true;
        for (const auto& [k, val] : std::get<std::map<u256, u256>>(v)) {
            if (val == 0) continue;
            if (!first) os << ',';
            first = false;
            os << '"' << to_hex(k) << "\":\"" << to_dec(val) << '"';
        }
        os << '}';
        return;
    }
    os << '{';
    bool first = true;
    for (const auto& [k, inner] : std::get<std::map<u256, std::map<u256, u256>>>(v)) {
        bool any = false;
        for (const auto& [k2, val] : inner)
            if (val != 0) any = true;
        if (!any) continue;
        if (!first) os << ',';
        first = false;
        os << '"' << to_hex(k) << "\":{";
        bool inner_first = true;
        for (const auto& [k2, val] : inner) {
            if (val == 0) continue;
            if (!inner_first) os << ',';
            inner_first = false;
            os << '"' << to_hex(k2) << "\":\"" << to_dec(val) << '"';
        }
        os << '}';
    }
    os << '}';
}

}  // namespace

Output output_of(const WorldState& s, const Contract& c, bool compare_transfers) {
    std::ostringstream os;
    os << "{\"balance\":\"" << to_dec(s.balance) << "\",\"fields\":{";
    bool first = true;
    for (const auto& [name, value] : s.fields) {
        if (!first) os << ',';
        first = false;
        os << '"' << name << "\":";
        const FieldDecl* decl = c.field(name);
        Type t = decl ? decl->type : Type{};
        field_to(os, value, t);
    }
    os << '}';
    if (compare_transfers) {
        os << ",\"transfers\":[";
        for (size_t i = 0; i < s.transfer_log.size(); ++i) {
            if (i) os << ',';
            const auto& r = s.transfer_log[i];
            os << "[\"" << to_hex(r.to) << "\",\"" << to_dec(r.amount) << "\","
               << (r.ok ? "true" : "false") << ']';
        }
        os << ']';
    }
    os << '}';
    Output out;
    out.canonical = os.str();
    out.hash = fnv1a(out.canonical);
    return out;
}

u256 total_ether(const WorldState& s) {
    u256 sum = s.balance;
    for (const auto& [addr, bal] : s.ext_balances) sum += bal;
    return sum;
}

}  // namespace ethracer

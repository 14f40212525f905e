#include "ethracer/eventgen.hpp"

#include <algorithm>

#include "ethracer/effects.hpp"

namespace ethracer {

std::vector<u256> arg_domain(const Contract& c, const Scenario& sc, ScalarKind kind) {
    std::vector<u256> dom;
    switch (kind) {
        case ScalarKind::Address:
            for (const auto& a : sc.actors) dom.push_back(a.address);
            break;
        case ScalarKind::Bool:
            dom = {0, 1};
            break;
        case ScalarKind::Uint: {
            HarvestedConstants h = harvest_constants(c);
            for (const auto& v : sc.uint_domain) h.uints.insert(v);
            dom.assign(h.uints.begin(), h.uints.end());  // set: already ascending
            break;
        }
    }
    return dom;
}

namespace {

Event event_from_tuple(const Function& fn, const Scenario& sc, const ExplicitTuple& t) {
    if (t.args.size() != fn.params.size())
        throw GenError("explicit tuple for " + fn.name + " has " + std::to_string(t.args.size()) +
                       " args, expected " + std::to_string(fn.params.size()));
    for (size_t i = 0; i < t.args.size(); ++i)
        if (fn.params[i].type == ScalarKind::Bool && t.args[i] > 1)
            throw GenError("explicit tuple for " + fn.name + ": bool arg out of range");
    u256 sender = t.sender ? *t.sender : sc.actors[0].address;
    u256 value = t.value ? *t.value : (fn.payable ? sc.value_domain[0] : u256(0));
    return make_event(fn.name, sender, value, t.args, t.timestamp.value_or(sc.timestamp),
                      t.blocknumber.value_or(sc.blocknumber));
}

std::vector<Event> cartesian_events(const Contract& c, const Function& fn, const Scenario& sc,
                                    size_t budget) {
    // Odometer dimensions: sender, msg.value (payable only), then one per
    // parameter; rightmost varies fastest.
    std::vector<std::vector<u256>> dims;
    std::vector<u256> senders;
    for (const auto& a : sc.actors) senders.push_back(a.address);
    dims.push_back(std::move(senders));
    if (fn.payable) dims.push_back(sc.value_domain);
    for (const auto& p : fn.params) {
        std::vector<u256> dom = arg_domain(c, sc, p.type);
        if (dom.empty())
            throw GenError("empty domain for parameter " + p.name + " of " + fn.name);
        dims.push_back(std::move(dom));
    }
    std::vector<Event> out;
    std::vector<size_t> idx(dims.size(), 0);
    while (true) {
        size_t d = 0;
        u256 sender = dims[0][idx[0]];
        ++d;
        u256 value = 0;
        if (fn.payable) {
            value = dims[1][idx[1]];
            ++d;
        }
        std::vector<u256> args;
        for (; d < dims.size(); ++d) args.push_back(dims[d][idx[d]]);
        out.push_back(make_event(fn.name, sender, value, std::move(args), sc.timestamp,
                                 sc.blocknumber));
        if (out.size() >= budget) break;
        size_t pos = dims.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < dims[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return out;  // odometer wrapped: done
        }
    }
    return out;
}

}  // namespace

std::vector<Event> generate_events(const Contract& c, const Scenario& sc) {
    std::set<std::string> pure = pure_events_filter(c);
    auto candidates = hb_candidate_pairs(c);
    std::set<std::string> in_pair;
    for (const auto& [a, b] : candidates) {
        in_pair.insert(a);
        in_pair.insert(b);
    }
    std::vector<Event> events;
    for (const auto& fn : c.functions) {
        if (fn.name == "__callback") continue;
        if (pure.count(fn.name)) continue;
        if (fn.name == "fallback") {
            // One plain invocation per actor.
            for (const auto& a : sc.actors)
                events.push_back(make_event(fn.name, a.address,
                                            fn.payable ? sc.value_domain[0] : u256(0), {},
                                            sc.timestamp, sc.blocknumber));
            continue;
        }
        size_t budget = static_cast<size_t>(in_pair.count(fn.name) ? sc.budgets.events_per_hb_pair
                                                                   : sc.budgets.events_per_other_fn);
        if (budget == 0) throw GenError("zero budget for " + fn.name);
        auto it = sc.per_function.find(fn.name);
        std::vector<Event> drawn;
        if (it != sc.per_function.end() && !it->second.empty()) {
            for (const auto& t : it->second) drawn.push_back(event_from_tuple(fn, sc, t));
        } else {
            drawn = cartesian_events(c, fn, sc, budget);
        }
        if (drawn.size() > budget) drawn.resize(budget);
        events.insert(events.end(), std::make_move_iterator(drawn.begin()),
                      std::make_move_iterator(drawn.end()));
    }
    return events;
}

}  // namespace ethracer

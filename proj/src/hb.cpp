#include "ethracer/hb.hpp"

#include "ethracer/interp.hpp"

namespace ethracer {

namespace {

std::set<u256> uint_args(const Contract& c, const Event& e) {
    std::set<u256> out;
    const Function* fn = c.function(e.fn);
    if (!fn) return out;
    for (size_t i = 0; i < fn->params.size() && i < e.msg.args.size(); ++i)
        if (fn->params[i].type == ScalarKind::Uint) out.insert(e.msg.args[i]);
    return out;
}

bool overlaps(const std::set<u256>& a, const std::set<u256>& b) {
    if (a.empty() || b.empty()) return true;
    for (const auto& v : a)
        if (b.count(v)) return true;
    return false;
}

}  // namespace

HBRelation extract_whb(const Contract& c, const WorldState& s0, const std::vector<Event>& events,
                       const std::set<std::pair<std::string, std::string>>& candidates) {
    HBRelation r;
    const int n = static_cast<int>(events.size());
    std::vector<std::set<u256>> uargs(events.size());
    for (size_t i = 0; i < events.size(); ++i) uargs[i] = uint_args(c, events[i]);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::string& fi = events[i].fn;
            const std::string& fj = events[j].fn;
            auto key = std::make_pair(std::min(fi, fj), std::max(fi, fj));
            if (!candidates.count(key)) continue;
            if (!overlaps(uargs[i], uargs[j])) continue;
            bool fwd = exec_trace(c, s0, {events[i], events[j]}, TraceMode::Strict).valid;
            bool bwd = exec_trace(c, s0, {events[j], events[i]}, TraceMode::Strict).valid;
            if (fwd && !bwd) r.pairs.emplace(i, j);
            if (bwd && !fwd) r.pairs.emplace(j, i);
        }
    }
    return r;
}

}  // namespace ethracer

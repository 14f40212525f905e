#include "ethracer/linearizer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ethracer/effects.hpp"

namespace ethracer {

LinPairing match_call_return(const Contract& c, const WorldState& s0, const std::vector<Event>& h) {
    LinPairing p;
    std::map<u256, int> issuer;   // qid -> call position
    std::set<u256> matched;
    WorldState st = s0;
    for (size_t i = 0; i < h.size(); ++i) {
        u256 qid_before = st.next_qid;
        RunOutcome r = exec_event(c, st, h[i], static_cast<int>(i));
        bool ok = r.ok;
        if (ok) {
            st = std::move(r.state);
            for (u256 q = qid_before; q < st.next_qid; q += 1) issuer[q] = static_cast<int>(i);
        }
        if (h[i].fn == "__callback") {
            u256 qid = h[i].msg.args.empty() ? u256(0) : h[i].msg.args[0];
            auto it = issuer.find(qid);
            if (it == issuer.end()) {
                p.unmatched_rets.push_back(static_cast<int>(i));
            } else if (matched.count(qid)) {
                p.duplicate_rets.push_back(static_cast<int>(i));
            } else {
                matched.insert(qid);
                LogicalTransaction tx;
                tx.call_pos = it->second;
                tx.ret_pos = static_cast<int>(i);
                tx.qid = qid;
                p.txs.push_back(tx);
            }
        }
    }
    std::sort(p.txs.begin(), p.txs.end(),
              [](const LogicalTransaction& a, const LogicalTransaction& b) {
                  return a.call_pos < b.call_pos;
              });
    return p;
}

bool is_linearizable(const LinPairing& p) {
    for (const auto& a : p.txs) {
        if (a.ret_pos < 0) continue;
        for (const auto& b : p.txs) {
            if (&a == &b || b.ret_pos < 0) continue;
            if (a.call_pos < b.call_pos && b.call_pos < a.ret_pos && a.ret_pos < b.ret_pos)
                return false;
        }
    }
    return true;
}

int kendall_tau(const std::vector<SchedTok>& a, const std::vector<SchedTok>& b) {
    auto id = [](const SchedTok& t) { return t.tx * 2 + (t.is_ret ? 1 : 0); };
    std::vector<int> pos(a.size() * 2, 0);
    for (size_t i = 0; i < b.size(); ++i) pos[static_cast<size_t>(id(b[i]))] = static_cast<int>(i);
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (pos[static_cast<size_t>(id(a[i]))] > pos[static_cast<size_t>(id(a[j]))]) ++d;
    return d;
}

namespace {

Event make_callback(const Contract& c, const Scenario& sc, const u256& qid, const u256& result) {
    const Function* cb = c.function("__callback");
    std::vector<u256> args;
    for (size_t i = 0; i < cb->params.size(); ++i) args.push_back(i == 0 ? qid : result);
    return make_event("__callback", oracle_sender, 0, std::move(args), sc.timestamp,
                      sc.blocknumber);
}

LinTrace run_schedule(const Contract& c, const WorldState& s0, const std::vector<Event>& calls,
                      const Scenario& sc, const std::vector<SchedTok>& sched,
                      bool compare_transfers) {
    LinTrace t;
    t.sched = sched;
    std::vector<std::optional<u256>> issued(calls.size());
    WorldState st = s0;
    for (const auto& tok : sched) {
        if (!tok.is_ret) {
            const Event& e = calls[static_cast<size_t>(tok.tx)];
            u256 before = st.next_qid;
            RunOutcome r = exec_event(c, st, e, static_cast<int>(t.events.size()));
            if (r.ok) {
                st = std::move(r.state);
                if (st.next_qid > before) issued[static_cast<size_t>(tok.tx)] = before;
                t.statuses.push_back(EventStatus::Ok);
            } else {
                t.statuses.push_back(EventStatus::Reverted);
            }
            t.events.push_back(e);
        } else {
            const auto& qid = issued[static_cast<size_t>(tok.tx)];
            if (!qid) {
                // The call was declined (or issued nothing): no reply ever arrives.
                t.statuses.push_back(EventStatus::Skipped);
                continue;
            }
            u256 result = sc.callback_results.empty()
                              ? u256(0)
                              : sc.callback_results[static_cast<size_t>(tok.tx) %
                                                    sc.callback_results.size()];
            Event cb = make_callback(c, sc, *qid, result);
            RunOutcome r = exec_event(c, st, cb, static_cast<int>(t.events.size()));
            if (r.ok) {
                st = std::move(r.state);
                t.statuses.push_back(EventStatus::Ok);
            } else {
                t.statuses.push_back(EventStatus::Reverted);
            }
            t.events.push_back(std::move(cb));
        }
    }
    t.output = output_of(st, c, compare_transfers);
    return t;
}

std::string fn_seq(const LinTrace& t) {
    std::string s;
    for (const auto& e : t.events) {
        s += e.fn;
        s += ',';
    }
    return s;
}

}  // namespace

LinResult check_lin(const Contract& c, const WorldState& s0, const std::vector<Event>& call_pool,
                    const Scenario& sc, int kmax) {
    if (!c.function("__callback"))
        throw NoCallbackError("contract " + c.name + " declares no __callback");

    LinResult res;
    // Oracle-calling events only; one logical transaction each.
    RwTable rws = rw_table(c);
    std::vector<Event> calls;
    for (const auto& e : call_pool)
        if (rws.count(e.fn) && rws[e.fn].writes.count("@oracle")) calls.push_back(e);
    size_t max_tx = static_cast<size_t>(std::max(1, kmax / 2));
    if (calls.size() > max_tx) calls.resize(max_tx);
    if (calls.size() < 2) {
        res.skipped = true;
        return res;
    }
    const int m = static_cast<int>(calls.size());

    // Phase 1: atomic schedules, one per transaction order.
    std::set<Output> canon_set;
    std::vector<int> order(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) order[static_cast<size_t>(i)] = i;
    do {
        std::vector<SchedTok> sched;
        for (int tx : order) {
            sched.push_back({tx, false});
            sched.push_back({tx, true});
        }
        LinTrace t = run_schedule(c, s0, calls, sc, sched, false);
        ++res.interleavings_checked;
        if (canon_set.insert(t.output).second) res.canonical_outputs.push_back(t.output);
        res.canonical.push_back(std::move(t));
    } while (std::next_permutation(order.begin(), order.end()));

    // Phase 2: every remaining call-before-return interleaving, in
    // lexicographic token order.
    std::vector<int> toks(static_cast<size_t>(2 * m));
    for (int i = 0; i < 2 * m; ++i) toks[static_cast<size_t>(i)] = i;  // 2*tx (+1 for ret)
    std::set<std::pair<std::string, std::string>> seen;
    do {
        std::vector<SchedTok> sched;
        std::vector<int> call_at(static_cast<size_t>(m), -1);
        bool ok = true;
        bool atomic = true;
        for (size_t i = 0; i < toks.size() && ok; ++i) {
            int tx = toks[i] / 2;
            bool is_ret = toks[i] % 2 != 0;
            if (is_ret) {
                if (call_at[static_cast<size_t>(tx)] < 0) ok = false;  // ret before call
                else if (call_at[static_cast<size_t>(tx)] != static_cast<int>(i) - 1)
                    atomic = false;
            } else {
                call_at[static_cast<size_t>(tx)] = static_cast<int>(i);
            }
            sched.push_back({tx, is_ret});
        }
        if (!ok || atomic) continue;
        LinTrace t = run_schedule(c, s0, calls, sc, sched, false);
        ++res.interleavings_checked;
        if (canon_set.count(t.output)) continue;

        // Closest canonical trace by Kendall-tau, ties to the
        // lexicographically smaller schedule.
        const LinTrace* best = nullptr;
        int best_d = 0;
        for (const auto& cand : res.canonical) {
            int d = kendall_tau(t.sched, cand.sched);
            if (!best || d < best_d) {
                best = &cand;
                best_d = d;
            }
        }
        std::string key_a = fn_seq(t);
        std::string key_b = fn_seq(*best);
        if (!seen.insert({key_a, key_b}).second) continue;  // lex-first representative kept
        LinViolation v;
        v.flagged = std::move(t);
        v.closest = *best;
        v.distance = best_d;
        res.violations.push_back(std::move(v));
    } while (std::next_permutation(toks.begin(), toks.end()));

    return res;
}

}  // namespace ethracer

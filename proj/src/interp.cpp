#include "ethracer/interp.hpp"

#include <map>

namespace ethracer {

std::string revert_reason_name(RevertReason r) {
    switch (r) {
        case RevertReason::RequireFailed: return "RequireFailed";
        case RevertReason::ExplicitThrow: return "ExplicitThrow";
        case RevertReason::DivByZero: return "DivByZero";
        case RevertReason::IndexOOB: return "IndexOOB";
        case RevertReason::NonPayableValue: return "NonPayableValue";
        case RevertReason::LoopCap: return "LoopCap";
        case RevertReason::InsufficientFunds: return "InsufficientFunds";
    }
    return "?";
}

std::string event_status_name(EventStatus st) {
    switch (st) {
        case EventStatus::Ok: return "ok";
        case EventStatus::Reverted: return "reverted";
        case EventStatus::Skipped: return "skipped";
        case EventStatus::NotRun: return "not_run";
    }
    return "?";
}

namespace {

struct RevertSignal {
    RevertReason reason;
};

struct ReturnSignal {};

[[noreturn]] void rev(RevertReason r) { throw RevertSignal{r}; }

struct Frame {
    const Contract& c;
    WorldState& st;
    const Message& msg;
    int event_index;
    std::vector<std::map<std::string, u256>> scopes;

    u256* find_local(const std::string& name) {
        for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
            auto f = it->find(name);
            if (f != it->end()) return &f->second;
        }
        return nullptr;
    }
};

u256 map_get(const std::map<u256, u256>& m, const u256& k) {
    auto it = m.find(k);
    return it == m.end() ? u256(0) : it->second;
}

u256 eval(Frame& fr, const Expr& e);

u256 eval_index(Frame& fr, const Expr& e) {
    // Collect keys inner-to-outer; base is always a field identifier.
    std::vector<u256> keys;
    const Expr* cur = &e;
    while (cur->kind == Expr::Kind::Index) {
        keys.push_back(eval(fr, *cur->b));
        cur = cur->a.get();
    }
    const FieldValue& fv = fr.st.fields.at(cur->name);
    if (std::holds_alternative<std::vector<u256>>(fv)) {
        const auto& arr = std::get<std::vector<u256>>(fv);
        const u256& idx = keys[0];
        if (idx >= arr.size()) rev(RevertReason::IndexOOB);
        return arr[static_cast<size_t>(idx)];
    }
    if (std::holds_alternative<std::map<u256, u256>>(fv))
        return map_get(std::get<std::map<u256, u256>>(fv), keys[0]);
    const auto& m2 = std::get<std::map<u256, std::map<u256, u256>>>(fv);
    // keys collected inner-to-outer: keys[1] is the first subscript
    auto it = m2.find(keys[1]);
    if (it == m2.end()) return 0;
    return map_get(it->second, keys[0]);
}

u256 eval(Frame& fr, const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Num:
        case Expr::Kind::BoolLit:
            return e.value;
        case Expr::Kind::Str:
            throw InterpError("string literal outside oracle_query");
        case Expr::Kind::Ident: {
            if (u256* loc = fr.find_local(e.name)) return *loc;
            return std::get<u256>(fr.st.fields.at(e.name));
        }
        case Expr::Kind::Index:
            return eval_index(fr, e);
        case Expr::Kind::Bin: {
            if (e.op == BinOp::And) {
                if (eval(fr, *e.a) == 0) return 0;
                return eval(fr, *e.b) != 0 ? 1 : 0;
            }
            if (e.op == BinOp::Or) {
                if (eval(fr, *e.a) != 0) return 1;
                return eval(fr, *e.b) != 0 ? 1 : 0;
            }
            u256 a = eval(fr, *e.a);
            u256 b = eval(fr, *e.b);
            switch (e.op) {
                case BinOp::Eq: return a == b ? 1 : 0;
                case BinOp::Ne: return a != b ? 1 : 0;
                case BinOp::Lt: return a < b ? 1 : 0;
                case BinOp::Le: return a <= b ? 1 : 0;
                case BinOp::Gt: return a > b ? 1 : 0;
                case BinOp::Ge: return a >= b ? 1 : 0;
                case BinOp::Add: return a + b;
                case BinOp::Sub: return a - b;
                case BinOp::Mul: return a * b;
                case BinOp::Div:
                    if (b == 0) rev(RevertReason::DivByZero);
                    return a / b;
                case BinOp::Mod:
                    if (b == 0) rev(RevertReason::DivByZero);
                    return a % b;
                default: throw InterpError("bad binop");
            }
        }
        case Expr::Kind::Not:
            return eval(fr, *e.a) == 0 ? 1 : 0;
        case Expr::Kind::Neg:
            return u256(0) - eval(fr, *e.a);
        case Expr::Kind::MsgSender:
            return fr.msg.sender;
        case Expr::Kind::MsgValue:
            return fr.msg.value;
        case Expr::Kind::Now:
            return fr.msg.timestamp;
        case Expr::Kind::BlockNumber:
            return fr.msg.blocknumber;
        case Expr::Kind::BalanceThis:
            return fr.st.balance;
        case Expr::Kind::Length:
            return std::get<std::vector<u256>>(fr.st.fields.at(e.name)).size();
        case Expr::Kind::OracleQuery:
            throw InterpError("oracle_query outside assignment");
    }
    throw InterpError("bad expr");
}

// Right-hand side that may be an oracle_query; issues a qid if so.
u256 eval_rhs(Frame& fr, const Expr& e) {
    if (e.kind != Expr::Kind::OracleQuery) return eval(fr, e);
    PendingQuery q;
    q.origin_event = fr.event_index;
    for (const auto& arg : e.args) {
        if (arg->kind == Expr::Kind::Str)
            q.args.push_back(arg->text);
        else
            q.args.push_back(to_dec(eval(fr, *arg)));
    }
    u256 qid = fr.st.next_qid;
    fr.st.next_qid += 1;
    fr.st.pending[qid] = std::move(q);
    return qid;
}

void assign_to(Frame& fr, const Expr& target, AssignOp op, const u256& value) {
    auto combine = [op](const u256& old, const u256& v) -> u256 {
        switch (op) {
            case AssignOp::Set: return v;
            case AssignOp::Add: return old + v;
            case AssignOp::Sub: return old - v;
        }
        return v;
    };
    if (target.kind == Expr::Kind::Ident) {
        if (u256* loc = fr.find_local(target.name)) {
            *loc = combine(*loc, value);
            return;
        }
        u256& slot = std::get<u256>(fr.st.fields.at(target.name));
        slot = combine(slot, value);
        return;
    }
    // Indexed target: field[k] or field[k1][k2].
    std::vector<u256> keys;
    const Expr* cur = &target;
    while (cur->kind == Expr::Kind::Index) {
        keys.push_back(eval(fr, *cur->b));
        cur = cur->a.get();
    }
    FieldValue& fv = fr.st.fields.at(cur->name);
    if (std::holds_alternative<std::vector<u256>>(fv)) {
        auto& arr = std::get<std::vector<u256>>(fv);
        const u256& idx = keys[0];
        if (idx >= arr.size()) rev(RevertReason::IndexOOB);
        u256& slot = arr[static_cast<size_t>(idx)];
        slot = combine(slot, value);
        return;
    }
    if (std::holds_alternative<std::map<u256, u256>>(fv)) {
        u256& slot = std::get<std::map<u256, u256>>(fv)[keys[0]];
        slot = combine(slot, value);
        return;
    }
    u256& slot = std::get<std::map<u256, std::map<u256, u256>>>(fv)[keys[1]][keys[0]];
    slot = combine(slot, value);
}

void exec_block(Frame& fr, const std::vector<StmtPtr>& body);

void exec_stmt(Frame& fr, const Stmt& s) {
    switch (s.kind) {
        case Stmt::Kind::Local:
            fr.scopes.back()[s.name] = eval_rhs(fr, *s.a);
            break;
        case Stmt::Kind::Assign: {
            u256 v = eval_rhs(fr, *s.a);
            assign_to(fr, *s.target, s.op, v);
            break;
        }
        case Stmt::Kind::Require:
            if (eval(fr, *s.a) == 0) rev(RevertReason::RequireFailed);
            break;
        case Stmt::Kind::Throw:
            rev(RevertReason::ExplicitThrow);
            break;
        case Stmt::Kind::If:
            if (eval(fr, *s.a) != 0)
                exec_block(fr, s.body);
            else
                exec_block(fr, s.else_body);
            break;
        case Stmt::Kind::For: {
            u256 i = eval(fr, *s.a);
            unsigned iterations = 0;
            while (true) {
                u256 bound = eval(fr, *s.b);  // re-evaluated: body may push
                if (!(i < bound)) break;
                if (++iterations > kLoopCap) rev(RevertReason::LoopCap);
                fr.scopes.emplace_back();
                fr.scopes.back()[s.name] = i;
                exec_block(fr, s.body);
                i = fr.scopes.back()[s.name] + 1;
                fr.scopes.pop_back();
            }
            break;
        }
        case Stmt::Kind::Send: {
            u256 to = eval(fr, *s.a);
            u256 amount = eval(fr, *s.b);
            bool ok = fr.st.balance >= amount;
            if (ok) {
                fr.st.balance -= amount;
                fr.st.ext_balances[to] += amount;
            }
            fr.st.transfer_log.push_back({to, amount, ok});
            break;
        }
        case Stmt::Kind::Push:
            std::get<std::vector<u256>>(fr.st.fields.at(s.name)).push_back(eval(fr, *s.a));
            break;
        case Stmt::Kind::Return:
            if (s.a) eval(fr, *s.a);  // may still revert
            throw ReturnSignal{};
    }
}

void exec_block(Frame& fr, const std::vector<StmtPtr>& body) {
    for (const auto& st : body) exec_stmt(fr, *st);
}

}  // namespace

RunOutcome exec_event(const Contract& c, const WorldState& s, const Event& e, int event_index) {
    const Function* fn = c.function(e.fn);
    if (!fn) throw InterpError("unknown function: " + e.fn);
    if (e.msg.args.size() != fn->params.size())
        throw InterpError("arity mismatch calling " + e.fn);

    WorldState work = s;
    RunOutcome out;
    try {
        if (e.msg.value > 0) {
            if (!fn->payable) rev(RevertReason::NonPayableValue);
            u256 have = map_get(work.ext_balances, e.msg.sender);
            if (have < e.msg.value) rev(RevertReason::InsufficientFunds);
            work.ext_balances[e.msg.sender] = have - e.msg.value;
            work.balance += e.msg.value;
        }
        Frame fr{c, work, e.msg, event_index, {}};
        fr.scopes.emplace_back();
        for (size_t i = 0; i < fn->params.size(); ++i)
            fr.scopes.back()[fn->params[i].name] = e.msg.args[i];
        try {
            exec_block(fr, fn->body);
        } catch (const ReturnSignal&) {
        }
        out.ok = true;
        out.state = std::move(work);
    } catch (const RevertSignal& r) {
        out.ok = false;
        out.reason = r.reason;
    }
    return out;
}

TraceOutcome exec_trace(const Contract& c, const WorldState& s0, const std::vector<Event>& h,
                        TraceMode mode) {
    TraceOutcome out;
    out.statuses.assign(h.size(), EventStatus::NotRun);
    out.reasons.assign(h.size(), std::nullopt);
    WorldState cur = s0;
    bool any_revert = false;
    for (size_t i = 0; i < h.size(); ++i) {
        RunOutcome r = exec_event(c, cur, h[i], static_cast<int>(i));
        if (r.ok) {
            out.statuses[i] = EventStatus::Ok;
            cur = std::move(r.state);
        } else {
            out.statuses[i] = EventStatus::Reverted;
            out.reasons[i] = r.reason;
            any_revert = true;
            if (mode == TraceMode::Strict) break;
        }
    }
    out.final_state = std::move(cur);
    out.valid = !any_revert;
    for (const auto st : out.statuses)
        if (st == EventStatus::NotRun) out.valid = false;
    return out;
}

}  // namespace ethracer

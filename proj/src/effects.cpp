#include "ethracer/effects.hpp"

namespace ethracer {

namespace {

constexpr const char* kBalanceField = "@balance";
constexpr const char* kOracleField = "@oracle";

struct Walker {
    const Contract& c;
    RwSet& rw;

    bool is_field(const std::string& name) const { return c.field(name) != nullptr; }

    void read_expr(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::Ident:
                if (is_field(e.name)) rw.reads.insert(e.name);
                break;
            case Expr::Kind::Index: {
                const Expr* cur = &e;
                while (cur->kind == Expr::Kind::Index) {
                    read_expr(*cur->b);
                    cur = cur->a.get();
                }
                rw.reads.insert(cur->name);
                break;
            }
            case Expr::Kind::Bin:
                read_expr(*e.a);
                read_expr(*e.b);
                break;
            case Expr::Kind::Not:
            case Expr::Kind::Neg:
                read_expr(*e.a);
                break;
            case Expr::Kind::BalanceThis:
                rw.reads.insert(kBalanceField);
                break;
            case Expr::Kind::Length:
                rw.reads.insert(e.name);
                break;
            case Expr::Kind::OracleQuery:
                rw.writes.insert(kOracleField);
                for (const auto& a : e.args) read_expr(*a);
                break;
            default:
                break;
        }
    }

    void write_target(const Expr& target, bool compound) {
        const Expr* cur = &target;
        while (cur->kind == Expr::Kind::Index) {
            read_expr(*cur->b);  // keys are reads
            cur = cur->a.get();
        }
        if (is_field(cur->name)) {
            rw.writes.insert(cur->name);
            if (compound) rw.reads.insert(cur->name);
        }
    }

    void walk_block(const std::vector<StmtPtr>& body) {
        for (const auto& s : body) walk_stmt(*s);
    }

    void walk_stmt(const Stmt& s) {
        switch (s.kind) {
            case Stmt::Kind::Local:
                read_expr(*s.a);
                break;
            case Stmt::Kind::Assign:
                read_expr(*s.a);
                write_target(*s.target, s.op != AssignOp::Set);
                break;
            case Stmt::Kind::Require:
                read_expr(*s.a);
                break;
            case Stmt::Kind::Throw:
                break;
            case Stmt::Kind::If:
                read_expr(*s.a);
                walk_block(s.body);
                walk_block(s.else_body);
                break;
            case Stmt::Kind::For:
                read_expr(*s.a);
                read_expr(*s.b);
                walk_block(s.body);
                break;
            case Stmt::Kind::Send:
                read_expr(*s.a);
                read_expr(*s.b);
                rw.writes.insert(kBalanceField);
                break;
            case Stmt::Kind::Push:
                rw.writes.insert(s.name);
                read_expr(*s.a);
                break;
            case Stmt::Kind::Return:
                if (s.a) read_expr(*s.a);
                break;
        }
    }
};

}  // namespace

RwSet rw_set(const Contract& c, const Function& f) {
    RwSet rw;
    if (f.payable) rw.writes.insert(kBalanceField);
    Walker w{c, rw};
    w.walk_block(f.body);
    return rw;
}

RwTable rw_table(const Contract& c) {
    RwTable t;
    for (const auto& f : c.functions) t[f.name] = rw_set(c, f);
    return t;
}

std::set<std::string> pure_events_filter(const Contract& c) {
    std::set<std::string> out;
    for (const auto& f : c.functions)
        if (rw_set(c, f).pure()) out.insert(f.name);
    return out;
}

std::set<std::pair<std::string, std::string>> hb_candidate_pairs(const Contract& c) {
    RwTable t = rw_table(c);
    std::set<std::pair<std::string, std::string>> out;
    std::vector<std::string> names;
    for (const auto& [name, rw] : t)
        if (!rw.pure()) names.push_back(name);
    auto touches = [&](const RwSet& rw, const std::string& v) {
        return rw.reads.count(v) || rw.writes.count(v);
    };
    for (size_t i = 0; i < names.size(); ++i) {
        for (size_t j = i; j < names.size(); ++j) {
            const RwSet& a = t[names[i]];
            const RwSet& b = t[names[j]];
            if (i == j) {
                // Self-pair only when the function writes a field it also reads.
                bool hit = false;
                for (const auto& v : a.writes)
                    if (a.reads.count(v)) hit = true;
                if (hit) out.emplace(names[i], names[i]);
                continue;
            }
            bool hit = false;
            for (const auto& v : a.writes)
                if (touches(b, v)) hit = true;
            for (const auto& v : b.writes)
                if (touches(a, v)) hit = true;
            if (hit) out.emplace(std::min(names[i], names[j]), std::max(names[i], names[j]));
        }
    }
    return out;
}

}  // namespace ethracer

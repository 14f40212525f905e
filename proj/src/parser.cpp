#include "ethracer/parser.hpp"

#include <map>
#include <stdexcept>

namespace ethracer {

namespace {

struct ParseError {
    Diagnostic diag;
};

[[noreturn]] void fail(SourceLoc loc, const std::string& msg) {
    throw ParseError{{loc, msg}};
}

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Contract parse() {
        Contract c;
        expect(Tok::KwContract, "expected 'contract'");
        c.name = expect(Tok::Ident, "expected contract name").text;
        expect(Tok::LBrace, "expected '{'");
        while (!check(Tok::RBrace) && !check(Tok::End)) {
            if (check(Tok::KwFunction))
                c.functions.push_back(parse_function());
            else
                c.fields.push_back(parse_field());
        }
        expect(Tok::RBrace, "expected '}' at end of contract");
        expect(Tok::End, "trailing input after contract");
        return c;
    }

  private:
    std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& peek(size_t k = 0) const {
        size_t i = pos_ + k;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    bool check(Tok t, size_t k = 0) const { return peek(k).kind == t; }
    const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool match(Tok t) {
        if (!check(t)) return false;
        advance();
        return true;
    }
    const Token& expect(Tok t, const std::string& msg) {
        if (!check(t)) fail(peek().loc, msg + ", got '" + peek().text + "'");
        return advance();
    }

    bool scalar_type_ahead() const {
        return check(Tok::KwUint256) || check(Tok::KwBool) || check(Tok::KwAddress);
    }

    ScalarKind parse_scalar_type() {
        if (match(Tok::KwUint256)) return ScalarKind::Uint;
        if (match(Tok::KwBool)) return ScalarKind::Bool;
        if (match(Tok::KwAddress)) return ScalarKind::Address;
        fail(peek().loc, "expected scalar type, got '" + peek().text + "'");
    }

    FieldDecl parse_field() {
        FieldDecl f;
        f.loc = peek().loc;
        if (match(Tok::KwMapping)) {
            expect(Tok::LParen, "expected '(' after mapping");
            expect(Tok::KwAddress, "mapping key type must be address");
            expect(Tok::Arrow, "expected '=>' in mapping type");
            if (match(Tok::KwMapping)) {
                expect(Tok::LParen, "expected '(' after mapping");
                expect(Tok::KwAddress, "mapping key type must be address");
                expect(Tok::Arrow, "expected '=>' in mapping type");
                expect(Tok::KwUint256, "nested mapping value type must be uint256");
                expect(Tok::RParen, "expected ')'");
                f.type = {Type::Kind::Map2, ScalarKind::Uint};
            } else {
                expect(Tok::KwUint256, "mapping value type must be uint256");
                f.type = {Type::Kind::Map, ScalarKind::Uint};
            }
            expect(Tok::RParen, "expected ')'");
        } else {
            ScalarKind k = parse_scalar_type();
            if (match(Tok::LBracket)) {
                expect(Tok::RBracket, "expected ']'");
                f.type = {Type::Kind::Array, k};
            } else {
                f.type = {Type::Kind::Scalar, k};
            }
        }
        f.name = expect(Tok::Ident, "expected field name").text;
        expect(Tok::Semicolon, "expected ';' after field declaration");
        return f;
    }

    Function parse_function() {
        Function fn;
        fn.loc = peek().loc;
        expect(Tok::KwFunction, "expected 'function'");
        fn.name = expect(Tok::Ident, "expected function name").text;
        expect(Tok::LParen, "expected '('");
        if (!check(Tok::RParen)) {
            do {
                Param p;
                p.loc = peek().loc;
                p.type = parse_scalar_type();
                p.name = expect(Tok::Ident, "expected parameter name").text;
                fn.params.push_back(p);
            } while (match(Tok::Comma));
        }
        expect(Tok::RParen, "expected ')'");
        fn.payable = match(Tok::KwPayable);
        fn.body = parse_block();
        return fn;
    }

    std::vector<StmtPtr> parse_block() {
        expect(Tok::LBrace, "expected '{'");
        std::vector<StmtPtr> body;
        while (!check(Tok::RBrace) && !check(Tok::End)) body.push_back(parse_stmt());
        expect(Tok::RBrace, "expected '}'");
        return body;
    }

    StmtPtr make_stmt(Stmt::Kind k, SourceLoc loc) {
        auto s = std::make_unique<Stmt>();
        s->kind = k;
        s->loc = loc;
        return s;
    }

    StmtPtr parse_stmt() {
        SourceLoc loc = peek().loc;
        if (scalar_type_ahead()) {
            auto s = make_stmt(Stmt::Kind::Local, loc);
            s->type = {Type::Kind::Scalar, parse_scalar_type()};
            s->name = expect(Tok::Ident, "expected local name").text;
            expect(Tok::Assign, "local declaration needs an initializer");
            s->a = parse_expr_or_query();
            expect(Tok::Semicolon, "expected ';'");
            return s;
        }
        if (match(Tok::KwRequire)) {
            auto s = make_stmt(Stmt::Kind::Require, loc);
            expect(Tok::LParen, "expected '(' after require");
            s->a = parse_expr();
            expect(Tok::RParen, "expected ')'");
            expect(Tok::Semicolon, "expected ';'");
            return s;
        }
        if (match(Tok::KwThrow)) {
            expect(Tok::Semicolon, "expected ';'");
            return make_stmt(Stmt::Kind::Throw, loc);
        }
        if (check(Tok::KwIf)) return parse_if();
        if (check(Tok::KwFor)) return parse_for();
        if (match(Tok::KwSend)) {
            auto s = make_stmt(Stmt::Kind::Send, loc);
            expect(Tok::LParen, "expected '(' after send");
            s->a = parse_expr();
            expect(Tok::Comma, "expected ','");
            s->b = parse_expr();
            expect(Tok::RParen, "expected ')'");
            expect(Tok::Semicolon, "expected ';'");
            return s;
        }
        if (match(Tok::KwReturn)) {
            auto s = make_stmt(Stmt::Kind::Return, loc);
            if (!check(Tok::Semicolon)) s->a = parse_expr();
            expect(Tok::Semicolon, "expected ';'");
            return s;
        }
        if (check(Tok::Ident) && check(Tok::Dot, 1) && check(Tok::KwPush, 2)) {
            auto s = make_stmt(Stmt::Kind::Push, loc);
            s->name = advance().text;
            advance();  // .
            advance();  // push
            expect(Tok::LParen, "expected '(' after push");
            s->a = parse_expr();
            expect(Tok::RParen, "expected ')'");
            expect(Tok::Semicolon, "expected ';'");
            return s;
        }
        if (check(Tok::Ident)) {
            auto s = make_stmt(Stmt::Kind::Assign, loc);
            s->target = parse_lvalue();
            if (match(Tok::PlusAssign))
                s->op = AssignOp::Add;
            else if (match(Tok::MinusAssign))
                s->op = AssignOp::Sub;
            else {
                expect(Tok::Assign, "expected assignment operator");
                s->op = AssignOp::Set;
            }
            s->a = s->op == AssignOp::Set ? parse_expr_or_query() : parse_expr();
            expect(Tok::Semicolon, "expected ';'");
            return s;
        }
        fail(loc, "expected statement, got '" + peek().text + "'");
    }

    StmtPtr parse_if() {
        SourceLoc loc = peek().loc;
        expect(Tok::KwIf, "expected 'if'");
        auto s = make_stmt(Stmt::Kind::If, loc);
        expect(Tok::LParen, "expected '(' after if");
        s->a = parse_expr();
        expect(Tok::RParen, "expected ')'");
        s->body = parse_block();
        if (match(Tok::KwElse)) {
            if (check(Tok::KwIf)) {
                s->else_body.push_back(parse_if());
            } else {
                s->else_body = parse_block();
            }
        }
        return s;
    }

    // for (uint256 i = INIT; i < BOUND; i++) { ... }
    StmtPtr parse_for() {
        SourceLoc loc = peek().loc;
        expect(Tok::KwFor, "expected 'for'");
        auto s = make_stmt(Stmt::Kind::For, loc);
        expect(Tok::LParen, "expected '(' after for");
        expect(Tok::KwUint256, "loop variable must be uint256");
        s->name = expect(Tok::Ident, "expected loop variable").text;
        expect(Tok::Assign, "expected '=' in loop header");
        s->a = parse_expr();
        expect(Tok::Semicolon, "expected ';'");
        const Token& v = expect(Tok::Ident, "expected loop variable in condition");
        if (v.text != s->name) fail(v.loc, "loop condition must test the loop variable");
        expect(Tok::Lt, "loop condition must be '<'");
        s->b = parse_expr();
        expect(Tok::Semicolon, "expected ';'");
        const Token& v2 = expect(Tok::Ident, "expected loop variable in increment");
        if (v2.text != s->name) fail(v2.loc, "loop increment must use the loop variable");
        expect(Tok::PlusPlus, "loop increment must be '++'");
        expect(Tok::RParen, "expected ')'");
        s->body = parse_block();
        return s;
    }

    ExprPtr make_expr(Expr::Kind k, SourceLoc loc) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->loc = loc;
        return e;
    }

    ExprPtr parse_lvalue() {
        SourceLoc loc = peek().loc;
        auto e = make_expr(Expr::Kind::Ident, loc);
        e->name = expect(Tok::Ident, "expected identifier").text;
        while (match(Tok::LBracket)) {
            auto idx = make_expr(Expr::Kind::Index, loc);
            idx->a = std::move(e);
            idx->b = parse_expr();
            expect(Tok::RBracket, "expected ']'");
            e = std::move(idx);
        }
        return e;
    }

    // oracle_query is only legal as the whole right-hand side of an assignment.
    ExprPtr parse_expr_or_query() {
        if (check(Tok::KwOracleQuery)) {
            SourceLoc loc = advance().loc;
            auto e = make_expr(Expr::Kind::OracleQuery, loc);
            expect(Tok::LParen, "expected '(' after oracle_query");
            if (!check(Tok::RParen)) {
                do {
                    if (check(Tok::String)) {
                        auto s = make_expr(Expr::Kind::Str, peek().loc);
                        s->text = advance().text;
                        e->args.push_back(std::move(s));
                    } else {
                        e->args.push_back(parse_expr());
                    }
                } while (match(Tok::Comma));
            }
            expect(Tok::RParen, "expected ')'");
            return e;
        }
        return parse_expr();
    }

    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr parse_bin_chain(ExprPtr (Parser::*next)(),
                            const std::vector<std::pair<Tok, BinOp>>& ops) {
        ExprPtr e = (this->*next)();
        for (;;) {
            bool matched = false;
            for (auto& [tok, op] : ops) {
                if (check(tok)) {
                    SourceLoc loc = advance().loc;
                    auto bin = make_expr(Expr::Kind::Bin, loc);
                    bin->op = op;
                    bin->a = std::move(e);
                    bin->b = (this->*next)();
                    e = std::move(bin);
                    matched = true;
                    break;
                }
            }
            if (!matched) return e;
        }
    }

    ExprPtr parse_or() { return parse_bin_chain(&Parser::parse_and, {{Tok::OrOr, BinOp::Or}}); }
    ExprPtr parse_and() { return parse_bin_chain(&Parser::parse_eq, {{Tok::AndAnd, BinOp::And}}); }
    ExprPtr parse_eq() {
        return parse_bin_chain(&Parser::parse_rel, {{Tok::Eq, BinOp::Eq}, {Tok::Ne, BinOp::Ne}});
    }
    ExprPtr parse_rel() {
        return parse_bin_chain(&Parser::parse_add, {{Tok::Lt, BinOp::Lt},
                                                    {Tok::Le, BinOp::Le},
                                                    {Tok::Gt, BinOp::Gt},
                                                    {Tok::Ge, BinOp::Ge}});
    }
    ExprPtr parse_add() {
        return parse_bin_chain(&Parser::parse_mul,
                               {{Tok::Plus, BinOp::Add}, {Tok::Minus, BinOp::Sub}});
    }
    ExprPtr parse_mul() {
        return parse_bin_chain(&Parser::parse_unary, {{Tok::Star, BinOp::Mul},
                                                      {Tok::Slash, BinOp::Div},
                                                      {Tok::Percent, BinOp::Mod}});
    }

    ExprPtr parse_unary() {
        SourceLoc loc = peek().loc;
        if (match(Tok::Bang)) {
            auto e = make_expr(Expr::Kind::Not, loc);
            e->a = parse_unary();
            return e;
        }
        if (match(Tok::Minus)) {
            auto e = make_expr(Expr::Kind::Neg, loc);
            e->a = parse_unary();
            return e;
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        for (;;) {
            if (match(Tok::LBracket)) {
                auto idx = make_expr(Expr::Kind::Index, e->loc);
                idx->a = std::move(e);
                idx->b = parse_expr();
                expect(Tok::RBracket, "expected ']'");
                e = std::move(idx);
            } else if (check(Tok::Dot) && check(Tok::KwLength, 1)) {
                if (e->kind != Expr::Kind::Ident)
                    fail(peek().loc, "'.length' applies to an array field");
                advance();
                advance();
                auto len = make_expr(Expr::Kind::Length, e->loc);
                len->name = e->name;
                e = std::move(len);
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_primary() {
        SourceLoc loc = peek().loc;
        if (check(Tok::Number)) {
            auto e = make_expr(Expr::Kind::Num, loc);
            e->value = parse_u256(advance().text);
            return e;
        }
        if (check(Tok::HexNumber)) {
            auto e = make_expr(Expr::Kind::Num, loc);
            e->hex_literal = true;
            e->value = parse_u256(advance().text);
            return e;
        }
        if (match(Tok::KwTrue)) {
            auto e = make_expr(Expr::Kind::BoolLit, loc);
            e->value = 1;
            return e;
        }
        if (match(Tok::KwFalse)) {
            auto e = make_expr(Expr::Kind::BoolLit, loc);
            e->value = 0;
            return e;
        }
        if (match(Tok::KwMsg)) {
            expect(Tok::Dot, "expected '.' after msg");
            if (match(Tok::KwSender)) return make_expr(Expr::Kind::MsgSender, loc);
            if (match(Tok::KwValue)) return make_expr(Expr::Kind::MsgValue, loc);
            fail(peek().loc, "expected 'sender' or 'value' after 'msg.'");
        }
        if (match(Tok::KwNow)) return make_expr(Expr::Kind::Now, loc);
        if (match(Tok::KwBlock)) {
            expect(Tok::Dot, "expected '.' after block");
            expect(Tok::KwNumberWord, "expected 'number' after 'block.'");
            return make_expr(Expr::Kind::BlockNumber, loc);
        }
        if (match(Tok::KwBalance)) {
            expect(Tok::LParen, "expected '(' after balance");
            expect(Tok::KwThis, "expected 'this'");
            expect(Tok::RParen, "expected ')'");
            return make_expr(Expr::Kind::BalanceThis, loc);
        }
        if (check(Tok::KwOracleQuery))
            fail(loc, "oracle_query is only allowed as the right-hand side of an assignment");
        if (check(Tok::Ident)) {
            auto e = make_expr(Expr::Kind::Ident, loc);
            e->name = advance().text;
            return e;
        }
        if (match(Tok::LParen)) {
            ExprPtr e = parse_expr();
            expect(Tok::RParen, "expected ')'");
            return e;
        }
        fail(loc, "expected expression, got '" + peek().text + "'");
    }
};

// ---- static checks ----------------------------------------------------------

enum class VType { Word, Bool };  // uint/address unify as Word at check level

class Checker {
  public:
    explicit Checker(const Contract& c) : c_(c) {}

    void run() {
        std::map<std::string, const FieldDecl*> seen;
        for (const auto& f : c_.fields) {
            if (seen.count(f.name)) fail(f.loc, "duplicate field '" + f.name + "'");
            seen[f.name] = &f;
        }
        std::map<std::string, const Function*> fns;
        for (const auto& fn : c_.functions) {
            if (fns.count(fn.name)) fail(fn.loc, "duplicate function '" + fn.name + "'");
            fns[fn.name] = &fn;
            check_function(fn);
        }
    }

  private:
    const Contract& c_;
    std::vector<std::map<std::string, ScalarKind>> scopes_;

    const ScalarKind* lookup_local(const std::string& n) const {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto f = it->find(n);
            if (f != it->end()) return &f->second;
        }
        return nullptr;
    }

    void check_function(const Function& fn) {
        scopes_.clear();
        scopes_.emplace_back();
        for (const auto& p : fn.params) {
            if (c_.field(p.name)) fail(p.loc, "parameter '" + p.name + "' shadows a field");
            if (scopes_.back().count(p.name)) fail(p.loc, "duplicate parameter '" + p.name + "'");
            scopes_.back()[p.name] = p.type;
        }
        check_block(fn.body);
        scopes_.pop_back();
    }

    void check_block(const std::vector<StmtPtr>& body) {
        scopes_.emplace_back();
        for (const auto& s : body) check_stmt(*s);
        scopes_.pop_back();
    }

    void check_stmt(const Stmt& s) {
        switch (s.kind) {
            case Stmt::Kind::Local: {
                if (c_.field(s.name)) fail(s.loc, "local '" + s.name + "' shadows a field");
                if (lookup_local(s.name)) fail(s.loc, "duplicate local '" + s.name + "'");
                VType t = check_expr(*s.a);
                VType want = s.type.scalar == ScalarKind::Bool ? VType::Bool : VType::Word;
                if (t != want) fail(s.loc, "initializer type mismatch for '" + s.name + "'");
                scopes_.back()[s.name] = s.type.scalar;
                break;
            }
            case Stmt::Kind::Assign: {
                VType target = check_lvalue(*s.target);
                VType v = check_expr(*s.a);
                if (s.op != AssignOp::Set && (target != VType::Word || v != VType::Word))
                    fail(s.loc, "compound assignment needs numeric operands");
                if (s.op == AssignOp::Set && target != v)
                    fail(s.loc, "assignment type mismatch");
                break;
            }
            case Stmt::Kind::Require:
                if (check_expr(*s.a) != VType::Bool)
                    fail(s.loc, "require needs a boolean condition");
                break;
            case Stmt::Kind::Throw:
                break;
            case Stmt::Kind::If:
                if (check_expr(*s.a) != VType::Bool) fail(s.loc, "if needs a boolean condition");
                check_block(s.body);
                check_block(s.else_body);
                break;
            case Stmt::Kind::For: {
                if (check_expr(*s.a) != VType::Word) fail(s.loc, "loop bounds must be numeric");
                scopes_.emplace_back();
                scopes_.back()[s.name] = ScalarKind::Uint;
                if (check_expr(*s.b) != VType::Word) fail(s.loc, "loop bounds must be numeric");
                check_block(s.body);
                scopes_.pop_back();
                break;
            }
            case Stmt::Kind::Send:
                if (check_expr(*s.a) != VType::Word) fail(s.loc, "send target must be an address");
                if (check_expr(*s.b) != VType::Word) fail(s.loc, "send amount must be numeric");
                break;
            case Stmt::Kind::Push: {
                const FieldDecl* f = c_.field(s.name);
                if (!f || f->type.kind != Type::Kind::Array)
                    fail(s.loc, "push target '" + s.name + "' is not an array field");
                VType v = check_expr(*s.a);
                VType want = f->type.scalar == ScalarKind::Bool ? VType::Bool : VType::Word;
                if (v != want) fail(s.loc, "push element type mismatch");
                break;
            }
            case Stmt::Kind::Return:
                if (s.a) check_expr(*s.a);
                break;
        }
    }

    VType check_lvalue(const Expr& e) {
        if (e.kind == Expr::Kind::Ident) {
            if (lookup_local(e.name)) {
                const ScalarKind* k = lookup_local(e.name);
                return *k == ScalarKind::Bool ? VType::Bool : VType::Word;
            }
            const FieldDecl* f = c_.field(e.name);
            if (!f) fail(e.loc, "assignment to undeclared name '" + e.name + "'");
            if (f->type.kind != Type::Kind::Scalar)
                fail(e.loc, "cannot assign whole aggregate '" + e.name + "'");
            return f->type.scalar == ScalarKind::Bool ? VType::Bool : VType::Word;
        }
        if (e.kind == Expr::Kind::Index) return check_index(e);
        fail(e.loc, "invalid assignment target");
    }

    VType check_index(const Expr& e) {
        // Either field[key] or field[key][key2].
        const Expr* base = e.a.get();
        int depth = 1;
        while (base->kind == Expr::Kind::Index) {
            base = base->a.get();
            ++depth;
        }
        if (base->kind != Expr::Kind::Ident)
            fail(e.loc, "indexing applies to a named field");
        const FieldDecl* f = c_.field(base->name);
        if (!f) fail(base->loc, "undeclared field '" + base->name + "'");
        // Walk inner-to-outer collecting keys.
        std::vector<const Expr*> keys;
        const Expr* cur = &e;
        while (cur->kind == Expr::Kind::Index) {
            keys.push_back(cur->b.get());
            cur = cur->a.get();
        }
        for (const Expr* k : keys)
            if (check_expr(*k) != VType::Word) fail(k->loc, "index key must be a scalar word");
        switch (f->type.kind) {
            case Type::Kind::Scalar:
                fail(e.loc, "'" + f->name + "' is not indexable");
            case Type::Kind::Array:
                if (depth != 1) fail(e.loc, "array takes one index");
                return f->type.scalar == ScalarKind::Bool ? VType::Bool : VType::Word;
            case Type::Kind::Map:
                if (depth != 1) fail(e.loc, "mapping takes one key");
                return VType::Word;
            case Type::Kind::Map2:
                if (depth != 2) fail(e.loc, "nested mapping takes two keys");
                return VType::Word;
        }
        fail(e.loc, "unreachable");
    }

    VType check_expr(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::Num:
                return VType::Word;
            case Expr::Kind::BoolLit:
                return VType::Bool;
            case Expr::Kind::Str:
                fail(e.loc, "string literals are only allowed in oracle_query arguments");
            case Expr::Kind::Ident: {
                if (const ScalarKind* k = lookup_local(e.name))
                    return *k == ScalarKind::Bool ? VType::Bool : VType::Word;
                const FieldDecl* f = c_.field(e.name);
                if (!f) fail(e.loc, "undeclared name '" + e.name + "'");
                if (f->type.kind != Type::Kind::Scalar)
                    fail(e.loc, "aggregate field '" + e.name + "' needs an index");
                return f->type.scalar == ScalarKind::Bool ? VType::Bool : VType::Word;
            }
            case Expr::Kind::Index:
                return check_index(e);
            case Expr::Kind::Bin: {
                VType a = check_expr(*e.a);
                VType b = check_expr(*e.b);
                switch (e.op) {
                    case BinOp::Or:
                    case BinOp::And:
                        if (a != VType::Bool || b != VType::Bool)
                            fail(e.loc, "logical operator needs boolean operands");
                        return VType::Bool;
                    case BinOp::Eq:
                    case BinOp::Ne:
                        if (a != b) fail(e.loc, "comparison of incompatible types");
                        return VType::Bool;
                    case BinOp::Lt:
                    case BinOp::Le:
                    case BinOp::Gt:
                    case BinOp::Ge:
                        if (a != VType::Word || b != VType::Word)
                            fail(e.loc, "ordering comparison needs numeric operands");
                        return VType::Bool;
                    default:
                        if (a != VType::Word || b != VType::Word)
                            fail(e.loc, "arithmetic needs numeric operands");
                        return VType::Word;
                }
            }
            case Expr::Kind::Not:
                if (check_expr(*e.a) != VType::Bool) fail(e.loc, "'!' needs a boolean operand");
                return VType::Bool;
            case Expr::Kind::Neg:
                if (check_expr(*e.a) != VType::Word) fail(e.loc, "'-' needs a numeric operand");
                return VType::Word;
            case Expr::Kind::MsgSender:
                return VType::Word;
            case Expr::Kind::MsgValue:
            case Expr::Kind::Now:
            case Expr::Kind::BlockNumber:
            case Expr::Kind::BalanceThis:
                return VType::Word;
            case Expr::Kind::Length: {
                const FieldDecl* f = c_.field(e.name);
                if (!f || f->type.kind != Type::Kind::Array)
                    fail(e.loc, "'.length' applies to an array field");
                return VType::Word;
            }
            case Expr::Kind::OracleQuery:
                for (const auto& a : e.args)
                    if (a->kind != Expr::Kind::Str) check_expr(*a);
                return VType::Word;
        }
        fail(e.loc, "unreachable");
    }
};

}  // namespace

ParseResult parse_contract(const std::string& source) {
    ParseResult r;
    std::vector<Token> toks = lex(source, r.diagnostics);
    if (!r.diagnostics.empty()) return r;
    try {
        Parser p(std::move(toks));
        Contract c = p.parse();
        Checker(c).run();
        r.contract = std::move(c);
    } catch (ParseError& e) {
        r.diagnostics.push_back(e.diag);
    }
    return r;
}

}  // namespace ethracer

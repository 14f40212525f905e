#include "ethracer/printer.hpp"

#include <sstream>

namespace ethracer {

namespace {

int prec(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Bin:
            switch (e.op) {
                case BinOp::Or: return 1;
                case BinOp::And: return 2;
                case BinOp::Eq:
                case BinOp::Ne: return 3;
                case BinOp::Lt:
                case BinOp::Le:
                case BinOp::Gt:
                case BinOp::Ge: return 4;
                case BinOp::Add:
                case BinOp::Sub: return 5;
                case BinOp::Mul:
                case BinOp::Div:
                case BinOp::Mod: return 6;
            }
            return 0;
        case Expr::Kind::Not:
        case Expr::Kind::Neg:
            return 7;
        default:
            return 9;
    }
}

const char* op_text(BinOp op) {
    switch (op) {
        case BinOp::Or: return "||";
        case BinOp::And: return "&&";
        case BinOp::Eq: return "==";
        case BinOp::Ne: return "!=";
        case BinOp::Lt: return "<";
        case BinOp::Le: return "<=";
        case BinOp::Gt: return ">";
        case BinOp::Ge: return ">=";
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
        case BinOp::Mod: return "%";
    }
    return "?";
}

void expr_to(std::ostream& os, const Expr& e);

void child_to(std::ostream& os, const Expr& child, int min_prec) {
    if (prec(child) < min_prec) {
        os << '(';
        expr_to(os, child);
        os << ')';
    } else {
        expr_to(os, child);
    }
}

void expr_to(std::ostream& os, const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Num:
            os << (e.hex_literal ? to_hex(e.value) : to_dec(e.value));
            break;
        case Expr::Kind::BoolLit:
            os << (e.value != 0 ? "true" : "false");
            break;
        case Expr::Kind::Str:
            os << '"' << e.text << '"';
            break;
        case Expr::Kind::Ident:
            os << e.name;
            break;
        case Expr::Kind::Index:
            child_to(os, *e.a, 9);
            os << '[';
            expr_to(os, *e.b);
            os << ']';
            break;
        case Expr::Kind::Bin: {
            int p = prec(e);
            child_to(os, *e.a, p);
            os << ' ' << op_text(e.op) << ' ';
            child_to(os, *e.b, p + 1);  // left-assoc
            break;
        }
        case Expr::Kind::Not:
            os << '!';
            child_to(os, *e.a, 8);
            break;
        case Expr::Kind::Neg:
            os << '-';
            child_to(os, *e.a, 8);
            break;
        case Expr::Kind::MsgSender:
            os << "msg.sender";
            break;
        case Expr::Kind::MsgValue:
            os << "msg.value";
            break;
        case Expr::Kind::Now:
            os << "now";
            break;
        case Expr::Kind::BlockNumber:
            os << "block.number";
            break;
        case Expr::Kind::BalanceThis:
            os << "balance(this)";
            break;
        case Expr::Kind::Length:
            os << e.name << ".length";
            break;
        case Expr::Kind::OracleQuery:
            os << "oracle_query(";
            for (size_t i = 0; i < e.args.size(); ++i) {
                if (i) os << ", ";
                expr_to(os, *e.args[i]);
            }
            os << ')';
            break;
    }
}

void indent_to(std::ostream& os, int depth) {
    for (int i = 0; i < depth; ++i) os << "    ";
}

void block_to(std::ostream& os, const std::vector<StmtPtr>& body, int depth);

void stmt_to(std::ostream& os, const Stmt& s, int depth) {
    indent_to(os, depth);
    switch (s.kind) {
        case Stmt::Kind::Local:
            os << type_name(s.type) << ' ' << s.name << " = ";
            expr_to(os, *s.a);
            os << ";\n";
            break;
        case Stmt::Kind::Assign:
            expr_to(os, *s.target);
            os << (s.op == AssignOp::Set ? " = " : s.op == AssignOp::Add ? " += " : " -= ");
            expr_to(os, *s.a);
            os << ";\n";
            break;
        case Stmt::Kind::Require:
            os << "require(";
            expr_to(os, *s.a);
            os << ");\n";
            break;
        case Stmt::Kind::Throw:
            os << "throw;\n";
            break;
        case Stmt::Kind::If: {
            os << "if (";
            expr_to(os, *s.a);
            os << ") {\n";
            block_to(os, s.body, depth + 1);
            const Stmt* cur = &s;
            while (!cur->else_body.empty()) {
                indent_to(os, depth);
                if (cur->else_body.size() == 1 && cur->else_body[0]->kind == Stmt::Kind::If) {
                    cur = cur->else_body[0].get();
                    os << "} else if (";
                    expr_to(os, *cur->a);
                    os << ") {\n";
                    block_to(os, cur->body, depth + 1);
                } else {
                    os << "} else {\n";
                    block_to(os, cur->else_body, depth + 1);
                    break;
                }
            }
            indent_to(os, depth);
            os << "}\n";
            break;
        }
        case Stmt::Kind::For:
            os << "for (uint256 " << s.name << " = ";
            expr_to(os, *s.a);
            os << "; " << s.name << " < ";
            expr_to(os, *s.b);
            os << "; " << s.name << "++) {\n";
            block_to(os, s.body, depth + 1);
            indent_to(os, depth);
            os << "}\n";
            break;
        case Stmt::Kind::Send:
            os << "send(";
            expr_to(os, *s.a);
            os << ", ";
            expr_to(os, *s.b);
            os << ");\n";
            break;
        case Stmt::Kind::Push:
            os << s.name << ".push(";
            expr_to(os, *s.a);
            os << ");\n";
            break;
        case Stmt::Kind::Return:
            if (s.a) {
                os << "return ";
                expr_to(os, *s.a);
                os << ";\n";
            } else {
                os << "return;\n";
            }
            break;
    }
}

void block_to(std::ostream& os, const std::vector<StmtPtr>& body, int depth) {
    for (const auto& st : body) stmt_to(os, *st, depth);
}

}  // namespace

std::string print_expr(const Expr& e) {
    std::ostringstream os;
    expr_to(os, e);
    return os.str();
}

std::string print_contract(const Contract& c) {
    std::ostringstream os;
    os << "contract " << c.name << " {\n";
    for (const auto& f : c.fields) os << "    " << type_name(f.type) << ' ' << f.name << ";\n";
    for (size_t i = 0; i < c.functions.size(); ++i) {
        if (i > 0 || !c.fields.empty()) os << '\n';
        const Function& fn = c.functions[i];
        os << "    function " << fn.name << '(';
        for (size_t j = 0; j < fn.params.size(); ++j) {
            if (j) os << ", ";
            os << scalar_name(fn.params[j].type) << ' ' << fn.params[j].name;
        }
        os << ')';
        if (fn.payable) os << " payable";
        os << " {\n";
        block_to(os, fn.body, 2);
        os << "    }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace ethracer

#include "ethracer/ast.hpp"

namespace ethracer {

std::string scalar_name(ScalarKind k) {
    switch (k) {
        case ScalarKind::Uint: return "uint256";
        case ScalarKind::Bool: return "bool";
        case ScalarKind::Address: return "address";
    }
    return "?";
}

std::string type_name(const Type& t) {
    switch (t.kind) {
        case Type::Kind::Scalar: return scalar_name(t.scalar);
        case Type::Kind::Array: return scalar_name(t.scalar) + "[]";
        case Type::Kind::Map: return "mapping(address => uint256)";
        case Type::Kind::Map2: return "mapping(address => mapping(address => uint256))";
    }
    return "?";
}

const FieldDecl* Contract::field(const std::string& n) const {
    for (const auto& f : fields)
        if (f.name == n) return &f;
    return nullptr;
}

const Function* Contract::function(const std::string& n) const {
    for (const auto& f : functions)
        if (f.name == n) return &f;
    return nullptr;
}

std::vector<std::string> list_functions(const Contract& c) {
    std::vector<std::string> out;
    out.reserve(c.functions.size());
    for (const auto& f : c.functions) out.push_back(f.name);
    return out;
}

namespace {

void harvest_expr(const Expr& e, HarvestedConstants& h) {
    switch (e.kind) {
        case Expr::Kind::Num:
            if (e.hex_literal) {
                h.addresses.insert(e.value);
            } else {
                h.uints.insert(e.value);
                h.uints.insert(e.value - 1);  // wraps at 0
                h.uints.insert(e.value + 1);
            }
            break;
        case Expr::Kind::BoolLit:
            h.has_bool_literal = true;
            break;
        default:
            break;
    }
    if (e.a) harvest_expr(*e.a, h);
    if (e.b) harvest_expr(*e.b, h);
    for (const auto& a : e.args) harvest_expr(*a, h);
}

void harvest_stmt(const Stmt& s, HarvestedConstants& h) {
    if (s.target) harvest_expr(*s.target, h);
    if (s.a) harvest_expr(*s.a, h);
    if (s.b) harvest_expr(*s.b, h);
    for (const auto& st : s.body) harvest_stmt(*st, h);
    for (const auto& st : s.else_body) harvest_stmt(*st, h);
}

}  // namespace

HarvestedConstants harvest_constants(const Contract& c) {
    HarvestedConstants h;
    h.uints.insert(0);
    h.uints.insert(1);
    for (const auto& fn : c.functions)
        for (const auto& s : fn.body) harvest_stmt(*s, h);
    return h;
}

}  // namespace ethracer

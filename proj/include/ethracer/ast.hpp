#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ethracer/u256.hpp"

namespace ethracer {

struct SourceLoc {
    int line = 0;
    int col = 0;
};

enum class ScalarKind { Uint, Bool, Address };

struct Type {
    enum class Kind { Scalar, Array, Map, Map2 } kind = Kind::Scalar;
    ScalarKind scalar = ScalarKind::Uint;  // scalar type, or array element type
};

std::string type_name(const Type& t);
std::string scalar_name(ScalarKind k);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class BinOp { Or, And, Eq, Ne, Lt, Le, Gt, Ge, Add, Sub, Mul, Div, Mod };

struct Expr {
    enum class Kind {
        Num,          // literal: value
        BoolLit,      // literal: value 0/1
        Str,          // string literal (oracle_query args only): text
        Ident,        // name
        Index,        // a = base, b = key
        Bin,          // op, a, b
        Not,          // a
        Neg,          // a
        MsgSender,
        MsgValue,
        Now,
        BlockNumber,
        BalanceThis,
        Length,       // name = array field
        OracleQuery,  // args
    };
    Kind kind;
    SourceLoc loc;
    u256 value;
    bool hex_literal = false;  // Num written as 0x...
    std::string name;
    std::string text;
    BinOp op = BinOp::Add;
    ExprPtr a, b;
    std::vector<ExprPtr> args;
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

enum class AssignOp { Set, Add, Sub };

struct Stmt {
    enum class Kind {
        Local,    // type/name, init = a
        Assign,   // lvalue = target, op, value = a
        Require,  // cond = a
        Throw,
        If,       // cond = a, then_body, else_body
        For,      // name, init = a, bound = b, body
        Send,     // a = to, b = amount
        Push,     // name = array field, a = value
        Return,   // optional a
    };
    Kind kind;
    SourceLoc loc;
    Type type;          // Local
    std::string name;   // Local / For / Push
    AssignOp op = AssignOp::Set;
    ExprPtr target;     // Assign lvalue (Ident or Index chain)
    ExprPtr a, b;
    std::vector<StmtPtr> body;       // If-then / For body
    std::vector<StmtPtr> else_body;  // If-else
};

struct Param {
    std::string name;
    ScalarKind type;
    SourceLoc loc;
};

struct Function {
    std::string name;
    std::vector<Param> params;
    bool payable = false;
    std::vector<StmtPtr> body;
    SourceLoc loc;
};

struct FieldDecl {
    std::string name;
    Type type;
    SourceLoc loc;
};

struct Contract {
    std::string name;
    std::vector<FieldDecl> fields;
    std::vector<Function> functions;

    const FieldDecl* field(const std::string& n) const;
    const Function* function(const std::string& n) const;
};

// Function names in declaration order.
std::vector<std::string> list_functions(const Contract& c);

struct HarvestedConstants {
    std::set<u256> uints;      // every int literal, closed under {0, 1, lit-1, lit+1}
    std::set<u256> addresses;  // hex address literals
    bool has_bool_literal = false;
};

HarvestedConstants harvest_constants(const Contract& c);

}  // namespace ethracer

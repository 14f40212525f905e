#pragma once

#include <string>
#include <vector>

#include "ethracer/ast.hpp"

namespace ethracer {

enum class Tok {
    Ident, Number, HexNumber, String,
    // keywords
    KwContract, KwFunction, KwPayable, KwMapping, KwUint256, KwBool, KwAddress,
    KwRequire, KwThrow, KwIf, KwElse, KwFor, KwSend, KwPush, KwReturn,
    KwTrue, KwFalse, KwMsg, KwSender, KwValue, KwNow, KwBlock, KwNumberWord,
    KwBalance, KwThis, KwOracleQuery, KwLength,
    // punctuation / operators
    LBrace, RBrace, LParen, RParen, LBracket, RBracket,
    Semicolon, Comma, Dot, Arrow,  // => in mapping types
    Assign, PlusAssign, MinusAssign, PlusPlus,
    OrOr, AndAnd, Eq, Ne, Lt, Le, Gt, Ge,
    Plus, Minus, Star, Slash, Percent, Bang,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    SourceLoc loc;
};

struct Diagnostic {
    SourceLoc loc;
    std::string message;
};

// Tokenizes source. On a lexical error, appends a diagnostic and stops.
std::vector<Token> lex(const std::string& source, std::vector<Diagnostic>& diags);

}  // namespace ethracer

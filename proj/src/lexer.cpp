#include "ethracer/lexer.hpp"

#include <cctype>
#include <map>

namespace ethracer {

namespace {

const std::map<std::string, Tok>& keywords() {
    static const std::map<std::string, Tok> kw = {
        {"contract", Tok::KwContract}, {"function", Tok::KwFunction},
        {"payable", Tok::KwPayable},   {"mapping", Tok::KwMapping},
        {"uint256", Tok::KwUint256},   {"bool", Tok::KwBool},
        {"address", Tok::KwAddress},   {"require", Tok::KwRequire},
        {"throw", Tok::KwThrow},       {"if", Tok::KwIf},
        {"else", Tok::KwElse},         {"for", Tok::KwFor},
        {"send", Tok::KwSend},         {"push", Tok::KwPush},
        {"return", Tok::KwReturn},     {"true", Tok::KwTrue},
        {"false", Tok::KwFalse},       {"msg", Tok::KwMsg},
        {"sender", Tok::KwSender},     {"value", Tok::KwValue},
        {"now", Tok::KwNow},           {"block", Tok::KwBlock},
        {"number", Tok::KwNumberWord}, {"balance", Tok::KwBalance},
        {"this", Tok::KwThis},         {"oracle_query", Tok::KwOracleQuery},
        {"length", Tok::KwLength},
    };
    return kw;
}

}  // namespace

std::vector<Token> lex(const std::string& src, std::vector<Diagnostic>& diags) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto loc = [&] { return SourceLoc{line, col}; };
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            if (src[i] == '\n') { ++line; col = 1; } else { ++col; }
        }
    };
    auto push = [&](Tok t, const std::string& text, SourceLoc l) {
        out.push_back({t, text, l});
    };

    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(1); continue; }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        SourceLoc l = loc();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            std::string word = src.substr(i, j - i);
            advance(j - i);
            auto it = keywords().find(word);
            push(it != keywords().end() ? it->second : Tok::Ident, word, l);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (c == '0' && i + 1 < src.size() && (src[i + 1] == 'x' || src[i + 1] == 'X')) {
                size_t j = i + 2;
                while (j < src.size() && std::isxdigit(static_cast<unsigned char>(src[j]))) ++j;
                if (j == i + 2) {
                    diags.push_back({l, "hex literal with no digits"});
                    return out;
                }
                std::string text = src.substr(i, j - i);
                advance(j - i);
                push(Tok::HexNumber, text, l);
            } else {
                size_t j = i;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
                std::string text = src.substr(i, j - i);
                advance(j - i);
                push(Tok::Number, text, l);
            }
            continue;
        }
        if (c == '"') {
            size_t j = i + 1;
            while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
            if (j >= src.size() || src[j] != '"') {
                diags.push_back({l, "unterminated string literal"});
                return out;
            }
            std::string text = src.substr(i + 1, j - i - 1);
            advance(j - i + 1);
            push(Tok::String, text, l);
            continue;
        }
        auto two = [&](char a, char b) {
            return c == a && i + 1 < src.size() && src[i + 1] == b;
        };
        if (two('=', '>')) { advance(2); push(Tok::Arrow, "=>", l); continue; }
        if (two('=', '=')) { advance(2); push(Tok::Eq, "==", l); continue; }
        if (two('!', '=')) { advance(2); push(Tok::Ne, "!=", l); continue; }
        if (two('<', '=')) { advance(2); push(Tok::Le, "<=", l); continue; }
        if (two('>', '=')) { advance(2); push(Tok::Ge, ">=", l); continue; }
        if (two('&', '&')) { advance(2); push(Tok::AndAnd, "&&", l); continue; }
        if (two('|', '|')) { advance(2); push(Tok::OrOr, "||", l); continue; }
        if (two('+', '=')) { advance(2); push(Tok::PlusAssign, "+=", l); continue; }
        if (two('-', '=')) { advance(2); push(Tok::MinusAssign, "-=", l); continue; }
        if (two('+', '+')) { advance(2); push(Tok::PlusPlus, "++", l); continue; }
        Tok t;
        switch (c) {
            case '{': t = Tok::LBrace; break;
            case '}': t = Tok::RBrace; break;
            case '(': t = Tok::LParen; break;
            case ')': t = Tok::RParen; break;
            case '[': t = Tok::LBracket; break;
            case ']': t = Tok::RBracket; break;
            case ';': t = Tok::Semicolon; break;
            case ',': t = Tok::Comma; break;
            case '.': t = Tok::Dot; break;
            case '=': t = Tok::Assign; break;
            case '<': t = Tok::Lt; break;
            case '>': t = Tok::Gt; break;
            case '+': t = Tok::Plus; break;
            case '-': t = Tok::Minus; break;
            case '*': t = Tok::Star; break;
            case '/': t = Tok::Slash; break;
            case '%': t = Tok::Percent; break;
            case '!': t = Tok::Bang; break;
            default:
                diags.push_back({l, std::string("unexpected character '") + c + "'"});
                return out;
        }
        advance(1);
        push(t, std::string(1, c), l);
    }
    out.push_back({Tok::End, "", loc()});
    return out;
}

}  // namespace ethracer

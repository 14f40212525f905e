#include "doctest.h"

#include "ethracer/lexer.hpp"
#include "ethracer/parser.hpp"
#include "ethracer/printer.hpp"
#include "ethracer/u256.hpp"

#include "helpers.hpp"

using namespace ethracer;

TEST_CASE("u256 parsing and rendering") {
    CHECK(parse_u256("0") == 0);
    CHECK(parse_u256("123") == 123);
    CHECK(parse_u256("0x10") == 16);
    CHECK(parse_u256("0xFF") == 255);
    CHECK(to_dec(u256(42)) == "42");
    CHECK(to_hex(u256(0)) == "0x0");
    CHECK(to_hex(u256(31)) == "0x1f");
    CHECK_THROWS_AS(parse_u256(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_u256("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_u256("12x"), std::invalid_argument);

    // wraparound mod 2^256
    u256 max = u256(0) - 1;
    CHECK(max + 1 == 0);
    CHECK(u256(0) - 1 == max);

    // 2^256 - 1 round-trips through decimal
    CHECK(parse_u256(to_dec(max)) == max);
}

TEST_CASE("fnv1a matches the reference vectors") {
    CHECK(fnv1a("") == 14695981039346656037ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("lexer tokenizes the mapping arrow and skips comments") {
    std::vector<Diagnostic> diags;
    auto toks = lex("mapping(address => uint256) x; // trailing\n42", diags);
    CHECK(diags.empty());
    REQUIRE(toks.size() >= 9);
    CHECK(toks[0].kind == Tok::KwMapping);
    CHECK(toks[2].kind == Tok::KwAddress);
    CHECK(toks[3].kind == Tok::Arrow);
    CHECK(toks[toks.size() - 2].kind == Tok::Number);
    CHECK(toks[toks.size() - 2].text == "42");
    CHECK(toks.back().kind == Tok::End);
}

TEST_CASE("lexer reports unknown characters with a location") {
    std::vector<Diagnostic> diags;
    lex("contract C {\n  ?\n}", diags);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].loc.line == 2);
}

TEST_CASE("parser accepts the whole corpus") {
    for (const char* name : {"iou", "casino", "escrow", "contest", "bounty", "empty"}) {
        CAPTURE(name);
        auto src = testutil::read_file(testutil::corpus_path(std::string(name) + ".fsol"));
        ParseResult r = parse_contract(src);
        CHECK(r.ok());
    }
}

TEST_CASE("parsed corpus shapes") {
    Contract iou = testutil::parse_ok(testutil::read_file(testutil::corpus_path("iou.fsol")));
    CHECK(iou.name == "IOU");
    CHECK(list_functions(iou) ==
          std::vector<std::string>{"transfer", "approve", "transferFrom", "spendable"});
    REQUIRE(iou.fields.size() == 2);
    CHECK(iou.fields[0].name == "balances");
    CHECK(iou.fields[0].type.kind == Type::Kind::Map);
    CHECK(iou.fields[1].name == "allowed");
    CHECK(iou.fields[1].type.kind == Type::Kind::Map2);
    CHECK(iou.function("transfer")->params.size() == 2);
    CHECK(iou.function("transfer")->params[0].type == ScalarKind::Address);
    CHECK(iou.function("transfer")->params[1].type == ScalarKind::Uint);
    CHECK_FALSE(iou.function("transfer")->payable);

    Contract casino = testutil::parse_ok(testutil::read_file(testutil::corpus_path("casino.fsol")));
    CHECK(casino.function("bet")->payable);
    CHECK(casino.function("__callback")->params.size() == 2);

    Contract empty = testutil::parse_ok(testutil::read_file(testutil::corpus_path("empty.fsol")));
    CHECK(empty.name == "Empty");
    CHECK(empty.fields.empty());
    CHECK(empty.functions.empty());
}

TEST_CASE("parse errors carry line and column") {
    // missing semicolon
    ParseResult r = parse_contract("contract C {\n  uint256 x\n}");
    CHECK_FALSE(r.ok());
    REQUIRE_FALSE(r.diagnostics.empty());
    CHECK(r.diagnostics[0].loc.line >= 2);

    // unknown identifier
    r = parse_contract("contract C { function f() { y = 1; } }");
    CHECK_FALSE(r.ok());

    // bool/word mismatch: && needs bool operands
    r = parse_contract("contract C { uint256 x; function f() { require(1 && true); } }");
    CHECK_FALSE(r.ok());

    // arithmetic on bool
    r = parse_contract("contract C { bool b; function f() { b = b + 1; } }");
    CHECK_FALSE(r.ok());

    // duplicate field
    r = parse_contract("contract C { uint256 x; uint256 x; }");
    CHECK_FALSE(r.ok());

    // duplicate function
    r = parse_contract("contract C { function f() { throw; } function f() { throw; } }");
    CHECK_FALSE(r.ok());

    // calling convention: payable appears before the body only
    r = parse_contract("contract C { function payable f() { throw; } }");
    CHECK_FALSE(r.ok());
}

TEST_CASE("printer reaches a fixpoint on the corpus") {
    for (const char* name : {"iou", "casino", "escrow", "contest", "bounty", "empty"}) {
        CAPTURE(name);
        auto src = testutil::read_file(testutil::corpus_path(std::string(name) + ".fsol"));
        Contract c1 = testutil::parse_ok(src);
        std::string p1 = print_contract(c1);
        Contract c2 = testutil::parse_ok(p1);
        std::string p2 = print_contract(c2);
        CHECK(p1 == p2);
    }
}

TEST_CASE("printer renders precedence without spurious parentheses") {
    Contract c = testutil::parse_ok(
        "contract C { uint256 x; function f(uint256 a, uint256 b) {"
        " x = a * (b + 1); x = (a + b) * 2; x = a - b - 1; } }");
    std::string p = print_contract(c);
    CHECK(p.find("x = a * (b + 1);") != std::string::npos);
    CHECK(p.find("x = (a + b) * 2;") != std::string::npos);
    // left-assoc chains print flat
    CHECK(p.find("x = a - b - 1;") != std::string::npos);
}

TEST_CASE("harvest collects int literals with the +/-1 closure") {
    Contract casino = testutil::parse_ok(testutil::read_file(testutil::corpus_path("casino.fsol")));
    HarvestedConstants h = harvest_constants(casino);
    for (unsigned v : {0u, 1u, 99u, 100u, 101u, 199u, 200u, 201u}) {
        CAPTURE(v);
        CHECK(h.uints.count(u256(v)) == 1);
    }
    CHECK_FALSE(h.has_bool_literal);

    Contract bounty = testutil::parse_ok(testutil::read_file(testutil::corpus_path("bounty.fsol")));
    CHECK(harvest_constants(bounty).has_bool_literal);

    Contract addr = testutil::parse_ok(
        "contract C { address a; function f() { require(a == 0x00ff); } }");
    HarvestedConstants ha = harvest_constants(addr);
    CHECK(ha.addresses.count(u256(255)) == 1);
    // hex literals are addresses, not uints: no closure around 255
    CHECK(ha.uints.count(u256(255)) == 0);
}

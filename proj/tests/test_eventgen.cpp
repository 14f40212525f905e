#include "doctest.h"

#include "ethracer/eventgen.hpp"

#include "helpers.hpp"

using namespace ethracer;

TEST_CASE("iou scenario yields the seven appendix events in order") {
    auto p = testutil::load_pipeline("iou");
    const u256 O = p.scenario.actor("O")->address;
    const u256 S = p.scenario.actor("S")->address;

    REQUIRE(p.events.size() == 7);
    CHECK(p.events[0].fn == "transfer");
    CHECK(p.events[0].msg.sender == O);
    CHECK(p.events[0].msg.args == std::vector<u256>{S, 100});

    CHECK(p.events[1].fn == "approve");
    CHECK(p.events[1].msg.args == std::vector<u256>{S, 100});
    CHECK(p.events[2].fn == "approve");
    CHECK(p.events[2].msg.args == std::vector<u256>{S, 300});

    for (int i = 3; i <= 6; ++i) {
        CAPTURE(i);
        CHECK(p.events[static_cast<size_t>(i)].fn == "transferFrom");
        CHECK(p.events[static_cast<size_t>(i)].msg.sender == S);
    }
    CHECK(p.events[3].msg.args == std::vector<u256>{O, S, 100});
    CHECK(p.events[4].msg.args == std::vector<u256>{O, S, 300});
    CHECK(p.events[5].msg.args == std::vector<u256>{O, O, 100});
    CHECK(p.events[6].msg.args == std::vector<u256>{O, O, 300});

    // pure getter generates nothing
    for (const auto& e : p.events) CHECK(e.fn != "spendable");
}

TEST_CASE("casino scenario yields one bet per player and no callbacks") {
    auto p = testutil::load_pipeline("casino");
    REQUIRE(p.events.size() == 2);
    CHECK(p.events[0].fn == "bet");
    CHECK(p.events[0].msg.sender == p.scenario.actor("p1")->address);
    CHECK(p.events[0].msg.value == 1);
    CHECK(p.events[1].fn == "bet");
    CHECK(p.events[1].msg.sender == p.scenario.actor("p2")->address);
    CHECK(p.events[1].msg.value == 1);
}

TEST_CASE("cartesian generation varies the rightmost dimension fastest") {
    Contract c = testutil::parse_ok(testutil::read_file(testutil::corpus_path("iou.fsol")));
    Scenario sc = load_scenario(nlohmann::json::parse(
        R"({"actors":["O","S"],"budgets":{"events_per_hb_pair":4}})"));
    std::vector<Event> events = generate_events(c, sc);

    const u256 O = sc.actor("O")->address;
    const u256 S = sc.actor("S")->address;
    const u256 kMax = u256(0) - 1;

    // transfer: budget 4 out of senders {O,S} x to {O,S} x value {0,1,max}
    REQUIRE(events.size() >= 4);
    CHECK(events[0].fn == "transfer");
    CHECK(events[0].msg.sender == O);
    CHECK(events[0].msg.args == std::vector<u256>{O, 0});
    CHECK(events[1].msg.args == std::vector<u256>{O, 1});
    CHECK(events[2].msg.args == std::vector<u256>{O, kMax});
    CHECK(events[3].msg.args == std::vector<u256>{S, 0});
    CHECK(events[3].msg.sender == O);
}

TEST_CASE("uint domains merge harvested constants with the scenario domain, sorted") {
    Contract c = testutil::parse_ok(
        "contract C { uint256 x; function f(uint256 v) { require(v < 10); x = v; } }");
    Scenario sc = load_scenario(nlohmann::json::parse(
        R"({"actors":["a"],"uint_domain":["7","9"]})"));
    std::vector<u256> dom = arg_domain(c, sc, ScalarKind::Uint);
    // harvested: 0,1 (always), 9,10,11 (closure of 10); plus 7,9 from the scenario
    std::vector<u256> expect = {0, 1, 7, 9, 10, 11};
    CHECK(dom == expect);
}

TEST_CASE("bool parameters draw from {false, true}") {
    Contract c = testutil::parse_ok(
        "contract C { uint256 x; function f(bool b) { if (b) { x = 1; } } }");
    Scenario sc = load_scenario(nlohmann::json::parse(R"({"actors":["a"]})"));
    std::vector<Event> events = generate_events(c, sc);
    // budget 1 (no candidate pair): only the first tuple survives
    REQUIRE(events.size() == 1);
    CHECK(events[0].msg.args == std::vector<u256>{0});

    CHECK(arg_domain(c, sc, ScalarKind::Bool) == std::vector<u256>{0, 1});
}

TEST_CASE("explicit tuples replace generation and validate arity") {
    Contract c = testutil::parse_ok(testutil::read_file(testutil::corpus_path("iou.fsol")));
    Scenario sc = load_scenario(nlohmann::json::parse(
        R"({"actors":["O","S"],"per_function":{"approve":[{"sender":"S","args":["O","42"]}]}})"));
    std::vector<Event> events = generate_events(c, sc);
    int approves = 0;
    for (const auto& e : events) {
        if (e.fn != "approve") continue;
        ++approves;
        CHECK(e.msg.sender == sc.actor("S")->address);
        CHECK(e.msg.args == std::vector<u256>{sc.actor("O")->address, 42});
    }
    CHECK(approves == 1);

    Scenario bad = load_scenario(nlohmann::json::parse(
        R"({"actors":["O"],"per_function":{"approve":[{"args":["O"]}]}})"));
    CHECK_THROWS_AS(generate_events(c, bad), GenError);
}

TEST_CASE("explicit tuple defaults: first actor, scenario clock, payable base value") {
    Contract c = testutil::parse_ok(
        "contract C { uint256 x; uint256 y;"
        " function f() payable { x += msg.value; }"
        " function g() { y += 1; } }");
    Scenario sc = load_scenario(nlohmann::json::parse(
        R"({"actors":["a","b"],"value_domain":["5"],"timestamp":"77",
            "per_function":{"f":[{}],"g":[{}]}})"));
    std::vector<Event> events = generate_events(c, sc);
    REQUIRE(events.size() == 2);
    CHECK(events[0].msg.sender == sc.actor("a")->address);
    CHECK(events[0].msg.value == 5);   // payable: first value_domain entry
    CHECK(events[1].msg.value == 0);   // non-payable: always 0
    CHECK(events[0].msg.timestamp == 77);
}

TEST_CASE("bool argument range is validated in explicit tuples") {
    Contract c = testutil::parse_ok(
        "contract C { uint256 x; function f(bool b) { if (b) { x = 1; } } }");
    Scenario sc = load_scenario(nlohmann::json::parse(
        R"({"actors":["a"],"per_function":{"f":[{"args":["2"]}]}})"));
    CHECK_THROWS_AS(generate_events(c, sc), GenError);
}

TEST_CASE("fallback generates one bare call per actor") {
    Contract c = testutil::parse_ok(
        "contract C { uint256 n; function fallback() payable { n += 1; } }");
    Scenario sc = load_scenario(nlohmann::json::parse(
        R"({"actors":["a","b","c"],"value_domain":["3"]})"));
    std::vector<Event> events = generate_events(c, sc);
    REQUIRE(events.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(events[i].fn == "fallback");
        CHECK(events[i].msg.sender == sc.actors[i].address);
        CHECK(events[i].msg.value == 3);
        CHECK(events[i].msg.args.empty());
    }
}

TEST_CASE("generation is deterministic") {
    auto a = testutil::load_pipeline("contest");
    auto b = testutil::load_pipeline("contest");
    REQUIRE(a.events.size() == b.events.size());
    for (size_t i = 0; i < a.events.size(); ++i) CHECK(a.events[i] == b.events[i]);
    CHECK(a.hb.pairs == b.hb.pairs);
}

TEST_CASE("scenario validation errors") {
    using nlohmann::json;
    CHECK_THROWS_AS(load_scenario(json::parse(R"({})")), ScenarioError);
    CHECK_THROWS_AS(load_scenario(json::parse(R"({"actors":[]})")), ScenarioError);
    CHECK_THROWS_AS(load_scenario(json::parse(R"({"actors":["a","a"]})")), ScenarioError);
    CHECK_THROWS_AS(load_scenario(json::parse(R"({"actors":["a"],"value_domain":[]})")),
                    ScenarioError);
    CHECK_THROWS_AS(load_scenario(json::parse(R"({"actors":["a"],"min_trace_len":1})")),
                    ScenarioError);
    CHECK_THROWS_AS(
        load_scenario(json::parse(R"({"actors":["a"],"max_trace_len":2,"min_trace_len":3})")),
        ScenarioError);
    CHECK_THROWS_AS(
        load_scenario(json::parse(R"({"actors":["a"],"budgets":{"events_per_hb_pair":0}})")),
        ScenarioError);

    // unknown words fail loudly
    Scenario sc = load_scenario(json::parse(R"({"actors":["a"]})"));
    CHECK_THROWS_AS(sc.resolve_word("nobody"), ScenarioError);
    CHECK(sc.resolve_word("a") == sc.actors[0].address);
    CHECK(sc.resolve_word("true") == 1);
    CHECK(sc.resolve_word("0x10") == 16);
}

TEST_CASE("auto-assigned actor addresses are distinct and recognizable") {
    Scenario sc = load_scenario(nlohmann::json::parse(R"({"actors":["a","b","c"]})"));
    CHECK(sc.actors[0].address == parse_u256("0xa100000000000000000000000000000000000001"));
    CHECK(sc.actors[1].address == parse_u256("0xa100000000000000000000000000000000000002"));
    CHECK(sc.actors[2].address == parse_u256("0xa100000000000000000000000000000000000003"));
}

TEST_CASE("snapshot application resolves actor names and typed values") {
    Contract c = testutil::parse_ok(testutil::read_file(testutil::corpus_path("bounty.fsol")));
    Scenario sc = load_scenario_file(testutil::corpus_path("bounty.scenario.json"));
    WorldState s0 = make_initial_state(c, sc);

    CHECK(std::get<u256>(s0.fields.at("owner")) == sc.actor("owner")->address);
    CHECK(std::get<u256>(s0.fields.at("proposedBeneficiary")) == sc.actor("charlie")->address);
    const auto& donations = std::get<std::map<u256, u256>>(s0.fields.at("donations"));
    CHECK(donations.at(sc.actor("alice")->address) == 50);
    CHECK(donations.at(sc.actor("bob")->address) == 50);
    CHECK(s0.ext_balances.at(sc.actor("alice")->address) == 500);
    CHECK(s0.balance == 0);

    // unknown field in a snapshot is an error
    Scenario bad = sc;
    bad.initial_state = nlohmann::json::parse(R"({"fields":{"nope":"1"}})");
    CHECK_THROWS_AS(make_initial_state(c, bad), ScenarioError);
}

#include "sct/errors.hh"
#include "sct/monster.hh"
#include "sct/serialize.hh"

#include <catch_amalgamated.hpp>

#include <filesystem>

using namespace sct;

namespace {

std::string message_of(const std::string& text) {
    try {
        from_json(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("json round trip") {
    const Cdfa m = build_monster({{2}, {StateSet::of(2, {1})}}).front();
    const Cdfa back = from_json(to_json(m));
    CHECK(back == m);
    CHECK(back.labels().front() == "[00]");

    const auto pair = build_monster({{2, 3}, {StateSet::of(2, {1}), StateSet::of(3, {0, 2})}});
    for (const auto& a : pair) {
        CHECK(from_json(to_json(a)) == a);
    }
}

TEST_CASE("minimal document") {
    const Cdfa a = from_json(R"({"letters":["a"],"states":1,"initial":0,"finals":[],"transitions":[[0]]})");
    CHECK(a.state_count() == 1);
    CHECK(a.letter_count() == 1);
    CHECK(a.target(0, 0) == 0);
}

TEST_CASE("parse errors name the field") {
    CHECK(message_of("{").find("malformed") != std::string::npos);
    CHECK(message_of("[]").find("object") != std::string::npos);
    CHECK(message_of(R"({"states":1,"initial":0,"finals":[],"transitions":[[0]]})").find("letters") !=
          std::string::npos);
    CHECK(message_of(R"({"letters":["a","b"],"states":2,"initial":0,"finals":[],"transitions":[[0,1],[1,5]]})") ==
          "transitions[1][1]: target 5 out of range");
    CHECK(message_of(R"({"letters":["a"],"states":1,"initial":3,"finals":[],"transitions":[[0]]})").find("initial") !=
          std::string::npos);
    CHECK(message_of(R"({"letters":["a"],"states":1,"initial":0,"finals":[1],"transitions":[[0]]})") ==
          "finals[0]: state 1 out of range");
    CHECK(message_of(R"({"letters":["a"],"states":2,"initial":0,"finals":[],"transitions":[[0]]})")
              .find("transitions") != std::string::npos);
    CHECK(message_of(R"({"letters":["a"],"states":1,"initial":-1,"finals":[],"transitions":[[0]]})") ==
          "initial: expected a non-negative integer");
}

TEST_CASE("dot export") {
    const Cdfa a = Cdfa::from_rows({{1, 0}, {1, 1}}, 0, {1}, {"a", "b"});
    const std::string dot = to_dot(a, "demo");
    CHECK(dot ==
          "digraph \"demo\" {\n"
          "  rankdir=LR;\n"
          "  __init [shape=point];\n"
          "  0 [shape=circle];\n"
          "  1 [shape=doublecircle];\n"
          "  __init -> 0;\n"
          "  0 -> 0 [label=\"b\"];\n"
          "  0 -> 1 [label=\"a\"];\n"
          "  1 -> 1 [label=\"a,b\"];\n"
          "}\n");
}

TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path() / "sct_serialize_test";
    std::filesystem::create_directories(dir);
    const Cdfa a = Cdfa::from_rows({{1}, {0}}, 0, {0});
    const auto path = (dir / "a.json").string();
    write_text_file(path, to_json(a));
    CHECK(read_cdfa_file(path) == a);
    CHECK_THROWS_AS(read_cdfa_file((dir / "missing.json").string()), ParseError);
    std::filesystem::remove_all(dir);
}

#include <doctest.h>

#include "../support.hpp"
#include "levicyc/builders.hpp"
#include "levicyc/errors.hpp"
#include "levicyc/io.hpp"
#include "levicyc/realization.hpp"

using namespace levicyc;
using namespace levicyc::testing;
using nlohmann::json;

TEST_CASE("arrangement json round trip") {
    for (const auto &[name, arr] : all_builder_outputs()) {
        CAPTURE(name);
        auto back = arrangement_from_json(json::parse(to_json(arr).dump()));
        CHECK(back.same_incidence(arr));
        CHECK(back.line_names() == arr.line_names());
        CHECK(back.point_names() == arr.point_names());
        CHECK(back.family() == arr.family());
    }
}

TEST_CASE("coordinates survive the round trip") {
    auto arr = attach_coordinates(ceva(5), ceva_lines(5));
    auto back = read_arrangement(to_json(arr).dump());
    REQUIRE(back.coordinates().has_value());
    CHECK(back.coordinates()->conductor == 5);
    CHECK(back.coordinates()->lines == arr.coordinates()->lines);
    CHECK(back.coordinates()->points == arr.coordinates()->points);
}

TEST_CASE("reader rejects bad input") {
    CHECK_THROWS_AS(read_arrangement("not json"), ParseError);
    CHECK_THROWS_AS(read_arrangement(R"({"points": []})"), ParseError);
    CHECK_THROWS_AS(read_arrangement(R"({"k": 3, "points": [{"id": 0, "lines": [0, 0, 1]}]})"), InvalidArrangement);
    CHECK_THROWS_AS(read_arrangement(R"({"k": 3, "points": [{"id": 0, "lines": [0, 1]}, {"id": 1, "lines": [1, 2]}]})"),
                    InvalidArrangement);
    CHECK_THROWS_AS(read_arrangement(R"({"k": 2, "points": [{"id": 0, "lines": [0, 1]}, {"id": 0, "lines": [0, 1]}]})"),
                    ParseError);
    auto ok = R"({"k": 3, "points": [{"id": 0, "lines": [0, 1]}, {"id": 1, "lines": [1, 2]}, {"id": 2, "lines": [0, 2]}]})";
    CHECK(read_arrangement(ok).point_count() == 3);
}

TEST_CASE("result json") {
    auto w = InducedCycleWitness{{0, 1, 2}, {0, 1, 2}};
    CHECK(witness_from_json(to_json(w)) == w);
    CHECK_THROWS_AS(witness_from_json(json{{"lines", 3}}), ParseError);

    auto s = spectrum(nine_three(), 9);
    auto j = to_json(s);
    CHECK(j["lengths"]["8"]["status"] == "absent");
    CHECK(j["lengths"]["7"]["status"] == "found");
    CHECK(j["lengths"]["7"].contains("witness"));
    CHECK_FALSE(j.contains("nodes"));
    CHECK(to_json(s, true).contains("nodes"));

    auto l = to_json(longest_cycle(hesse()));
    CHECK(l["cycle_length"] == 12);
}

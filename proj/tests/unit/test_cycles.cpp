#include <doctest.h>

#include <random>
#include <sstream>

#include "../support.hpp"
#include "levicyc/builders.hpp"
#include "levicyc/cycles.hpp"
#include "levicyc/errors.hpp"
#include "levicyc/levi.hpp"
#include "levicyc/oracle.hpp"

using namespace levicyc;
using namespace levicyc::testing;

namespace {

InducedCycleWitness walk(const Arrangement &arr, const std::string &text) {
    std::istringstream in(text);
    std::vector<std::string> names;
    for (std::string t; in >> t;) names.push_back(t);
    return witness_by_names(arr, names);
}

}  // namespace

TEST_CASE("witness validation") {
    auto h = hesse();
    CHECK(validate_witness(h, walk(h, "l3 p(1,3) l1 p(1,2) l2 p4 l4 p(4,5) l5 p8 l3")).ok());
    CHECK(validate_witness(h, walk(h, "l3 p(1,3) l1 p(1,2) l2 p4 l4 p(4,5) l5 p(5,6) l6 p9 l3")).ok());

    auto n = nine_three();
    // As printed, the fifth point is e15 = L3 L9, which is not on L4; the
    // intersection of L9 and L4 is e16.
    auto literal = validate_witness(n, walk(n, "L1 e1 L2 e12 L5 e7 L7 e9 L9 e15 L4 e6 L8 e3 L1"));
    CHECK(literal.failed("adjacency"));
    CHECK(validate_witness(n, walk(n, "L1 e1 L2 e12 L5 e7 L7 e9 L9 e16 L4 e6 L8 e3 L1")).ok());
    CHECK(validate_witness(n, walk(n, "L1 e10 L4 e4 L7 e18 L8 e5 L9 e2 L1")).ok());
    CHECK(validate_witness(n, walk(n, "L1 e10 L4 e4 L7 e18 L8 e5 L9 e15 L3 e1 L1")).ok());

    auto t = ten_line();
    CHECK(validate_witness(t, walk(t, "L1 e1 L3 e17 L9 e5 L8 e21 L10 e12 L4 e13 L1")).failed("inducedness"));
    CHECK(validate_witness(t, walk(t, "L1 e15 L10 e11 L6 e16 L2 e5 L8 e18 L5 e7 L7 e14 L1")).ok());
    CHECK(validate_witness(t, walk(t, "L1 e1 L3 e19 L9 e5 L8 e21 L10 e10 L5 e8 L4 e4 L7 e14 L1")).failed("adjacency"));
    CHECK(validate_witness(t, walk(t, "L1 e1 L3 e17 L9 e5 L8 e21 L10 e10 L5 e8 L4 e4 L7 e14 L1")).ok());
    CHECK(validate_witness(t, walk(t, "L2 e10 L5 e18 L8 e19 L7 e14 L1 e13 L4 e12 L9 e17 L3 e11 L6 e16 L2")).ok());

    auto g = generic(3);
    CHECK(validate_witness(g, walk(g, "l1 p1,2 l2 p2,3 l3 p1,3 l1")).ok());
    CHECK(validate_witness(g, walk(g, "l1 p1,3 l2 p2,3 l3 p1,2 l1")).failed("adjacency"));
    CHECK(validate_witness(g, InducedCycleWitness{{0, 1}, {0, 1}}).failed("length"));
    CHECK(validate_witness(g, InducedCycleWitness{{0, 1, 7}, {0, 1, 2}}).failed("range"));
}

TEST_CASE("inducedness failure in a concurrent triple") {
    // Lines l1, l2 of near_pencil(5) meet in P, which also lies on l3.
    auto np = near_pencil(5);
    auto w = walk(np, "l1 P l2 p2,5 l5 p3,5 l3 P l1");
    auto r = validate_witness(np, w);
    CHECK_FALSE(r.ok());
    auto nested = walk(np, "l1 P l2 p2,5 l5 p1,5 l1");
    CHECK(validate_witness(np, nested).ok());
    auto with_third = walk(generic(4), "l1 p1,2 l2 p2,3 l3 p3,4 l4 p1,4 l1");
    CHECK(validate_witness(generic(4), with_third).ok());
}

TEST_CASE("canonical form") {
    InducedCycleWitness w{{3, 1, 2}, {10, 11, 12}};
    auto c = canonical_form(w);
    CHECK(c.lines.front() == 1);
    CHECK(c.lines[1] < c.lines.back());
    CHECK(canonical_form(c) == c);
}

TEST_CASE("existence queries") {
    CHECK(exists_cycle(near_pencil(6), 4).status == Status::absent);
    auto g4 = exists_cycle(generic(4), 4);
    REQUIRE(g4.status == Status::found);
    CHECK(validate_witness(generic(4), *g4.witness).ok());
    CHECK(exists_cycle(two_modular(5, 6), 5).status == Status::absent);
    CHECK_THROWS_AS(exists_cycle(generic(4), 2), BadLength);
    CHECK(exists_cycle(generic(4), 9).status == Status::absent);
    CHECK_THROWS_AS(exists_cycle(generic(65), 3), TooLarge);
}

TEST_CASE("longest cycles of the worked examples") {
    auto n = longest_cycle(nine_three());
    CHECK(n.kind == LongestResult::Kind::found);
    // Nine double points close up into a cycle through all nine lines.
    CHECK(n.length == 9);
    CHECK(validate_witness(nine_three(), *n.witness).ok());
    CHECK(longest_cycle(ten_line()).length == 9);
    CHECK(longest_cycle(hesse()).length == 6);
    CHECK(longest_cycle(mu4()).length == 4);
    CHECK(longest_cycle(generic(3)).length == 3);
    for (int k = 4; k <= 8; ++k) CHECK(longest_cycle(near_pencil(k)).length == 3);

    Arrangement pencil(Incidence{4, {{0, 1, 2, 3}}});
    CHECK(longest_cycle(pencil).kind == LongestResult::Kind::no_induced_cycle);
}

TEST_CASE("spectra") {
    auto s = spectrum(nine_three(), 9);
    CHECK(found_lengths(s) == std::set<int>{3, 4, 5, 6, 7, 9});
    CHECK(s.by_length.at(8).status == Status::absent);
    CHECK(s.longest_found() == 9);

    // The brute-force oracle finds no induced C18 in ceva(4) either.
    CHECK(found_lengths(spectrum(ceva(4), 9)) == std::set<int>{3, 4, 5, 6, 7, 8});
    CHECK(found_lengths(spectrum(ceva(5), 11)) == std::set<int>{3, 4, 5, 6, 7, 8, 9, 10, 11});
    CHECK(found_lengths(spectrum(supersolvable_mu3(5), 8)) == std::set<int>{3, 4, 5, 6, 8});
    auto a = spectrum(a_w_k(5, 0), 8);
    CHECK(found_lengths(a) == std::set<int>{3, 4, 6, 8});
    CHECK(a.by_length.at(5).status == Status::absent);
    CHECK(a.by_length.at(7).status == Status::absent);
    CHECK_THROWS_AS(spectrum(generic(4), 2), BadLength);
    for (const auto &[i, r] : spectrum(hesse(), 8).by_length)
        if (r.witness) CHECK(validate_witness(hesse(), *r.witness).ok());
}

TEST_CASE("budget exhaustion is never absent") {
    SearchOptions tiny{5, 1};
    auto r = exists_cycle(two_modular(5, 6), 9, tiny);
    CHECK(r.status == Status::unknown);
    auto l = longest_cycle(ten_line(), tiny);
    CHECK(l.kind == LongestResult::Kind::unknown);
    auto s = spectrum(ceva(4), 9, tiny);
    CHECK(s.has_unknown());
    for (const auto &[i, e] : s.by_length) CHECK(e.status != Status::absent);
}

TEST_CASE("determinism across runs and thread counts") {
    for (auto arr : {nine_three(), hesse(), ceva(4), a_w_k(6, 2)}) {
        auto serial = spectrum(arr, std::min(arr.line_count(), 12));
        auto again = spectrum(arr, std::min(arr.line_count(), 12));
        auto parallel = spectrum(arr, std::min(arr.line_count(), 12), {0, 4});
        CHECK(found_lengths(serial) == found_lengths(again));
        CHECK(found_lengths(serial) == found_lengths(parallel));
        for (const auto &[i, r] : serial.by_length) {
            CHECK(r.witness == again.by_length.at(i).witness);
            CHECK(r.witness == parallel.by_length.at(i).witness);
        }
        auto ls = longest_cycle(arr), lp = longest_cycle(arr, {0, 3});
        CHECK(ls.length == lp.length);
        CHECK(ls.witness == lp.witness);
    }
}

TEST_CASE("relabeling changes witnesses only by relabeling") {
    std::mt19937 rng(41);
    for (auto arr : {nine_three(), ten_line(), ceva(4), two_modular(4, 5)}) {
        auto lp = random_permutation(rng, arr.line_count());
        auto pp = random_permutation(rng, arr.point_count());
        auto moved = permute(arr, lp, pp);
        auto a = spectrum(arr, 9), b = spectrum(moved, 9);
        CHECK(found_lengths(a) == found_lengths(b));
        for (const auto &[i, r] : a.by_length) {
            if (!r.witness) continue;
            InducedCycleWitness image;
            for (int l : r.witness->lines) image.lines.push_back(lp[l]);
            for (int p : r.witness->points) image.points.push_back(pp[p]);
            CHECK(validate_witness(moved, image).ok());
        }
    }
}

TEST_CASE("found witnesses agree with the levi graph") {
    for (const auto &[name, arr] : small_builder_outputs()) {
        CAPTURE(name);
        auto levi = build_levi(arr);
        auto s = spectrum(arr, std::max(3, std::min(arr.line_count(), arr.point_count())));
        for (const auto &[i, r] : s.by_length) {
            if (!r.witness) continue;
            CHECK(validate_witness(arr, levi, *r.witness).ok());
            std::vector<int> verts;
            for (int t = 0; t < i; ++t) {
                verts.push_back(levi.line_vertex(LineId{r.witness->lines[t]}));
                verts.push_back(levi.point_vertex(PointId{r.witness->points[t]}));
            }
            CHECK(is_induced_cycle(levi.graph(), verts));
        }
    }
}

TEST_CASE("describe") {
    auto g = generic(3);
    CHECK(describe(g, walk(g, "l1 p1,2 l2 p2,3 l3 p1,3 l1")) == "l1 p1,2 l2 p2,3 l3 p1,3 l1");
}

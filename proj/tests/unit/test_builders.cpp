#include <doctest.h>

#include "../support.hpp"
#include "levicyc/builders.hpp"
#include "levicyc/errors.hpp"

using namespace levicyc;
using namespace levicyc::testing;

namespace {

std::vector<std::string> lines_of(const Arrangement &arr, const std::string &point) {
    std::vector<std::string> out;
    for (int l : arr.lines_through(find_point(arr, point))) out.push_back(arr.line_names()[l]);
    return out;
}

int per_line_sum(const Arrangement &arr, const std::string &line) {
    int sum = 0;
    for (int p : arr.points_on(find_line(arr, line))) sum += arr.multiplicity(PointId{p}) - 1;
    return sum;
}

}  // namespace

TEST_CASE("near pencil") {
    auto p = multiplicity_profile(near_pencil(5));
    CHECK(p.count(2) == 4);
    CHECK(p.count(4) == 1);
    auto p3 = multiplicity_profile(near_pencil(3));
    CHECK(p3.s == 3);
    CHECK(p3.count(2) == 3);
    auto n10 = near_pencil(10);
    CHECK(multiplicity_profile(n10).s == 10);
    CHECK(per_line_sum(n10, "l10") == 9);
    CHECK(n10.points_on(LineId{9}).size() == 9);
    CHECK_THROWS_AS(near_pencil(2), BadParam);
}

TEST_CASE("two modular points") {
    auto arr = two_modular(5, 6);
    auto p = multiplicity_profile(arr);
    CHECK(arr.line_count() == 10);
    CHECK(p.count(2) == 20);
    CHECK(p.count(5) == 1);
    CHECK(p.count(6) == 1);
    CHECK(10 + 15 + 20 == 45);

    // With a = 2 the first modular point is itself a double point and the
    // arrangement is a near pencil of four lines.
    auto small = multiplicity_profile(two_modular(2, 3));
    CHECK(small.count(2) == 3);
    CHECK(small.count(3) == 1);
    CHECK(small.s == 4);
    CHECK_THROWS_AS(two_modular(4, 4), BadParam);
    CHECK_THROWS_AS(two_modular(1, 4), BadParam);
}

TEST_CASE("generic") {
    CHECK(multiplicity_profile(generic(3)).s == 3);
    auto p = multiplicity_profile(generic(5));
    CHECK(p.s == 10);
    CHECK(p.count(2) == 10);
    for (int l = 0; l < 5; ++l) CHECK(generic(5).points_on(LineId{l}).size() == 4);
    CHECK_THROWS_AS(generic(1), BadParam);
}

TEST_CASE("ceva") {
    auto arr = ceva(4);
    auto p = multiplicity_profile(arr);
    CHECK(arr.line_count() == 12);
    CHECK(p.count(3) == 16);
    CHECK(p.count(4) == 3);
    CHECK(p.s == 19);
    CHECK(lines_of(arr, "T(2,2)") == std::vector<std::string>{"XY0", "YZ2", "XZ2"});
    CHECK(per_line_sum(arr, "XZ0") == 11);
    CHECK(per_line_sum(arr, "XZ0") == (4 - 1) + 4 * 2);
    CHECK_THROWS_AS(ceva(2), BadParam);
}

TEST_CASE("hesse") {
    auto arr = hesse();
    auto p = multiplicity_profile(arr);
    CHECK(p.count(2) == 12);
    CHECK(p.count(4) == 9);
    CHECK(p.s == 21);
    CHECK(lines_of(arr, "p1") == std::vector<std::string>{"l1", "l4", "l7", "l10"});
    for (int l = 0; l < 12; ++l) {
        int quads = 0, doubles = 0;
        for (int q : arr.points_on(LineId{l})) (arr.multiplicity(PointId{q}) == 4 ? quads : doubles)++;
        CHECK(quads == 3);
        CHECK(doubles == 2);
    }
    auto d = arr.meet(LineId{0}, LineId{1});
    CHECK(arr.multiplicity(d) == 2);
}

TEST_CASE("nine three") {
    auto arr = nine_three();
    auto p = multiplicity_profile(arr);
    CHECK(p.count(3) == 9);
    CHECK(p.count(2) == 9);
    CHECK(p.s == 18);
    CHECK(lines_of(arr, "e1") == std::vector<std::string>{"L1", "L2", "L3"});
    CHECK(lines_of(arr, "e10") == std::vector<std::string>{"L1", "L4"});
    CHECK(lines_of(arr, "e18") == std::vector<std::string>{"L7", "L8"});
    CHECK(9 * 3 + 9 == 36);
    CHECK(validate_arrangement(arr).ok());
}

TEST_CASE("ten line") {
    auto arr = ten_line();
    auto p = multiplicity_profile(arr);
    CHECK(p.count(2) == 9);
    CHECK(p.count(3) == 12);
    CHECK(p.s == 21);
    CHECK(lines_of(arr, "e10") == std::vector<std::string>{"L2", "L5", "L10"});
    CHECK(lines_of(arr, "e21") == std::vector<std::string>{"L8", "L10"});
    CHECK(per_line_sum(arr, "L10") == 3 * 2 + 3 * 1);
}

TEST_CASE("supersolvable mu3") {
    auto arr = supersolvable_mu3(5);
    auto p = multiplicity_profile(arr);
    CHECK(arr.line_count() == 12);
    CHECK(p.count(2) == 9);
    CHECK(p.count(3) == 9);
    CHECK(p.count(5) == 3);
    CHECK(per_line_sum(arr, "Lz") == 2 * (5 - 1) + 3);

    auto m4 = supersolvable_mu3(4);
    CHECK(m4.line_count() == 9);
    CHECK(multiplicity_profile(m4).count(3) == 4);
    CHECK(multiplicity_profile(m4).count(4) == 3);
    CHECK(multiplicity_profile(m4).s == 13);
    CHECK_THROWS_AS(supersolvable_mu3(3), BadParam);
}

TEST_CASE("supersolvable mu3 keeps the ceva triples") {
    for (int m = 5; m <= 7; ++m) {
        auto ss = supersolvable_mu3(m);
        auto cv = ceva(m - 2);
        std::vector<int> ceva_lines;
        for (int l = 0; l < cv.line_count(); ++l) ceva_lines.push_back(l);
        auto sub = restrict_to_lines(ss, ceva_lines);
        CHECK(sub.same_incidence(cv));
    }
}

TEST_CASE("mu4") {
    auto p = multiplicity_profile(mu4());
    CHECK(p.count(2) == 3);
    CHECK(p.count(3) == 4);
    CHECK(modular_points(mu4()).size() >= 1);
}

TEST_CASE("a_w_k") {
    CHECK(a_w_k(5, 0).line_count() == 9);
    auto one = a_w_k(5, 1, {1});
    CHECK(one.line_count() == 10);
    CHECK(one.multiplicity(find_point(one, "(1,0,0)")) == 3);

    auto arr = a_w_k(6, 2);
    const int n = 4, k = 2;
    CHECK(arr.line_count() == 2 * 6 - 1 + k);
    CHECK(per_line_sum(arr, "XZ0") == 2 * n + 2 + k);
    CHECK(2 * n + 2 + k == (n + 1) + 1 + 2 * k + (n - k));
    auto p = multiplicity_profile(arr);
    CHECK(p.count(6) == 2);
    CHECK(p.count(3) == n * k);
    CHECK(p.count(2) == n * (n - k) + n + n + k);
    CHECK(p.count(4) == 1);
    CHECK(arr.multiplicity(find_point(arr, "(1,0,0)")) == 2 + k);

    CHECK(default_exponents(3) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(a_w_k(4, 0), BadParam);
    CHECK_THROWS_AS(a_w_k(5, 1, {3}), ExponentOutOfRange);
    CHECK_THROWS_AS(a_w_k(6, 2, {1, 1}), DuplicateExponent);
    CHECK_THROWS_AS(a_w_k(5, 3), BadParam);
}

TEST_CASE("build_family dispatches every family") {
    CHECK(build_family({"ceva", {{"n", 4}}, {}}).same_incidence(ceva(4)));
    CHECK(build_family({"a_w_k", {{"m", 6}, {"k", 2}}, {}}).same_incidence(a_w_k(6, 2)));
    CHECK(build_family({"hesse", {}, {}}).family()->name == "hesse");
    CHECK_THROWS_AS(build_family({"ceva", {}, {}}), BadParam);
    CHECK_THROWS_AS(build_family({"nope", {}, {}}), BadParam);
    CHECK(family_names().size() == 10);
}

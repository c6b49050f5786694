#include <doctest.h>

#include <random>

#include "levicyc/builders.hpp"
#include "levicyc/cyclotomic.hpp"
#include "levicyc/errors.hpp"
#include "levicyc/polynomial.hpp"
#include "levicyc/projective.hpp"
#include "levicyc/realization.hpp"

using namespace levicyc;

namespace {

CycloNumber e(unsigned n, long long pow = 1) { return CycloNumber::root_power(n, pow); }
CycloNumber q(unsigned n, long long v) { return CycloNumber(n, Rational(v)); }

CycloNumber random_cyclo(std::mt19937 &rng, unsigned n) {
    std::uniform_int_distribution<int> coef(-5, 5);
    CycloNumber out(n);
    for (unsigned d = 0; d < euler_phi(n); ++d) out += q(n, coef(rng)) * e(n, d);
    return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
    CHECK(cyclotomic_polynomial(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
    for (unsigned n = 1; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(degree(to_poly(cyclotomic_polynomial(n))) == static_cast<int>(euler_phi(n)));
        CHECK(cyclotomic_polynomial(n).back() == 1);
    }
}

TEST_CASE("polynomial division and inverse") {
    Poly a{Rational(-1), Rational(0), Rational(0), Rational(1)};  // x^3 - 1
    Poly b{Rational(-1), Rational(1)};                             // x - 1
    auto [quot, rem] = poly_divmod(a, b);
    CHECK(quot == Poly{Rational(1), Rational(1), Rational(1)});
    CHECK(degree(rem) == -1);
    Poly m = to_poly(cyclotomic_polynomial(4));
    Poly x{Rational(0), Rational(1)};
    auto inv = poly_inverse_mod(x, m);
    CHECK(inv == Poly{Rational(0), Rational(-1)});
}

TEST_CASE("cyclotomic arithmetic examples") {
    CHECK((e(4) * e(4, 3)).is_one());
    CHECK((e(4) + q(4, 1)) * (e(4) - q(4, 1)) == q(4, -2));
    CHECK(q(4, 1) / e(4) == -e(4));
    CHECK(cyclo_arith(e(4), e(4), CycloOp::add) == q(4, 2) * e(4));
    CHECK_THROWS_AS(cyclo_arith(e(4), CycloNumber(4), CycloOp::div), DivisionByZero);
    CHECK_THROWS_AS(e(4) + e(5), ConductorMismatch);
    CHECK(e(6, 6).is_one());
    CHECK(e(6, -1) == e(6, 5));
}

TEST_CASE("cyclotomic polynomial vanishes at the root") {
    for (unsigned n = 1; n <= 12; ++n) {
        CAPTURE(n);
        const auto &phi = cyclotomic_polynomial(n);
        CycloNumber value(n);
        for (size_t d = 0; d < phi.size(); ++d) value += CycloNumber(n, Rational(phi[d])) * e(n, d);
        CHECK(value.is_zero());
    }
}

TEST_CASE("inverse round trip for random elements") {
    std::mt19937 rng(7);
    for (unsigned n = 3; n <= 12; ++n) {
        CAPTURE(n);
        int tested = 0;
        while (tested < 200) {
            auto a = random_cyclo(rng, n);
            if (a.is_zero()) continue;
            ++tested;
            REQUIRE((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("cyclotomic parse and print round trip") {
    CHECK(CycloNumber::parse(1, "-3/2") == CycloNumber(1, Rational(-3) / 2));
    CHECK(CycloNumber::parse(4, "e^2 + 1").is_zero());
    CHECK(CycloNumber::parse(5, "2e - 1/3e^3") == q(5, 2) * e(5) - CycloNumber(5, Rational(1) / 3) * e(5, 3));
    std::mt19937 rng(11);
    for (unsigned n : {1u, 3u, 5u, 8u, 12u}) {
        auto a = random_cyclo(rng, n);
        CHECK(CycloNumber::parse(n, a.str()) == a);
    }
    CHECK_THROWS_AS(CycloNumber::parse(4, "e^^2"), ParseError);
}

TEST_CASE("meet and line_through") {
    CHECK(meet(rational_line(1, 0, 0), rational_line(0, 1, 0)) == rational_point(0, 0, 1));
    CHECK(meet(rational_line(1, 0, -1), rational_line(1, 0, -2)) == rational_point(0, 1, 0));
    CHECK_THROWS_AS(meet(rational_line(1, 2, 3), rational_line(2, 4, 6)), IdenticalLines);
    CHECK(line_through(rational_point(1, 0, 0), rational_point(0, 1, 0)) == rational_line(0, 0, 1));
    CHECK(line_through(rational_point(1, 1, 0), rational_point(0, 0, 1)) == rational_line(1, -1, 0));
    CHECK_THROWS_AS(line_through(rational_point(1, 2, 3), rational_point(-2, -4, -6)), IdenticalPoints);

    const unsigned n = 4;
    ProjPoint p(e(n), q(n, 1), q(n, 0));
    ProjLine l = line_through(p, ProjPoint(q(n, 0), q(n, 0), q(n, 1)));
    CHECK(l == ProjLine(q(n, 1), -e(n), q(n, 0)));
}

TEST_CASE("meet over Q(e) with n = 5") {
    const unsigned n = 5;
    for (int j = 0; j < n; ++j) {
        ProjLine a(q(n, 1), -e(n), q(n, 0));     // x - e y
        ProjLine b(q(n, 0), q(n, 1), -e(n, j));  // y - e^j z
        CHECK(meet(a, b) == ProjPoint(e(n, 1 + j), e(n, j), q(n, 1)));
    }
}

TEST_CASE("incidence invariants of random exact lines") {
    std::mt19937 rng(3);
    const unsigned n = 6;
    for (int t = 0; t < 40; ++t) {
        ProjLine l1(random_cyclo(rng, n), random_cyclo(rng, n), random_cyclo(rng, n));
        ProjLine l2(random_cyclo(rng, n), random_cyclo(rng, n), random_cyclo(rng, n));
        ProjLine l3(random_cyclo(rng, n), random_cyclo(rng, n), random_cyclo(rng, n));
        if (l1 == l2 || l1 == l3 || l2 == l3) continue;
        auto p = meet(l1, l2), r = meet(l1, l3);
        CHECK(incident(p, l1));
        CHECK(incident(p, l2));
        if (p != r) CHECK(line_through(p, r) == l1);
    }
}

TEST_CASE("canonical representatives") {
    CHECK(rational_point(2, 4, 6) == rational_point(1, 2, 3));
    CHECK(rational_point(0, -3, 6) == rational_point(0, 1, -2));
    CHECK_THROWS(rational_point(0, 0, 0));
    CHECK(rational_point(0, 1, -2).str() == "(0, 1, -2)");
}

TEST_CASE("arrangement_from_lines") {
    auto m4 = arrangement_from_lines(mu4_lines());
    auto prof = multiplicity_profile(m4);
    CHECK(prof.count(2) == 3);
    CHECK(prof.count(3) == 4);
    CHECK(prof.s == 7);
    CHECK(validate_arrangement(m4).ok());

    auto g3 = arrangement_from_lines({rational_line(1, 0, 0), rational_line(0, 1, 0), rational_line(0, 0, 1)});
    CHECK(multiplicity_profile(g3).count(2) == 3);

    CHECK_THROWS_AS(arrangement_from_lines({rational_line(1, 0, 0), rational_line(2, 0, 0)}), DuplicateLine);
}

TEST_CASE("coordinate families reproduce the combinatorial builders") {
    for (int n : {3, 4, 5, 6}) {
        CAPTURE(n);
        auto geo = arrangement_from_lines(ceva_lines(n));
        CHECK(same_up_to_point_order(geo, ceva(n)));
        CHECK(attach_coordinates(ceva(n), ceva_lines(n)).coordinates().has_value());
    }
    for (int m : {4, 5, 6})
        CHECK(same_up_to_point_order(arrangement_from_lines(supersolvable_mu3_lines(m)), supersolvable_mu3(m)));
    CHECK(same_up_to_point_order(arrangement_from_lines(mu4_lines()), mu4()));
    CHECK(same_up_to_point_order(arrangement_from_lines(a_w_k_lines(5, 0)), a_w_k(5, 0)));
    CHECK(same_up_to_point_order(arrangement_from_lines(a_w_k_lines(6, 2)), a_w_k(6, 2)));
    CHECK(same_up_to_point_order(arrangement_from_lines(a_w_k_lines(7, 2, {0, 3})), a_w_k(7, 2, {0, 3})));
}

TEST_CASE("ceva triple T(2,2) by direct substitution") {
    const unsigned n = 4;
    ProjPoint t(e(n, 2), e(n, 2), q(n, 1));
    auto lines = ceva_lines(n);
    CHECK(incident(t, lines[0]));          // XY0
    CHECK(incident(t, lines[n + 2]));      // YZ2
    CHECK(incident(t, lines[2 * n + 2]));  // XZ2
    int count = 0;
    for (const auto &l : lines) count += incident(t, l);
    CHECK(count == 3);
}

TEST_CASE("attach_coordinates rejects geometry that does not match") {
    auto lines = ceva_lines(4);
    std::swap(lines[0], lines[1]);
    CHECK_THROWS_AS(attach_coordinates(ceva(4), lines), InvalidArrangement);
}

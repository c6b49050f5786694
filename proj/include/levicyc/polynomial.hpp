#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace levicyc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3/2", "+4". Throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational &value);

// Dense univariate polynomials, coefficient of x^i at index i. The zero
// polynomial is the empty vector; every other value has a nonzero leading
// coefficient.
using Poly = std::vector<Rational>;
using IntPoly = std::vector<BigInt>;

void trim(Poly &p);
int degree(const Poly &p);  // -1 for zero

Poly poly_add(const Poly &a, const Poly &b);
Poly poly_sub(const Poly &a, const Poly &b);
Poly poly_mul(const Poly &a, const Poly &b);
Poly poly_scale(const Poly &a, const Rational &c);

/// Quotient and remainder of a by b. Throws DivisionByZero if b is zero.
std::pair<Poly, Poly> poly_divmod(const Poly &a, const Poly &b);

/// Returns u with u*a = 1 (mod m). Requires gcd(a, m) = 1.
Poly poly_inverse_mod(const Poly &a, const Poly &m);

Poly to_poly(const IntPoly &p);

unsigned euler_phi(unsigned n);

/// The n-th cyclotomic polynomial, obtained by exact division of x^n - 1 by
/// Phi_d for every proper divisor d of n. Results are cached.
const IntPoly &cyclotomic_polynomial(unsigned n);

std::string to_string(const IntPoly &p, char var = 'x');

}  // namespace levicyc

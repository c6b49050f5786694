#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "levicyc/polynomial.hpp"

namespace levicyc {

/// An element of the cyclotomic field Q(e), e a primitive n-th root of
/// unity, stored as a polynomial in e of degree < phi(n) reduced modulo
/// Phi_n. The rationals are the conductor-1 field.
///
/// Equality and the zero test compare reduced coefficient vectors, so they
/// are exact. Arithmetic between different conductors throws
/// ConductorMismatch.
class CycloNumber {
   public:
    explicit CycloNumber(unsigned conductor = 1);
    CycloNumber(unsigned conductor, const Rational &value);

    /// e^power, for any integer power (negative allowed).
    static CycloNumber root_power(unsigned conductor, long long power);

    /// Parses sums of terms such as "e^2+1", "-3/2*e", "1/2 e^3 - 4".
    static CycloNumber parse(unsigned conductor, std::string_view text);

    unsigned conductor() const { return n_; }
    const std::vector<Rational> &coefficients() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;

    CycloNumber operator-() const;
    CycloNumber &operator+=(const CycloNumber &o);
    CycloNumber &operator-=(const CycloNumber &o);
    CycloNumber &operator*=(const CycloNumber &o);
    CycloNumber &operator/=(const CycloNumber &o);

    /// Throws DivisionByZero for zero.
    CycloNumber inverse() const;

    friend CycloNumber operator+(CycloNumber a, const CycloNumber &b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber &b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber &b) { return a *= b; }
    friend CycloNumber operator/(CycloNumber a, const CycloNumber &b) { return a /= b; }

    friend bool operator==(const CycloNumber &a, const CycloNumber &b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycloNumber &a, const CycloNumber &b) { return !(a == b); }
    // Arbitrary total order, used for sorting and map keys only.
    friend bool operator<(const CycloNumber &a, const CycloNumber &b);

    /// Canonical text, highest power first, e.g. "e^2 - 3/2*e + 1".
    std::string str() const;

   private:
    void check_same_field(const CycloNumber &o) const;
    static std::vector<Rational> reduce(unsigned n, Poly p);

    unsigned n_;
    std::vector<Rational> coeffs_;  // always length phi(n_)
};

enum class CycloOp { add, sub, mul, div };

CycloNumber cyclo_arith(const CycloNumber &a, const CycloNumber &b, CycloOp op);

}  // namespace levicyc

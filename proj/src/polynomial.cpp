#include "levicyc/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "levicyc/errors.hpp"

namespace levicyc {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto strip = [](std::string &str) {
        auto b = str.find_first_not_of(" \t");
        auto e = str.find_last_not_of(" \t");
        str = b == std::string::npos ? std::string{} : str.substr(b, e - b + 1);
    };
    strip(s);
    if (s.empty()) throw ParseError("empty rational");
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits = [](const std::string &d) {
        return !d.empty() && d.find_first_not_of("0123456789") == std::string::npos;
    };
    if (!digits(num) || !digits(den)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    BigInt n(num), d(den);
    if (d == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational &value) { return value.str(); }

void trim(Poly &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly &p) { return static_cast<int>(p.size()) - 1; }

Poly poly_add(const Poly &a, const Poly &b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly poly_sub(const Poly &a, const Poly &b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly poly_mul(const Poly &a, const Poly &b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly poly_scale(const Poly &a, const Rational &c) {
    Poly r(a);
    for (auto &x : r) x *= c;
    trim(r);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly &a, const Poly &b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    Poly rem(a);
    trim(rem);
    if (degree(rem) < degree(b)) return {Poly{}, rem};
    Poly quot(rem.size() - b.size() + 1);
    const Rational &lead = b.back();
    while (degree(rem) >= degree(b)) {
        size_t shift = rem.size() - b.size();
        Rational c = rem.back() / lead;
        quot[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
        trim(rem);
    }
    trim(quot);
    return {quot, rem};
}

Poly poly_inverse_mod(const Poly &a, const Poly &m) {
    // Extended Euclid on (m, a), tracking only the cofactor of a.
    Poly r0 = m, r1 = poly_divmod(a, m).second;
    Poly s0{}, s1{Rational(1)};
    if (r1.empty()) throw DivisionByZero("inverse of zero");
    while (degree(r1) > 0) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        if (r1.empty()) throw DivisionByZero("element is not invertible modulo the given polynomial");
    }
    // r1 is a nonzero constant c with s1*a = c (mod m).
    Poly inv = poly_scale(s1, Rational(1) / r1[0]);
    return poly_divmod(inv, m).second;
}

Poly to_poly(const IntPoly &p) {
    Poly r;
    r.reserve(p.size());
    for (const auto &c : p) r.emplace_back(c);
    trim(r);
    return r;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const IntPoly &cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw BadParam("cyclotomic polynomial needs n >= 1");
    static std::mutex mutex;
    static std::map<unsigned, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    Poly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = poly_divmod(num, to_poly(cyclotomic_polynomial(d)));
        if (!r.empty()) throw Error("cyclotomic division left a remainder");
        num = std::move(q);
    }
    IntPoly result;
    for (const auto &c : num) {
        if (denominator(c) != 1) throw Error("cyclotomic polynomial has a non-integer coefficient");
        result.push_back(numerator(c));
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(result)).first->second;
}

std::string to_string(const IntPoly &p, char var) {
    std::ostringstream out;
    bool first = true;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        const BigInt &c = p[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) out << mag;
        if (i >= 1) out << var;
        if (i >= 2) out << '^' << i;
    }
    if (first) out << '0';
    return out.str();
}

}  // namespace levicyc

#include "levicyc/cyclotomic.hpp"

#include <cctype>
#include <sstream>

#include "levicyc/errors.hpp"

namespace levicyc {

namespace {

const Poly &modulus(unsigned n) {
    // to_poly of a cached IntPoly; cached again here to avoid repeated conversion.
    static thread_local std::vector<Poly> cache;
    if (cache.size() <= n) cache.resize(n + 1);
    if (cache[n].empty()) cache[n] = to_poly(cyclotomic_polynomial(n));
    return cache[n];
}

}  // namespace

CycloNumber::CycloNumber(unsigned conductor) : n_(conductor) {
    if (conductor == 0) throw BadParam("conductor must be >= 1");
    coeffs_.assign(euler_phi(conductor), Rational(0));
}

CycloNumber::CycloNumber(unsigned conductor, const Rational &value) : CycloNumber(conductor) {
    coeffs_[0] = value;
}

std::vector<Rational> CycloNumber::reduce(unsigned n, Poly p) {
    trim(p);
    const Poly &m = modulus(n);
    if (degree(p) >= degree(m)) p = poly_divmod(p, m).second;
    p.resize(euler_phi(n), Rational(0));
    return p;
}

CycloNumber CycloNumber::root_power(unsigned conductor, long long power) {
    CycloNumber r(conductor);
    long long e = power % static_cast<long long>(conductor);
    if (e < 0) e += conductor;
    Poly p(static_cast<size_t>(e) + 1);
    p[e] = 1;
    r.coeffs_ = reduce(conductor, std::move(p));
    return r;
}

bool CycloNumber::is_zero() const {
    for (const auto &c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNumber::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

void CycloNumber::check_same_field(const CycloNumber &o) const {
    if (n_ != o.n_)
        throw ConductorMismatch("conductor " + std::to_string(n_) + " vs " + std::to_string(o.n_));
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r(*this);
    for (auto &c : r.coeffs_) c = -c;
    return r;
}

CycloNumber &CycloNumber::operator+=(const CycloNumber &o) {
    check_same_field(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloNumber &CycloNumber::operator-=(const CycloNumber &o) {
    check_same_field(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycloNumber &CycloNumber::operator*=(const CycloNumber &o) {
    check_same_field(o);
    coeffs_ = reduce(n_, poly_mul(coeffs_, o.coeffs_));
    return *this;
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(e_" + std::to_string(n_) + ")");
    Poly a(coeffs_);
    trim(a);
    CycloNumber r(n_);
    r.coeffs_ = reduce(n_, poly_inverse_mod(a, modulus(n_)));
    return r;
}

CycloNumber &CycloNumber::operator/=(const CycloNumber &o) {
    check_same_field(o);
    return *this *= o.inverse();
}

bool operator<(const CycloNumber &a, const CycloNumber &b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
}

std::string CycloNumber::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const Rational &c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << '*';
            out << 'e';
            if (i >= 2) out << '^' << i;
        }
    }
    if (first) out << '0';
    return out.str();
}

CycloNumber CycloNumber::parse(unsigned conductor, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty field element");

    // Split into signed terms at top-level '+'/'-' (a sign directly after '^'
    // belongs to the exponent).
    std::vector<std::string> terms;
    std::string cur;
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if ((ch == '+' || ch == '-') && i > 0 && s[i - 1] != '^') {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(ch);
    }
    terms.push_back(cur);

    CycloNumber total(conductor);
    for (const auto &raw : terms) {
        std::string term = raw;
        bool negative = false;
        if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            negative = term[0] == '-';
            term.erase(0, 1);
        }
        if (term.empty()) throw ParseError("dangling sign in '" + std::string(text) + "'");
        auto epos = term.find('e');
        Rational coef(1);
        long long power = 0;
        if (epos == std::string::npos) {
            coef = parse_rational(term);
        } else {
            std::string c = term.substr(0, epos);
            if (!c.empty() && c.back() == '*') c.pop_back();
            if (!c.empty()) coef = parse_rational(c);
            std::string rest = term.substr(epos + 1);
            if (rest.empty()) {
                power = 1;
            } else if (rest[0] == '^' && rest.size() > 1) {
                try {
                    size_t used = 0;
                    power = std::stoll(rest.substr(1), &used);
                    if (used != rest.size() - 1) throw ParseError("bad exponent");
                } catch (const std::logic_error &) {
                    throw ParseError("bad exponent in '" + std::string(text) + "'");
                }
            } else {
                throw ParseError("malformed term '" + raw + "'");
            }
        }
        CycloNumber t = root_power(conductor, power) * CycloNumber(conductor, coef);
        if (negative) t = -t;
        total += t;
    }
    return total;
}

CycloNumber cyclo_arith(const CycloNumber &a, const CycloNumber &b, CycloOp op) {
    switch (op) {
        case CycloOp::add:
            return a + b;
        case CycloOp::sub:
            return a - b;
        case CycloOp::mul:
            return a * b;
        case CycloOp::div:
            return a / b;
    }
    throw BadParam("unknown operation");
}

}  // namespace levicyc

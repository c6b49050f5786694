#include "levicyc/projective.hpp"

#include "levicyc/errors.hpp"

namespace levicyc {

namespace {

using Triple = std::array<CycloNumber, 3>;

Triple cross(const Triple &a, const Triple &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool all_zero(const Triple &t) { return t[0].is_zero() && t[1].is_zero() && t[2].is_zero(); }

template <class Tag>
Triple coords(const Homogeneous<Tag> &h) {
    return {h[0], h[1], h[2]};
}

}  // namespace

template <class Tag>
Homogeneous<Tag>::Homogeneous(CycloNumber x, CycloNumber y, CycloNumber z) : c_{std::move(x), std::move(y), std::move(z)} {
    if (c_[0].conductor() != c_[1].conductor() || c_[0].conductor() != c_[2].conductor())
        throw ConductorMismatch("homogeneous coordinates from different fields");
    int lead = 0;
    while (lead < 3 && c_[lead].is_zero()) ++lead;
    if (lead == 3) throw BadParam("all homogeneous coordinates are zero");
    if (!c_[lead].is_one()) {
        CycloNumber inv = c_[lead].inverse();
        for (auto &v : c_) v *= inv;
    }
}

template <class Tag>
std::string Homogeneous<Tag>::str() const {
    return "(" + c_[0].str() + ", " + c_[1].str() + ", " + c_[2].str() + ")";
}

template class Homogeneous<PointTag>;
template class Homogeneous<LineTag>;

ProjPoint rational_point(long long x, long long y, long long z) {
    return {CycloNumber(1, Rational(x)), CycloNumber(1, Rational(y)), CycloNumber(1, Rational(z))};
}

ProjLine rational_line(long long a, long long b, long long c) {
    return {CycloNumber(1, Rational(a)), CycloNumber(1, Rational(b)), CycloNumber(1, Rational(c))};
}

bool incident(const ProjPoint &p, const ProjLine &l) {
    return (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]).is_zero();
}

ProjPoint meet(const ProjLine &l1, const ProjLine &l2) {
    Triple t = cross(coords(l1), coords(l2));
    if (all_zero(t)) throw IdenticalLines("lines " + l1.str() + " and " + l2.str() + " coincide");
    return {t[0], t[1], t[2]};
}

ProjLine line_through(const ProjPoint &p1, const ProjPoint &p2) {
    Triple t = cross(coords(p1), coords(p2));
    if (all_zero(t)) throw IdenticalPoints("points " + p1.str() + " and " + p2.str() + " coincide");
    return {t[0], t[1], t[2]};
}

}  // namespace levicyc

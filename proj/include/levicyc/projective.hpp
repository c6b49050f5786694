#pragma once

#include <array>
#include <string>

#include "levicyc/cyclotomic.hpp"

namespace levicyc {

struct PointTag {};
struct LineTag {};

/// Three homogeneous coordinates over a single cyclotomic field, kept in
/// canonical form: the first nonzero coordinate is 1. Two values are the same
/// projective object iff they compare equal.
///
/// For lines the coordinates (a, b, c) stand for a*x + b*y + c*z = 0.
template <class Tag>
class Homogeneous {
   public:
    Homogeneous(CycloNumber x, CycloNumber y, CycloNumber z);

    const CycloNumber &operator[](int i) const { return c_[i]; }
    unsigned conductor() const { return c_[0].conductor(); }
    std::string str() const;

    friend bool operator==(const Homogeneous &a, const Homogeneous &b) { return a.c_ == b.c_; }
    friend bool operator!=(const Homogeneous &a, const Homogeneous &b) { return !(a == b); }
    friend bool operator<(const Homogeneous &a, const Homogeneous &b) { return a.c_ < b.c_; }

   private:
    std::array<CycloNumber, 3> c_;
};

using ProjPoint = Homogeneous<PointTag>;
using ProjLine = Homogeneous<LineTag>;

/// Convenience constructors over Q (conductor 1).
ProjPoint rational_point(long long x, long long y, long long z);
ProjLine rational_line(long long a, long long b, long long c);

bool incident(const ProjPoint &p, const ProjLine &l);

/// The common point of two lines. Throws IdenticalLines if they coincide.
ProjPoint meet(const ProjLine &l1, const ProjLine &l2);

/// The line through two points. Throws IdenticalPoints if they coincide.
ProjLine line_through(const ProjPoint &p1, const ProjPoint &p2);

extern template class Homogeneous<PointTag>;
extern template class Homogeneous<LineTag>;

}  // namespace levicyc

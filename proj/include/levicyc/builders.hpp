#pragma once

#include <string>
#include <vector>

#include "levicyc/arrangement.hpp"

namespace levicyc {

// Every builder attaches FamilyInfo and fixes the order of lines and points,
// so witnesses written against these indices stay valid.

/// Lines 0..k-2 through point 0; line k-1 meets line i in point i+1.
Arrangement near_pencil(int k);

/// Line 0 is shared; lines 1..a-1 pass through p1 (point 0), lines
/// a..a+b-2 through p2 (point 1). Points 2.. are the doubles A_i x B_j,
/// row-major in (i, j).
Arrangement two_modular(int a, int b);

/// One double point per pair of lines, pairs in lexicographic order.
Arrangement generic(int k);

/// Lines XY_i (i), YZ_j (n+j), XZ_i (2n+i). Point i*n+j is T(i,j) on
/// XY_{i-j}, YZ_j, XZ_i; then N_xy, N_yz, N_xz. n = 3 is accepted even
/// though the triples and the n-fold points then have the same multiplicity.
Arrangement ceva(int n);

/// 12 lines l1..l12; points p1..p9 (4-fold) then the 12 doubles.
Arrangement hesse();

/// Lines L1..L9; points e1..e18 at indices 0..17.
Arrangement nine_three();

/// Lines L1..L10; points e1..e21 at indices 0..20.
Arrangement ten_line();

/// n = m-2. Ceva lines as in ceva(n), then Lx, Ly, Lz. Points: the n^2
/// triples, the m-fold points (0,0,1), (1,0,0), (0,1,0), then the doubles
/// Lz x XY_i, Lx x YZ_i, Ly x XZ_i.
Arrangement supersolvable_mu3(int m);

/// The six lines x, y, z, x-y, x-z, y-z named Lx, Ly, Lz, Lxy, Lxz, Lyz,
/// with points p1..p7 = (1,0,0), (0,1,0), (0,0,1), (1,1,0), (1,0,1),
/// (0,1,1), (1,1,1).
Arrangement mu4();

/// Default exponents {1, ..., k}.
std::vector<int> default_exponents(int k);

/// Throws BadParam, ExponentOutOfRange or DuplicateExponent.
void check_a_w_k_params(int m, int k, const std::vector<int> &chosen);

/// n = m-2. Lines XY_i (i), XZ_i (n+i), YZ for each chosen exponent
/// (2n+j), then Lx, Ly, Lz. Points: (0,0,1), (0,1,0), (1,0,0); for each
/// i and each j in 0..n-1 the triple T(i,j) if j is chosen, otherwise the
/// double XY_{i-j} x XZ_i; then Lz x XY_i, Ly x XZ_i, Lx x YZ_j.
Arrangement a_w_k(int m, int k, std::vector<int> chosen = {});

/// Builds the family described by info (name plus params) and attaches it.
Arrangement build_family(const FamilyInfo &info);

/// Family names accepted by build_family.
const std::vector<std::string> &family_names();

/// Index of the line or point with the given name; throws BadParam.
LineId find_line(const Arrangement &arr, const std::string &name);
PointId find_point(const Arrangement &arr, const std::string &name);

}  // namespace levicyc

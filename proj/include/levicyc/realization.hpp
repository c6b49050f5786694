#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levicyc/arrangement.hpp"
#include "levicyc/projective.hpp"

namespace levicyc {

/// Computes all pairwise meets exactly, merges equal points and returns the
/// arrangement with coordinates attached. Points appear in order of the
/// first line pair (lexicographic) producing them. Throws DuplicateLine if
/// two lines coincide.
Arrangement arrangement_from_lines(const std::vector<ProjLine> &lines, std::vector<std::string> line_names = {});

/// Linear factors of (x^n - y^n)(y^n - z^n)(x^n - z^n) over Q(e), e^n = 1,
/// in the line order of ceva(n).
std::vector<ProjLine> ceva_lines(int n);

/// ceva_lines(m-2) followed by x, y, z, in the line order of
/// supersolvable_mu3(m).
std::vector<ProjLine> supersolvable_mu3_lines(int m);

/// x, y, z, x-y, x-z, y-z.
std::vector<ProjLine> mu4_lines();

/// Linear factors of xyz(x^n - y^n)(x^n - z^n) prod (y - e^j z), n = m-2,
/// in the line order of a_w_k(m, k, chosen).
std::vector<ProjLine> a_w_k_lines(int m, int k, std::vector<int> chosen = {});

/// Coordinate lines for families that have them (ceva, supersolvable_mu3,
/// mu4, a_w_k), in builder line order; nullopt otherwise.
std::optional<std::vector<ProjLine>> family_lines(const FamilyInfo &family);

/// Attaches coordinates to a combinatorial arrangement: point p gets the
/// meet of the first two lines through it. Throws InvalidArrangement if
/// the geometry does not reproduce the incidence exactly.
Arrangement attach_coordinates(const Arrangement &arr, const std::vector<ProjLine> &lines);

/// True if both have the same k and the same multiset of point line-sets,
/// i.e. they agree up to the order of points.
bool same_up_to_point_order(const Arrangement &a, const Arrangement &b);

}  // namespace levicyc

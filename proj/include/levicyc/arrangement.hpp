#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "levicyc/projective.hpp"
#include "levicyc/report.hpp"

namespace levicyc {

struct LineId {
    int value;
    friend auto operator<=>(const LineId &, const LineId &) = default;
};

struct PointId {
    int value;
    friend auto operator<=>(const PointId &, const PointId &) = default;
};

/// Raw, unvalidated incidence data: for every singular point, the indices of
/// the lines through it.
struct Incidence {
    int line_count = 0;
    std::vector<std::vector<int>> points;
};

/// Exact coordinates for every line and point, all over one field.
struct Coordinates {
    unsigned conductor = 1;
    std::vector<ProjLine> lines;
    std::vector<ProjPoint> points;
};

/// Which builder produced an arrangement, kept so that files written by the
/// CLI can be checked against the claims made for that family.
struct FamilyInfo {
    std::string name;
    std::map<std::string, long long> params;
    std::vector<int> chosen;

    friend bool operator==(const FamilyInfo &, const FamilyInfo &) = default;
};

/// A line arrangement as a pure incidence structure. Construction validates
/// the data (pair coverage and the two counting identities) and throws
/// InvalidArrangement on failure, so every instance is a valid arrangement.
/// Instances are immutable.
///
/// Incidence is stored twice: point -> lines and line -> points, as sorted
/// index lists and as bitsets sized to k and s respectively.
class Arrangement {
   public:
    explicit Arrangement(Incidence incidence, std::vector<std::string> line_names = {},
                         std::vector<std::string> point_names = {});

    int line_count() const { return k_; }
    int point_count() const { return static_cast<int>(point_lines_.size()); }

    const std::vector<int> &lines_through(PointId p) const { return point_lines_[p.value]; }
    const std::vector<int> &points_on(LineId l) const { return line_points_[l.value]; }
    const boost::dynamic_bitset<> &line_set(PointId p) const { return point_line_bits_[p.value]; }
    const boost::dynamic_bitset<> &point_set(LineId l) const { return line_point_bits_[l.value]; }

    int multiplicity(PointId p) const { return static_cast<int>(point_lines_[p.value].size()); }
    bool incident(PointId p, LineId l) const { return point_line_bits_[p.value][l.value]; }

    /// The unique singular point on two distinct lines.
    PointId meet(LineId a, LineId b) const;

    Incidence incidence() const { return {k_, point_lines_}; }

    const std::vector<std::string> &line_names() const { return line_names_; }
    const std::vector<std::string> &point_names() const { return point_names_; }
    const std::optional<Coordinates> &coordinates() const { return coordinates_; }
    const std::optional<FamilyInfo> &family() const { return family_; }

    /// Attaches coordinates; throws InvalidArrangement unless every point is
    /// incident (exactly) to precisely the lines the incidence lists for it.
    Arrangement with_coordinates(Coordinates coords) const;
    Arrangement with_family(FamilyInfo family) const;

    /// Same incidence, ignoring names, coordinates and family.
    bool same_incidence(const Arrangement &other) const;

   private:
    int k_;
    std::vector<std::vector<int>> point_lines_;
    std::vector<std::vector<int>> line_points_;
    std::vector<boost::dynamic_bitset<>> point_line_bits_;
    std::vector<boost::dynamic_bitset<>> line_point_bits_;
    std::vector<int> meet_;  // k*k, -1 on the diagonal
    std::vector<std::string> line_names_;
    std::vector<std::string> point_names_;
    std::optional<Coordinates> coordinates_;
    std::optional<FamilyInfo> family_;
};

/// t_r for r >= 2, s and the largest multiplicity q.
struct MultiplicityProfile {
    std::map<int, int> t;
    int s = 0;
    int q = 0;

    int count(int r) const {
        auto it = t.find(r);
        return it == t.end() ? 0 : it->second;
    }
};

MultiplicityProfile multiplicity_profile(const Arrangement &arr);

/// Checks index ranges, duplicate incidences, multiplicities >= 2, that each
/// pair of lines shares exactly one point, sum C(m_p,2) = C(k,2), and
/// sum over p on l of (m_p - 1) = k - 1 for every line.
ValidationReport validate_incidence(const Incidence &incidence);

/// validate_incidence plus agreement of the two stored views and, when
/// present, of the coordinates with the incidence.
ValidationReport validate_arrangement(const Arrangement &arr);

/// Points p such that every other singular point shares a line with p.
std::vector<PointId> modular_points(const Arrangement &arr);

/// Relabels: new line line_perm[j] is old line j, likewise for points.
Arrangement permute(const Arrangement &arr, const std::vector<int> &line_perm, const std::vector<int> &point_perm);

/// The sub-arrangement formed by the given lines (renumbered in the order
/// given). Points keep their original relative order.
Arrangement restrict_to_lines(const Arrangement &arr, const std::vector<int> &lines);

}  // namespace levicyc

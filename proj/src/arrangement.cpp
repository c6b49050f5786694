#include "levicyc/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "levicyc/errors.hpp"

namespace levicyc {

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

std::string default_name(char prefix, int index) { return std::string(1, prefix) + std::to_string(index + 1); }

}  // namespace

ValidationReport validate_incidence(const Incidence &inc) {
    ValidationReport report;
    const int k = inc.line_count;
    if (k < 1) {
        report.add("indices", false, "an arrangement needs at least one line");
        return report;
    }

    bool ranges_ok = true, dup_ok = true, mult_ok = true;
    std::string range_detail, dup_detail, mult_detail;
    for (size_t p = 0; p < inc.points.size(); ++p) {
        std::set<int> seen;
        for (int l : inc.points[p]) {
            if (l < 0 || l >= k) {
                ranges_ok = false;
                range_detail = "point " + std::to_string(p) + " lists line " + std::to_string(l);
            } else if (!seen.insert(l).second) {
                dup_ok = false;
                dup_detail = "point " + std::to_string(p) + " lists line " + std::to_string(l) + " twice";
            }
        }
        if (inc.points[p].size() < 2) {
            mult_ok = false;
            mult_detail = "point " + std::to_string(p) + " has multiplicity " + std::to_string(inc.points[p].size());
        }
    }
    report.add("indices", ranges_ok, range_detail);
    report.add("duplicate-incidence", dup_ok, dup_detail);
    report.add("multiplicity", mult_ok, mult_detail);
    if (!ranges_ok) return report;

    // Pair coverage: every pair of lines on exactly one point.
    std::vector<int> cover(static_cast<size_t>(k) * k, 0);
    for (const auto &lines : inc.points) {
        std::set<int> uniq(lines.begin(), lines.end());
        std::vector<int> v(uniq.begin(), uniq.end());
        for (size_t a = 0; a < v.size(); ++a)
            for (size_t b = a + 1; b < v.size(); ++b) ++cover[v[a] * k + v[b]];
    }
    bool pairs_ok = true;
    std::string pair_detail;
    for (int a = 0; a < k && pairs_ok; ++a) {
        for (int b = a + 1; b < k; ++b) {
            int c = cover[a * k + b];
            if (c != 1) {
                pairs_ok = false;
                pair_detail = "lines " + std::to_string(a) + " and " + std::to_string(b) + " share " +
                              std::to_string(c) + " points";
                break;
            }
        }
    }
    report.add("pair-coverage", pairs_ok, pair_detail);

    long long pair_sum = 0;
    for (const auto &lines : inc.points) pair_sum += choose2(static_cast<long long>(lines.size()));
    report.add("pair-count", pair_sum == choose2(k),
               "sum C(m_p,2) = " + std::to_string(pair_sum) + ", C(k,2) = " + std::to_string(choose2(k)));

    std::vector<long long> per_line(k, 0);
    for (const auto &lines : inc.points)
        for (int l : lines) per_line[l] += static_cast<long long>(lines.size()) - 1;
    bool lines_ok = true;
    std::string line_detail;
    for (int l = 0; l < k; ++l) {
        if (per_line[l] != k - 1) {
            lines_ok = false;
            line_detail = "line " + std::to_string(l) + ": sum (m_p - 1) = " + std::to_string(per_line[l]) +
                          ", expected " + std::to_string(k - 1);
            break;
        }
    }
    report.add("line-count", lines_ok, line_detail);
    return report;
}

Arrangement::Arrangement(Incidence incidence, std::vector<std::string> line_names, std::vector<std::string> point_names)
    : k_(incidence.line_count) {
    auto report = validate_incidence(incidence);
    if (!report.ok()) {
        auto f = *report.first_failure();
        throw InvalidArrangement(f.name + ": " + f.detail);
    }
    const int s = static_cast<int>(incidence.points.size());
    point_lines_ = std::move(incidence.points);
    for (auto &lines : point_lines_) std::sort(lines.begin(), lines.end());
    line_points_.assign(k_, {});
    point_line_bits_.assign(s, boost::dynamic_bitset<>(k_));
    line_point_bits_.assign(k_, boost::dynamic_bitset<>(s));
    meet_.assign(static_cast<size_t>(k_) * k_, -1);
    for (int p = 0; p < s; ++p) {
        for (int l : point_lines_[p]) {
            line_points_[l].push_back(p);
            point_line_bits_[p].set(l);
            line_point_bits_[l].set(p);
        }
        for (int a : point_lines_[p])
            for (int b : point_lines_[p])
                if (a != b) meet_[a * k_ + b] = p;
    }

    if (!line_names.empty() && static_cast<int>(line_names.size()) != k_)
        throw InvalidArrangement("line_names has " + std::to_string(line_names.size()) + " entries for " +
                                 std::to_string(k_) + " lines");
    if (!point_names.empty() && static_cast<int>(point_names.size()) != s)
        throw InvalidArrangement("point_names has " + std::to_string(point_names.size()) + " entries for " +
                                 std::to_string(s) + " points");
    if (line_names.empty())
        for (int l = 0; l < k_; ++l) line_names.push_back(default_name('L', l));
    if (point_names.empty())
        for (int p = 0; p < s; ++p) point_names.push_back(default_name('P', p));
    line_names_ = std::move(line_names);
    point_names_ = std::move(point_names);
}

PointId Arrangement::meet(LineId a, LineId b) const {
    if (a.value < 0 || a.value >= k_ || b.value < 0 || b.value >= k_ || a == b)
        throw BadParam("meet needs two distinct line indices");
    return PointId{meet_[a.value * k_ + b.value]};
}

Arrangement Arrangement::with_coordinates(Coordinates coords) const {
    if (static_cast<int>(coords.lines.size()) != k_ || static_cast<int>(coords.points.size()) != point_count())
        throw InvalidArrangement("coordinate counts do not match the incidence");
    for (const auto &l : coords.lines)
        if (l.conductor() != coords.conductor) throw ConductorMismatch("mixed fields in line coordinates");
    for (const auto &p : coords.points)
        if (p.conductor() != coords.conductor) throw ConductorMismatch("mixed fields in point coordinates");
    for (int p = 0; p < point_count(); ++p) {
        for (int l = 0; l < k_; ++l) {
            bool geometric = levicyc::incident(coords.points[p], coords.lines[l]);
            if (geometric != incident(PointId{p}, LineId{l}))
                throw InvalidArrangement("coordinates disagree with incidence at point " + point_names_[p] +
                                         ", line " + line_names_[l]);
        }
    }
    Arrangement copy(*this);
    copy.coordinates_ = std::move(coords);
    return copy;
}

Arrangement Arrangement::with_family(FamilyInfo family) const {
    Arrangement copy(*this);
    copy.family_ = std::move(family);
    return copy;
}

bool Arrangement::same_incidence(const Arrangement &other) const {
    return k_ == other.k_ && point_lines_ == other.point_lines_;
}

ValidationReport validate_arrangement(const Arrangement &arr) {
    ValidationReport report = validate_incidence(arr.incidence());
    bool views_ok = true;
    std::string detail;
    for (int p = 0; p < arr.point_count() && views_ok; ++p) {
        for (int l = 0; l < arr.line_count(); ++l) {
            bool a = arr.line_set(PointId{p})[l];
            bool b = arr.point_set(LineId{l})[p];
            const auto &pts = arr.points_on(LineId{l});
            bool c = std::binary_search(pts.begin(), pts.end(), p);
            if (a != b || a != c) {
                views_ok = false;
                detail = "point " + std::to_string(p) + " / line " + std::to_string(l);
                break;
            }
        }
    }
    report.add("views-agree", views_ok, detail);
    if (const auto &coords = arr.coordinates()) {
        bool ok = true;
        for (int p = 0; p < arr.point_count() && ok; ++p)
            for (int l = 0; l < arr.line_count() && ok; ++l)
                ok = incident(coords->points[p], coords->lines[l]) == arr.incident(PointId{p}, LineId{l});
        report.add("coordinates", ok);
    }
    return report;
}

MultiplicityProfile multiplicity_profile(const Arrangement &arr) {
    MultiplicityProfile prof;
    prof.s = arr.point_count();
    for (int p = 0; p < arr.point_count(); ++p) {
        int m = arr.multiplicity(PointId{p});
        ++prof.t[m];
        prof.q = std::max(prof.q, m);
    }
    return prof;
}

std::vector<PointId> modular_points(const Arrangement &arr) {
    std::vector<PointId> result;
    const int s = arr.point_count();
    for (int p = 0; p < s; ++p) {
        bool modular = true;
        for (int o = 0; o < s && modular; ++o) {
            if (o == p) continue;
            modular = arr.line_set(PointId{p}).intersects(arr.line_set(PointId{o}));
        }
        if (modular) result.push_back(PointId{p});
    }
    return result;
}

Arrangement permute(const Arrangement &arr, const std::vector<int> &line_perm, const std::vector<int> &point_perm) {
    const int k = arr.line_count(), s = arr.point_count();
    auto is_perm = [](const std::vector<int> &v, int n) {
        if (static_cast<int>(v.size()) != n) return false;
        std::vector<int> sorted(v);
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i)
            if (sorted[i] != i) return false;
        return true;
    };
    if (!is_perm(line_perm, k) || !is_perm(point_perm, s)) throw BadParam("permute needs permutations of the right size");
    Incidence inc{k, std::vector<std::vector<int>>(s)};
    std::vector<std::string> lnames(k), pnames(s);
    for (int l = 0; l < k; ++l) lnames[line_perm[l]] = arr.line_names()[l];
    for (int p = 0; p < s; ++p) {
        auto &dst = inc.points[point_perm[p]];
        for (int l : arr.lines_through(PointId{p})) dst.push_back(line_perm[l]);
        pnames[point_perm[p]] = arr.point_names()[p];
    }
    return Arrangement(std::move(inc), std::move(lnames), std::move(pnames));
}

Arrangement restrict_to_lines(const Arrangement &arr, const std::vector<int> &lines) {
    const int k = arr.line_count();
    std::vector<int> new_index(k, -1);
    std::vector<std::string> lnames;
    for (size_t i = 0; i < lines.size(); ++i) {
        int l = lines[i];
        if (l < 0 || l >= k || new_index[l] != -1) throw BadParam("restrict_to_lines needs distinct valid lines");
        new_index[l] = static_cast<int>(i);
        lnames.push_back(arr.line_names()[l]);
    }
    Incidence inc{static_cast<int>(lines.size()), {}};
    std::vector<std::string> pnames;
    for (int p = 0; p < arr.point_count(); ++p) {
        std::vector<int> kept;
        for (int l : arr.lines_through(PointId{p}))
            if (new_index[l] != -1) kept.push_back(new_index[l]);
        if (kept.size() >= 2) {
            inc.points.push_back(std::move(kept));
            pnames.push_back(arr.point_names()[p]);
        }
    }
    return Arrangement(std::move(inc), std::move(lnames), std::move(pnames));
}

}  // namespace levicyc

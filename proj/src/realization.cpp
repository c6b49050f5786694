#include "levicyc/realization.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "levicyc/builders.hpp"
#include "levicyc/errors.hpp"

namespace levicyc {

namespace {

// a*x + b*y + c*z with a, b, c each 0, 1 or -e^power.
ProjLine linear(unsigned n, int which_one, int which_root, long long power) {
    std::array<CycloNumber, 3> c{CycloNumber(n), CycloNumber(n), CycloNumber(n)};
    c[which_one] = CycloNumber(n, Rational(1));
    if (which_root >= 0) c[which_root] = -CycloNumber::root_power(n, power);
    return {c[0], c[1], c[2]};
}

}  // namespace

Arrangement arrangement_from_lines(const std::vector<ProjLine> &lines, std::vector<std::string> line_names) {
    const int k = static_cast<int>(lines.size());
    if (k < 1) throw BadParam("arrangement_from_lines needs at least one line");
    const unsigned conductor = lines.front().conductor();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (lines[a] == lines[b])
                throw DuplicateLine("lines " + std::to_string(a) + " and " + std::to_string(b) + " coincide");

    std::map<ProjPoint, int> index;
    std::vector<ProjPoint> points;
    std::vector<std::set<int>> through;
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            ProjPoint p = meet(lines[a], lines[b]);
            auto [it, inserted] = index.emplace(p, static_cast<int>(points.size()));
            if (inserted) {
                points.push_back(p);
                through.emplace_back();
            }
            through[it->second].insert(a);
            through[it->second].insert(b);
        }
    }
    Incidence inc{k, {}};
    for (const auto &s : through) inc.points.emplace_back(s.begin(), s.end());
    std::vector<std::string> point_names;
    for (const auto &p : points) point_names.push_back(p.str());
    Arrangement arr(std::move(inc), std::move(line_names), std::move(point_names));
    return arr.with_coordinates({conductor, lines, points});
}

std::vector<ProjLine> ceva_lines(int n) {
    if (n < 1) throw BadParam("ceva_lines needs n >= 1");
    const unsigned c = static_cast<unsigned>(n);
    std::vector<ProjLine> out;
    for (int i = 0; i < n; ++i) out.push_back(linear(c, 0, 1, i));  // x - e^i y
    for (int j = 0; j < n; ++j) out.push_back(linear(c, 1, 2, j));  // y - e^j z
    for (int i = 0; i < n; ++i) out.push_back(linear(c, 0, 2, i));  // x - e^i z
    return out;
}

std::vector<ProjLine> supersolvable_mu3_lines(int m) {
    if (m < 3) throw BadParam("supersolvable_mu3_lines needs m >= 3");
    auto out = ceva_lines(m - 2);
    const unsigned c = static_cast<unsigned>(m - 2);
    for (int axis = 0; axis < 3; ++axis) out.push_back(linear(c, axis, -1, 0));
    return out;
}

std::vector<ProjLine> mu4_lines() {
    std::vector<ProjLine> out;
    for (int axis = 0; axis < 3; ++axis) out.push_back(linear(1, axis, -1, 0));
    out.push_back(linear(1, 0, 1, 0));
    out.push_back(linear(1, 0, 2, 0));
    out.push_back(linear(1, 1, 2, 0));
    return out;
}

std::vector<ProjLine> a_w_k_lines(int m, int k, std::vector<int> chosen) {
    if (chosen.empty() && k > 0) chosen = default_exponents(k);
    check_a_w_k_params(m, k, chosen);
    const int n = m - 2;
    const unsigned c = static_cast<unsigned>(n);
    std::vector<ProjLine> out;
    for (int i = 0; i < n; ++i) out.push_back(linear(c, 0, 1, i));
    for (int i = 0; i < n; ++i) out.push_back(linear(c, 0, 2, i));
    for (int e : chosen) out.push_back(linear(c, 1, 2, e));
    for (int axis = 0; axis < 3; ++axis) out.push_back(linear(c, axis, -1, 0));
    return out;
}

std::optional<std::vector<ProjLine>> family_lines(const FamilyInfo &family) {
    auto get = [&](const char *key) {
        auto it = family.params.find(key);
        if (it == family.params.end()) throw BadParam("family " + family.name + " needs parameter " + key);
        return static_cast<int>(it->second);
    };
    if (family.name == "ceva") return ceva_lines(get("n"));
    if (family.name == "supersolvable_mu3") return supersolvable_mu3_lines(get("m"));
    if (family.name == "mu4") return mu4_lines();
    if (family.name == "a_w_k") return a_w_k_lines(get("m"), get("k"), family.chosen);
    return std::nullopt;
}

Arrangement attach_coordinates(const Arrangement &arr, const std::vector<ProjLine> &lines) {
    if (static_cast<int>(lines.size()) != arr.line_count())
        throw InvalidArrangement("expected " + std::to_string(arr.line_count()) + " coordinate lines");
    std::vector<ProjPoint> points;
    for (int p = 0; p < arr.point_count(); ++p) {
        const auto &through = arr.lines_through(PointId{p});
        points.push_back(meet(lines[through[0]], lines[through[1]]));
    }
    return arr.with_coordinates({lines.front().conductor(), lines, points});
}

bool same_up_to_point_order(const Arrangement &a, const Arrangement &b) {
    if (a.line_count() != b.line_count() || a.point_count() != b.point_count()) return false;
    auto sets = [](const Arrangement &arr) {
        auto pts = arr.incidence().points;
        for (auto &p : pts) std::sort(p.begin(), p.end());
        std::sort(pts.begin(), pts.end());
        return pts;
    };
    return sets(a) == sets(b);
}

}  // namespace levicyc

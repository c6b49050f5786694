#include "levicyc/builders.hpp"

#include <algorithm>
#include <set>

#include "levicyc/errors.hpp"

namespace levicyc {

namespace {

struct Draft {
    int k = 0;
    std::vector<std::vector<int>> points;
    std::vector<std::string> line_names;
    std::vector<std::string> point_names;

    void add(std::string name, std::vector<int> lines) {
        points.push_back(std::move(lines));
        point_names.push_back(std::move(name));
    }

    Arrangement finish(FamilyInfo info) {
        Arrangement arr(Incidence{k, std::move(points)}, std::move(line_names), std::move(point_names));
        return arr.with_family(std::move(info));
    }
};

int mod(int a, int n) { return ((a % n) + n) % n; }

std::vector<std::string> numbered(const std::string &prefix, int count) {
    std::vector<std::string> names;
    for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

// Converts 1-based line lists to 0-based.
std::vector<int> zero_based(std::initializer_list<int> lines) {
    std::vector<int> out;
    for (int l : lines) out.push_back(l - 1);
    return out;
}

const std::vector<std::vector<int>> &nine_three_triples() {
    static const std::vector<std::vector<int>> t = {
        {1, 2, 3}, {1, 5, 9}, {1, 6, 8}, {2, 4, 7}, {2, 8, 9}, {3, 4, 8}, {3, 5, 7}, {4, 5, 6}, {6, 7, 9}};
    return t;
}

std::vector<int> shift(const std::vector<int> &lines) {
    std::vector<int> out;
    for (int l : lines) out.push_back(l - 1);
    return out;
}

long long param(const FamilyInfo &info, const std::string &key) {
    auto it = info.params.find(key);
    if (it == info.params.end()) throw BadParam("family " + info.name + " needs parameter " + key);
    return it->second;
}

}  // namespace

Arrangement near_pencil(int k) {
    if (k < 3) throw BadParam("near_pencil needs k >= 3");
    Draft d;
    d.k = k;
    d.line_names = numbered("l", k);
    std::vector<int> pencil;
    for (int i = 0; i < k - 1; ++i) pencil.push_back(i);
    d.add("P", pencil);
    for (int i = 0; i < k - 1; ++i) d.add("p" + std::to_string(i + 1) + "," + std::to_string(k), {i, k - 1});
    return d.finish({"near_pencil", {{"k", k}}, {}});
}

Arrangement two_modular(int a, int b) {
    if (a < 2 || b <= a) throw BadParam("two_modular needs 2 <= a < b");
    Draft d;
    d.k = a + b - 1;
    d.line_names.push_back("l0");
    for (int i = 1; i < a; ++i) d.line_names.push_back("A" + std::to_string(i));
    for (int j = 1; j < b; ++j) d.line_names.push_back("B" + std::to_string(j));
    std::vector<int> p1{0}, p2{0};
    for (int i = 1; i < a; ++i) p1.push_back(i);
    for (int j = 0; j < b - 1; ++j) p2.push_back(a + j);
    d.add("p1", p1);
    d.add("p2", p2);
    for (int i = 1; i < a; ++i)
        for (int j = 0; j < b - 1; ++j)
            d.add("A" + std::to_string(i) + "B" + std::to_string(j + 1), {i, a + j});
    return d.finish({"two_modular", {{"a", a}, {"b", b}}, {}});
}

Arrangement generic(int k) {
    if (k < 2) throw BadParam("generic needs k >= 2");
    Draft d;
    d.k = k;
    d.line_names = numbered("l", k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) d.add("p" + std::to_string(a + 1) + "," + std::to_string(b + 1), {a, b});
    return d.finish({"generic", {{"k", k}}, {}});
}

Arrangement ceva(int n) {
    if (n < 3) throw BadParam("ceva needs n >= 3");
    Draft d;
    d.k = 3 * n;
    for (const char *prefix : {"XY", "YZ", "XZ"})
        for (int i = 0; i < n; ++i) d.line_names.push_back(prefix + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d.add("T(" + std::to_string(i) + "," + std::to_string(j) + ")", {mod(i - j, n), n + j, 2 * n + i});
    const char *names[] = {"Nxy", "Nyz", "Nxz"};
    for (int g = 0; g < 3; ++g) {
        std::vector<int> lines;
        for (int i = 0; i < n; ++i) lines.push_back(g * n + i);
        d.add(names[g], lines);
    }
    return d.finish({"ceva", {{"n", n}}, {}});
}

Arrangement hesse() {
    Draft d;
    d.k = 12;
    d.line_names = numbered("l", 12);
    const std::vector<std::vector<int>> quads = {{1, 4, 7, 10}, {1, 5, 9, 12}, {1, 6, 8, 11},
                                                 {2, 4, 11, 12}, {2, 5, 7, 8},  {2, 6, 9, 10},
                                                 {3, 4, 8, 9},   {3, 5, 10, 11}, {3, 6, 7, 12}};
    for (size_t i = 0; i < quads.size(); ++i) d.add("p" + std::to_string(i + 1), shift(quads[i]));
    // Remaining pairs: within each of these groups no two lines share a p_i.
    const std::vector<std::vector<int>> groups = {{1, 2, 3}, {4, 5, 6}, {7, 9, 11}, {8, 10, 12}};
    for (const auto &g : groups)
        for (size_t a = 0; a < g.size(); ++a)
            for (size_t b = a + 1; b < g.size(); ++b)
                d.add("p(" + std::to_string(g[a]) + "," + std::to_string(g[b]) + ")", {g[a] - 1, g[b] - 1});
    return d.finish({"hesse", {}, {}});
}

Arrangement nine_three() {
    Draft d;
    d.k = 9;
    d.line_names = numbered("L", 9);
    for (const auto &t : nine_three_triples()) d.add("", shift(t));
    for (auto pair : {zero_based({1, 4}), zero_based({1, 7}), zero_based({2, 5}), zero_based({2, 6}),
                      zero_based({3, 6}), zero_based({3, 9}), zero_based({4, 9}), zero_based({5, 8}),
                      zero_based({7, 8})})
        d.add("", pair);
    d.point_names = numbered("e", 18);
    return d.finish({"nine_three", {}, {}});
}

Arrangement ten_line() {
    Draft d;
    d.k = 10;
    d.line_names = numbered("L", 10);
    for (const auto &t : nine_three_triples()) d.add("", shift(t));
    for (auto triple : {zero_based({2, 5, 10}), zero_based({3, 6, 10}), zero_based({4, 9, 10})}) d.add("", triple);
    for (auto pair : {zero_based({1, 4}), zero_based({1, 7}), zero_based({1, 10}), zero_based({2, 6}),
                      zero_based({3, 9}), zero_based({5, 8}), zero_based({7, 8}), zero_based({7, 10}),
                      zero_based({8, 10})})
        d.add("", pair);
    d.point_names = numbered("e", 21);
    return d.finish({"ten_line", {}, {}});
}

Arrangement supersolvable_mu3(int m) {
    if (m < 4) throw BadParam("supersolvable_mu3 needs m >= 4");
    const int n = m - 2;
    Draft d;
    d.k = 3 * n + 3;
    for (const char *prefix : {"XY", "YZ", "XZ"})
        for (int i = 0; i < n; ++i) d.line_names.push_back(prefix + std::to_string(i));
    const int lx = 3 * n, ly = 3 * n + 1, lz = 3 * n + 2;
    d.line_names.insert(d.line_names.end(), {"Lx", "Ly", "Lz"});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d.add("T(" + std::to_string(i) + "," + std::to_string(j) + ")", {mod(i - j, n), n + j, 2 * n + i});
    std::vector<int> p001{lx, ly}, p100{ly, lz}, p010{lx, lz};
    for (int i = 0; i < n; ++i) {
        p001.push_back(i);
        p100.push_back(n + i);
        p010.push_back(2 * n + i);
    }
    d.add("(0,0,1)", p001);
    d.add("(1,0,0)", p100);
    d.add("(0,1,0)", p010);
    for (int i = 0; i < n; ++i) d.add("Lz.XY" + std::to_string(i), {lz, i});
    for (int i = 0; i < n; ++i) d.add("Lx.YZ" + std::to_string(i), {lx, n + i});
    for (int i = 0; i < n; ++i) d.add("Ly.XZ" + std::to_string(i), {ly, 2 * n + i});
    return d.finish({"supersolvable_mu3", {{"m", m}}, {}});
}

Arrangement mu4() {
    Draft d;
    d.k = 6;
    d.line_names = {"Lx", "Ly", "Lz", "Lxy", "Lxz", "Lyz"};
    enum { x, y, z, xy, xz, yz };
    d.add("p1", {y, z, yz});
    d.add("p2", {x, z, xz});
    d.add("p3", {x, y, xy});
    d.add("p4", {z, xy});
    d.add("p5", {y, xz});
    d.add("p6", {x, yz});
    d.add("p7", {xy, xz, yz});
    return d.finish({"mu4", {}, {}});
}

std::vector<int> default_exponents(int k) {
    std::vector<int> v;
    for (int j = 1; j <= k; ++j) v.push_back(j);
    return v;
}

void check_a_w_k_params(int m, int k, const std::vector<int> &chosen) {
    if (m < 5) throw BadParam("a_w_k needs m >= 5");
    if (k < 0 || k > m - 3) throw BadParam("a_w_k needs 0 <= k <= m-3");
    if (static_cast<int>(chosen.size()) != k)
        throw BadParam("a_w_k needs exactly k exponents, got " + std::to_string(chosen.size()));
    std::set<int> seen;
    for (int e : chosen) {
        if (e < 0 || e > m - 3) throw ExponentOutOfRange("exponent " + std::to_string(e) + " outside [0, m-3]");
        if (!seen.insert(e).second) throw DuplicateExponent("exponent " + std::to_string(e) + " repeated");
    }
}

Arrangement a_w_k(int m, int k, std::vector<int> chosen) {
    if (chosen.empty() && k > 0) chosen = default_exponents(k);
    check_a_w_k_params(m, k, chosen);
    const int n = m - 2;
    Draft d;
    d.k = 2 * n + k + 3;
    for (int i = 0; i < n; ++i) d.line_names.push_back("XY" + std::to_string(i));
    for (int i = 0; i < n; ++i) d.line_names.push_back("XZ" + std::to_string(i));
    std::vector<int> yz_of(n, -1);
    for (int j = 0; j < k; ++j) {
        yz_of[chosen[j]] = 2 * n + j;
        d.line_names.push_back("YZ" + std::to_string(chosen[j]));
    }
    const int lx = 2 * n + k, ly = lx + 1, lz = lx + 2;
    d.line_names.insert(d.line_names.end(), {"Lx", "Ly", "Lz"});

    std::vector<int> p001{lx, ly}, p010{lx, lz}, p100{ly, lz};
    for (int i = 0; i < n; ++i) {
        p001.push_back(i);
        p010.push_back(n + i);
    }
    for (int j = 0; j < k; ++j) p100.push_back(2 * n + j);
    d.add("(0,0,1)", p001);
    d.add("(0,1,0)", p010);
    d.add("(1,0,0)", p100);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (yz_of[j] >= 0)
                d.add("T" + tag, {mod(i - j, n), n + i, yz_of[j]});
            else
                d.add("D" + tag, {mod(i - j, n), n + i});
        }
    }
    for (int i = 0; i < n; ++i) d.add("Lz.XY" + std::to_string(i), {lz, i});
    for (int i = 0; i < n; ++i) d.add("Ly.XZ" + std::to_string(i), {ly, n + i});
    for (int j = 0; j < k; ++j) d.add("Lx.YZ" + std::to_string(chosen[j]), {lx, 2 * n + j});
    return d.finish({"a_w_k", {{"m", m}, {"k", k}}, chosen});
}

const std::vector<std::string> &family_names() {
    static const std::vector<std::string> names = {"near_pencil", "two_modular", "generic",
                                                   "ceva",        "hesse",       "nine_three",
                                                   "ten_line",    "supersolvable_mu3", "mu4",
                                                   "a_w_k"};
    return names;
}

Arrangement build_family(const FamilyInfo &info) {
    const auto &f = info.name;
    if (f == "near_pencil") return near_pencil(static_cast<int>(param(info, "k")));
    if (f == "two_modular") return two_modular(static_cast<int>(param(info, "a")), static_cast<int>(param(info, "b")));
    if (f == "generic") return generic(static_cast<int>(param(info, "k")));
    if (f == "ceva") return ceva(static_cast<int>(param(info, "n")));
    if (f == "hesse") return hesse();
    if (f == "nine_three") return nine_three();
    if (f == "ten_line") return ten_line();
    if (f == "supersolvable_mu3") return supersolvable_mu3(static_cast<int>(param(info, "m")));
    if (f == "mu4") return mu4();
    if (f == "a_w_k")
        return a_w_k(static_cast<int>(param(info, "m")), static_cast<int>(param(info, "k")), info.chosen);
    throw BadParam("unknown family " + f);
}

LineId find_line(const Arrangement &arr, const std::string &name) {
    const auto &names = arr.line_names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw BadParam("no line named " + name);
    return LineId{static_cast<int>(it - names.begin())};
}

PointId find_point(const Arrangement &arr, const std::string &name) {
    const auto &names = arr.point_names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw BadParam("no point named " + name);
    return PointId{static_cast<int>(it - names.begin())};
}

}  // namespace levicyc

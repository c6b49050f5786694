#pragma once

// Shared fixtures for the unit and acceptance tests: named-witness parsing,
// random incidence structures and graphs, and brute-force reference counts
// that do not go through the library's validation code.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "levicyc/arrangement.hpp"
#include "levicyc/builders.hpp"
#include "levicyc/cycles.hpp"
#include "levicyc/levi.hpp"

namespace levicyc::testing {

// "L1 e10 L4 ... L1": alternating line and point names, closing on the first line.
inline InducedCycleWitness witness_by_names(const Arrangement &arr, const std::vector<std::string> &walk) {
    InducedCycleWitness w;
    for (size_t t = 0; t + 1 < walk.size(); t += 2) {
        w.lines.push_back(find_line(arr, walk[t]).value);
        w.points.push_back(find_point(arr, walk[t + 1]).value);
    }
    return w;
}

struct Named {
    std::string name;
    Arrangement arr;
};

// Every builder output small enough for exhaustive cross-checks.
inline std::vector<Named> small_builder_outputs() {
    std::vector<Named> out;
    for (int k = 3; k <= 10; ++k) out.push_back({"near_pencil(" + std::to_string(k) + ")", near_pencil(k)});
    for (int k = 2; k <= 10; ++k) out.push_back({"generic(" + std::to_string(k) + ")", generic(k)});
    for (int a = 2; a <= 5; ++a)
        for (int b = a + 1; a + b - 1 <= 10; ++b)
            out.push_back({"two_modular(" + std::to_string(a) + "," + std::to_string(b) + ")", two_modular(a, b)});
    out.push_back({"ceva(3)", ceva(3)});
    out.push_back({"nine_three", nine_three()});
    out.push_back({"ten_line", ten_line()});
    out.push_back({"mu4", mu4()});
    out.push_back({"supersolvable_mu3(4)", supersolvable_mu3(4)});
    out.push_back({"a_w_k(5,0)", a_w_k(5, 0)});
    out.push_back({"a_w_k(5,1)", a_w_k(5, 1)});
    out.push_back({"a_w_k(5,1,{0})", a_w_k(5, 1, {0})});
    return out;
}

// Larger builder outputs, used where only cheap checks run.
inline std::vector<Named> all_builder_outputs() {
    auto out = small_builder_outputs();
    out.push_back({"ceva(4)", ceva(4)});
    out.push_back({"ceva(5)", ceva(5)});
    out.push_back({"hesse", hesse()});
    out.push_back({"supersolvable_mu3(5)", supersolvable_mu3(5)});
    out.push_back({"supersolvable_mu3(6)", supersolvable_mu3(6)});
    out.push_back({"two_modular(5,6)", two_modular(5, 6)});
    out.push_back({"a_w_k(6,2)", a_w_k(6, 2)});
    out.push_back({"a_w_k(7,3)", a_w_k(7, 3)});
    return out;
}

// A random linear space on k lines: repeatedly take an uncovered pair and
// greedily add further lines whose pairs with the current ones are still
// uncovered. The result satisfies the pair axiom but need not be realizable.
inline Incidence random_linear_space(std::mt19937 &rng, int k, double grow = 0.5) {
    std::vector<std::vector<bool>> covered(k, std::vector<bool>(k, false));
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution take(grow);
    Incidence inc{k, {}};
    for (auto [a, b] : pairs) {
        if (covered[a][b]) continue;
        std::vector<int> point{a, b};
        std::vector<int> others;
        for (int c = 0; c < k; ++c)
            if (c != a && c != b) others.push_back(c);
        std::shuffle(others.begin(), others.end(), rng);
        for (int c : others) {
            bool free = std::all_of(point.begin(), point.end(), [&](int x) { return !covered[x][c]; });
            if (free && take(rng)) point.push_back(c);
        }
        for (int x : point)
            for (int y : point)
                if (x != y) covered[x][y] = true;
        std::sort(point.begin(), point.end());
        inc.points.push_back(point);
    }
    return inc;
}

inline Graph random_graph(std::mt19937 &rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

// Longest cycle (not necessarily induced) by plain DFS over simple paths
// from their minimum vertex; 0 if the graph is a forest.
inline int circumference(const Graph &g) {
    const int n = g.vertex_count();
    int best = 0;
    std::vector<bool> used(n, false);
    std::function<void(int, int, int)> dfs = [&](int start, int v, int len) {
        for (int w : g.neighbors(v)) {
            if (w == start && len >= 3) best = std::max(best, len);
            if (w > start && !used[w]) {
                used[w] = true;
                dfs(start, w, len + 1);
                used[w] = false;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        used[s] = true;
        dfs(s, s, 1);
        used[s] = false;
    }
    return best;
}

// Longest induced cycle by enumerating vertex subsets: a subset induces a
// cycle iff it is connected and 2-regular. Only for tiny graphs.
inline int longest_induced_by_subsets(const Graph &g) {
    const int n = g.vertex_count();
    int best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 3 || size <= best) continue;
        bool two_regular = true;
        for (int v = 0; v < n && two_regular; ++v) {
            if (!(mask >> v & 1)) continue;
            int deg = 0;
            for (int w : g.neighbors(v)) deg += mask >> w & 1;
            two_regular = deg == 2;
        }
        if (!two_regular) continue;
        int first = __builtin_ctz(mask);
        unsigned seen = 1u << first, frontier = seen;
        while (frontier) {
            int v = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            for (int w : g.neighbors(v))
                if ((mask >> w & 1) && !(seen >> w & 1)) {
                    seen |= 1u << w;
                    frontier |= 1u << w;
                }
        }
        if (seen == mask) best = size;
    }
    return best;
}

// Both counting identities computed directly from the point line-lists.
inline bool pair_count_identity(const Incidence &inc) {
    long long lhs = 0;
    for (const auto &p : inc.points) lhs += static_cast<long long>(p.size()) * (p.size() - 1) / 2;
    return lhs == static_cast<long long>(inc.line_count) * (inc.line_count - 1) / 2;
}

inline bool per_line_identity(const Incidence &inc) {
    std::vector<long long> sum(inc.line_count, 0);
    for (const auto &p : inc.points)
        for (int l : p) sum[l] += static_cast<long long>(p.size()) - 1;
    return std::all_of(sum.begin(), sum.end(), [&](long long s) { return s == inc.line_count - 1; });
}

inline std::set<int> found_lengths(const CycleSpectrum &s) {
    std::set<int> out;
    for (const auto &[i, r] : s.by_length)
        if (r.status == Status::found) out.insert(i);
    return out;
}

inline std::vector<int> random_permutation(std::mt19937 &rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace levicyc::testing

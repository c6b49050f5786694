#include "levicyc/oracle.hpp"

#include <bit>
#include <cstdint>

#include "levicyc/errors.hpp"

namespace levicyc {

namespace {

using Mask = std::uint64_t;

// Enumerates induced paths v0 < everything else; a path closes into an
// induced cycle when the next vertex is adjacent to v0. Every induced cycle
// is reached from its smallest vertex.
class InducedPathSearch {
   public:
    InducedPathSearch(const Graph &g, int cap, bool collect_all) : collect_all_(collect_all) {
        const int n = g.vertex_count();
        if (cap > 64) throw TooLarge("oracle cap is limited to 64 vertices");
        if (n > cap) throw TooLarge("graph has " + std::to_string(n) + " vertices, oracle cap is " + std::to_string(cap));
        adj_.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) adj_[v] |= Mask{1} << w;
    }

    void run() {
        const int n = static_cast<int>(adj_.size());
        for (int s = 0; s < n; ++s) {
            start_ = s;
            above_ = (s + 1 >= 64) ? 0 : (~Mask{0} << (s + 1));
            if (n < 64) above_ &= (Mask{1} << n) - 1;
            path_.assign(1, s);
            extend(Mask{1} << s, 0);
        }
    }

    const std::vector<int> &best() const { return best_; }
    const std::set<int> &lengths() const { return lengths_; }

   private:
    // interior_nbrs: union of neighborhoods of v1..v_{t-1}.
    void extend(Mask on_path, Mask interior_nbrs) {
        const int last = path_.back();
        const Mask allowed = above_ & ~on_path & ~interior_nbrs;
        if (!collect_all_) {
            int reachable = static_cast<int>(path_.size()) + std::popcount(allowed);
            if (reachable <= static_cast<int>(best_.size())) return;
        }
        Mask cand = adj_[last] & allowed;
        const Mask start_nbrs = adj_[start_];
        const Mask next_interior = path_.size() >= 2 ? interior_nbrs | adj_[last] : interior_nbrs;
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            if (path_.size() >= 2 && (start_nbrs >> w & 1)) {
                record(w);
                continue;
            }
            path_.push_back(w);
            extend(on_path | Mask{1} << w, next_interior);
            path_.pop_back();
        }
    }

    void record(int closing) {
        int len = static_cast<int>(path_.size()) + 1;
        if (len < 3) return;
        lengths_.insert(len);
        if (len > static_cast<int>(best_.size())) {
            best_ = path_;
            best_.push_back(closing);
        }
    }

    bool collect_all_;
    std::vector<Mask> adj_;
    int start_ = 0;
    Mask above_ = 0;
    std::vector<int> path_;
    std::vector<int> best_;
    std::set<int> lengths_;
};

}  // namespace

std::optional<std::vector<int>> oracle_longest_induced_cycle(const Graph &g, int cap) {
    InducedPathSearch search(g, cap, false);
    search.run();
    if (search.best().empty()) return std::nullopt;
    return search.best();
}

std::set<int> oracle_induced_cycle_lengths(const Graph &g, int cap) {
    InducedPathSearch search(g, cap, true);
    search.run();
    return search.lengths();
}

bool is_induced_cycle(const Graph &g, const std::vector<int> &cycle) {
    const int len = static_cast<int>(cycle.size());
    if (len < 3) return false;
    std::set<int> seen(cycle.begin(), cycle.end());
    if (static_cast<int>(seen.size()) != len) return false;
    for (int v : cycle)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (int a = 0; a < len; ++a)
        for (int b = a + 1; b < len; ++b) {
            bool consecutive = b == a + 1 || (a == 0 && b == len - 1);
            if (g.has_edge(cycle[a], cycle[b]) != consecutive) return false;
        }
    return true;
}

}  // namespace levicyc

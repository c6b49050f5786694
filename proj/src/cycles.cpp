#include "levicyc/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <set>
#include <thread>

#include "levicyc/errors.hpp"

namespace levicyc {

InducedCycleWitness canonical_form(const InducedCycleWitness &w) {
    const int n = w.length();
    if (n == 0 || static_cast<int>(w.points.size()) != n) return w;
    int r = static_cast<int>(std::min_element(w.lines.begin(), w.lines.end()) - w.lines.begin());
    InducedCycleWitness out;
    for (int t = 0; t < n; ++t) {
        out.lines.push_back(w.lines[(r + t) % n]);
        out.points.push_back(w.points[(r + t) % n]);
    }
    if (n >= 3 && out.lines[1] > out.lines[n - 1]) {
        // Walk the other way: l0, l_{n-1}, ..., l1 with points p_{n-1}, ..., p0.
        InducedCycleWitness rev;
        rev.lines.push_back(out.lines[0]);
        for (int t = n - 1; t >= 1; --t) rev.lines.push_back(out.lines[t]);
        for (int t = n - 1; t >= 0; --t) rev.points.push_back(out.points[t]);
        return rev;
    }
    return out;
}

std::string describe(const Arrangement &arr, const InducedCycleWitness &w) {
    std::string out;
    auto line_name = [&](int l) {
        return l >= 0 && l < arr.line_count() ? arr.line_names()[l] : "?" + std::to_string(l);
    };
    auto point_name = [&](int p) {
        return p >= 0 && p < arr.point_count() ? arr.point_names()[p] : "?" + std::to_string(p);
    };
    for (int t = 0; t < w.length(); ++t) {
        out += line_name(w.lines[t]) + " ";
        if (t < static_cast<int>(w.points.size())) out += point_name(w.points[t]) + " ";
    }
    if (!w.lines.empty()) out += line_name(w.lines[0]);
    return out;
}

namespace {

ValidationReport combinatorial_checks(const Arrangement &arr, const InducedCycleWitness &w) {
    ValidationReport r;
    const int n = w.length();
    bool len_ok = n >= 3 && static_cast<int>(w.points.size()) == n;
    r.add("length", len_ok,
          "lines " + std::to_string(n) + ", points " + std::to_string(w.points.size()) + " (need equal and >= 3)");
    if (!len_ok) return r;

    bool range_ok = true;
    for (int l : w.lines) range_ok = range_ok && l >= 0 && l < arr.line_count();
    for (int p : w.points) range_ok = range_ok && p >= 0 && p < arr.point_count();
    r.add("range", range_ok);
    if (!range_ok) return r;

    r.add("distinct-lines", std::set<int>(w.lines.begin(), w.lines.end()).size() == w.lines.size());
    r.add("distinct-points", std::set<int>(w.points.begin(), w.points.end()).size() == w.points.size());

    bool adj_ok = true, induced_ok = true;
    std::string adj_detail, induced_detail;
    for (int t = 0; t < n; ++t) {
        PointId p{w.points[t]};
        int a = w.lines[t], b = w.lines[(t + 1) % n];
        if (adj_ok && (!arr.incident(p, LineId{a}) || !arr.incident(p, LineId{b}))) {
            adj_ok = false;
            adj_detail = arr.point_names()[p.value] + " is not on both " + arr.line_names()[a] + " and " +
                         arr.line_names()[b];
        }
        for (int u = 0; u < n && induced_ok; ++u) {
            if (u == t || u == (t + 1) % n) continue;
            if (arr.incident(p, LineId{w.lines[u]})) {
                induced_ok = false;
                induced_detail =
                    arr.point_names()[p.value] + " also lies on " + arr.line_names()[w.lines[u]];
            }
        }
    }
    r.add("adjacency", adj_ok, adj_detail);
    r.add("inducedness", induced_ok, induced_detail);
    return r;
}

bool levi_route(const Arrangement &arr, const LeviGraph &levi, const InducedCycleWitness &w) {
    const int n = w.length();
    if (n < 3 || static_cast<int>(w.points.size()) != n) return false;
    std::vector<int> verts;
    for (int t = 0; t < n; ++t) {
        if (w.lines[t] < 0 || w.lines[t] >= arr.line_count()) return false;
        if (w.points[t] < 0 || w.points[t] >= arr.point_count()) return false;
        verts.push_back(levi.line_vertex(LineId{w.lines[t]}));
        verts.push_back(levi.point_vertex(PointId{w.points[t]}));
    }
    if (std::set<int>(verts.begin(), verts.end()).size() != verts.size()) return false;
    const Graph &g = levi.graph();
    for (size_t t = 0; t < verts.size(); ++t)
        if (!g.has_edge(verts[t], verts[(t + 1) % verts.size()])) return false;
    int induced_edges = 0;
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) ++induced_edges;
    return induced_edges == 2 * n;
}

}  // namespace

ValidationReport validate_witness(const Arrangement &arr, const LeviGraph &levi, const InducedCycleWitness &w) {
    ValidationReport r = combinatorial_checks(arr, w);
    bool combinatorial = r.ok();
    bool levi_ok = levi_route(arr, levi, w);
    r.add("levi-route", levi_ok, "alternating sequence must be a cycle spanning exactly 2i Levi edges");
    r.add("routes-agree", combinatorial == levi_ok);
    return r;
}

ValidationReport validate_witness(const Arrangement &arr, const InducedCycleWitness &w) {
    return validate_witness(arr, build_levi(arr), w);
}

std::string to_string(Status s) {
    switch (s) {
        case Status::found: return "found";
        case Status::absent: return "absent";
        case Status::unknown: return "unknown";
    }
    return "?";
}

std::string to_string(LongestResult::Kind k) {
    switch (k) {
        case LongestResult::Kind::found: return "found";
        case LongestResult::Kind::no_induced_cycle: return "no_induced_cycle";
        case LongestResult::Kind::unknown: return "unknown";
    }
    return "?";
}

std::optional<int> CycleSpectrum::longest_found() const {
    std::optional<int> best;
    for (const auto &[i, r] : by_length)
        if (r.status == Status::found) best = i;
    return best;
}

bool CycleSpectrum::has_unknown() const {
    for (const auto &[i, r] : by_length)
        if (r.status == Status::unknown) return true;
    return false;
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr std::uint64_t flush_interval = 1024;

struct Tables {
    int k = 0;
    Mask all = 0;
    std::vector<Mask> point_lines;
    std::vector<std::vector<int>> line_points;
    std::vector<int> meet;  // k*k
    std::vector<Mask> above;

    explicit Tables(const Arrangement &arr) : k(arr.line_count()) {
        if (k > 64) throw TooLarge("the cycle solver handles at most 64 lines, got " + std::to_string(k));
        all = k == 64 ? ~Mask{0} : bit(k) - 1;
        for (int p = 0; p < arr.point_count(); ++p) {
            Mask m = 0;
            for (int l : arr.lines_through(PointId{p})) m |= bit(l);
            point_lines.push_back(m);
        }
        for (int l = 0; l < k; ++l) line_points.push_back(arr.points_on(LineId{l}));
        meet.assign(static_cast<size_t>(k) * k, -1);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (a != b) meet[a * k + b] = arr.meet(LineId{a}, LineId{b}).value;
        for (int l = 0; l < k; ++l) above.push_back(all & ~((l + 1 >= 64) ? ~Mask{0} : bit(l + 1) - 1));
    }
};

enum class Mode { targets, longest };

constexpr std::int64_t none = std::numeric_limits<std::int64_t>::max();

struct Shared {
    const Tables &tab;
    Mode mode;
    int lo = 0, hi = 0;  // target lengths, inclusive
    std::uint64_t budget = 0;
    std::uint64_t interval = flush_interval;  // nodes a worker counts locally before publishing
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::vector<std::atomic<std::int64_t>> found_at;  // per length, least prefix that found it
    std::atomic<int> global_best{0};

    Shared(const Tables &t, Mode m, int lo_, int hi_, std::uint64_t b)
        : tab(t), mode(m), lo(lo_), hi(hi_), budget(b), found_at(std::max(hi_ + 1, 1)) {
        if (budget) interval = std::clamp<std::uint64_t>(budget / 16, 1, flush_interval);
        for (auto &f : found_at) f.store(none);
    }

    void lower_found(int len, std::int64_t idx) {
        auto cur = found_at[len].load();
        while (idx < cur && !found_at[len].compare_exchange_weak(cur, idx)) {
        }
    }

    void raise_best(int len) {
        int cur = global_best.load();
        while (len > cur && !global_best.compare_exchange_weak(cur, len)) {
        }
    }
};

struct PrefixResult {
    bool completed = false;
    std::map<int, InducedCycleWitness> found;
    int best = 0;
    std::optional<InducedCycleWitness> best_witness;
};

class Worker {
   public:
    explicit Worker(Shared &sh) : sh_(sh), tab_(sh.tab), lines_(tab_.k + 1), points_(tab_.k + 1) {}

    PrefixResult run_prefix(std::int64_t idx, int l1, int l2) {
        idx_ = idx;
        result_ = PrefixResult{};
        aborted_ = false;
        if (sh_.mode == Mode::targets && !any_needed(3, sh_.hi)) {
            result_.completed = true;
            return result_;
        }
        lines_[0] = l1;
        lines_[1] = l2;
        points_[0] = tab_.meet[l1 * tab_.k + l2];
        count_node();
        if (!aborted_) dfs(2, bit(l1) | bit(l2), tab_.point_lines[points_[0]]);
        result_.completed = !aborted_;
        return std::move(result_);
    }

    void flush() {
        if (local_nodes_) {
            sh_.nodes.fetch_add(local_nodes_);
            local_nodes_ = 0;
        }
    }

   private:
    bool needed(int len) const {
        return result_.found.find(len) == result_.found.end() && sh_.found_at[len].load(std::memory_order_relaxed) > idx_;
    }

    bool any_needed(int from, int to) const {
        for (int len = std::max(from, sh_.lo); len <= std::min(to, sh_.hi); ++len)
            if (needed(len)) return true;
        return false;
    }

    void count_node() {
        if (++local_nodes_ >= sh_.interval) {
            std::uint64_t total = sh_.nodes.fetch_add(local_nodes_) + local_nodes_;
            local_nodes_ = 0;
            if (sh_.budget && total >= sh_.budget) sh_.stop.store(true);
        }
        if (sh_.stop.load(std::memory_order_relaxed)) aborted_ = true;
    }

    InducedCycleWitness witness(int t, int closing) const {
        InducedCycleWitness w;
        w.lines.assign(lines_.begin(), lines_.begin() + t);
        w.points.assign(points_.begin(), points_.begin() + (t - 1));
        w.points.push_back(closing);
        return w;
    }

    void on_close(int t, int q) {
        if (sh_.mode == Mode::targets) {
            if (t >= sh_.lo && t <= sh_.hi && needed(t)) {
                result_.found.emplace(t, witness(t, q));
                sh_.lower_found(t, idx_);
            }
        } else if (t > result_.best) {
            result_.best = t;
            result_.best_witness = witness(t, q);
            sh_.raise_best(t);
        }
    }

    bool may_extend(int t, int avail) const {
        if (sh_.mode == Mode::targets) return t < sh_.hi && any_needed(t + 1, t + avail);
        int reach = t + avail;
        return reach > result_.best && reach >= sh_.global_best.load(std::memory_order_relaxed);
    }

    // Some point q on the first line, off every chosen line but the first,
    // must still admit a future last line (greater than lines_[1]).
    bool can_close_later(Mask chosen, Mask avail) const {
        const int first = lines_[0];
        const Mask later = avail & tab_.above[lines_[1]];
        for (int q : tab_.line_points[first])
            if ((tab_.point_lines[q] & chosen) == bit(first) && (tab_.point_lines[q] & later)) return true;
        return false;
    }

    void dfs(int t, Mask chosen, Mask blocked) {
        const int first = lines_[0], last = lines_[t - 1];
        if (t >= 3 && lines_[1] < last) {
            int q = tab_.meet[last * tab_.k + first];
            if ((tab_.point_lines[q] & chosen) == (bit(last) | bit(first))) on_close(t, q);
        }
        const Mask avail = tab_.all & ~chosen & ~blocked & tab_.above[first];
        if (!may_extend(t, std::popcount(avail))) return;
        if (!can_close_later(chosen, avail)) return;
        for (int p : tab_.line_points[last]) {
            const Mask through = tab_.point_lines[p];
            if ((through & chosen) != bit(last)) continue;
            Mask cand = through & avail;
            while (cand) {
                int next = std::countr_zero(cand);
                cand &= cand - 1;
                count_node();
                if (aborted_) return;
                lines_[t] = next;
                points_[t - 1] = p;
                dfs(t + 1, chosen | bit(next), blocked | through);
                if (aborted_) return;
                if (!may_extend(t, std::popcount(avail))) return;
            }
        }
    }

    Shared &sh_;
    const Tables &tab_;
    std::vector<int> lines_;
    std::vector<int> points_;
    std::int64_t idx_ = 0;
    PrefixResult result_;
    bool aborted_ = false;
    std::uint64_t local_nodes_ = 0;
};

struct RunOutcome {
    std::vector<PrefixResult> prefixes;
    bool complete = true;
    std::uint64_t nodes = 0;
};

RunOutcome run_search(Shared &sh, int threads) {
    const int k = sh.tab.k;
    std::vector<std::pair<int, int>> prefixes;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) prefixes.emplace_back(a, b);

    RunOutcome out;
    out.prefixes.resize(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        Worker w(sh);
        while (!sh.stop.load()) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) break;
            out.prefixes[i] = w.run_prefix(static_cast<std::int64_t>(i), prefixes[i].first, prefixes[i].second);
        }
        w.flush();
    };
    threads = std::max(1, threads);
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto &th : pool) th.join();
    }
    for (const auto &p : out.prefixes) out.complete = out.complete && p.completed;
    out.nodes = sh.nodes.load();
    return out;
}

}  // namespace

CycleSpectrum spectrum(const Arrangement &arr, int i_max, const SearchOptions &opts) {
    if (i_max < 3) throw BadLength("induced cycles need at least 3 lines (i >= 3), got i_max = " + std::to_string(i_max));
    Tables tab(arr);
    CycleSpectrum spec;
    spec.i_max = i_max;
    const int reachable = std::min({i_max, arr.line_count(), arr.point_count()});
    if (reachable >= 3) {
        Shared sh(tab, Mode::targets, 3, reachable, opts.budget);
        RunOutcome run = run_search(sh, opts.threads);
        spec.nodes = run.nodes;
        for (int len = 3; len <= reachable; ++len) {
            ExistsResult r;
            r.status = run.complete ? Status::absent : Status::unknown;
            for (const auto &p : run.prefixes) {
                auto it = p.found.find(len);
                if (it != p.found.end()) {
                    r.status = Status::found;
                    r.witness = it->second;
                    break;
                }
            }
            r.nodes = run.nodes;
            spec.by_length[len] = r;
        }
    }
    for (int len = std::max(3, reachable + 1); len <= i_max; ++len) spec.by_length[len] = {Status::absent, std::nullopt, 0};
    return spec;
}

ExistsResult exists_cycle(const Arrangement &arr, int i, const SearchOptions &opts) {
    if (i < 3) throw BadLength("induced cycles need at least 3 lines (i >= 3), got i = " + std::to_string(i));
    Tables tab(arr);
    if (i > std::min(arr.line_count(), arr.point_count())) return {Status::absent, std::nullopt, 0};
    Shared sh(tab, Mode::targets, i, i, opts.budget);
    RunOutcome run = run_search(sh, opts.threads);
    ExistsResult r;
    r.nodes = run.nodes;
    r.status = run.complete ? Status::absent : Status::unknown;
    for (const auto &p : run.prefixes) {
        auto it = p.found.find(i);
        if (it != p.found.end()) {
            r.status = Status::found;
            r.witness = it->second;
            break;
        }
    }
    return r;
}

LongestResult longest_cycle(const Arrangement &arr, const SearchOptions &opts) {
    Tables tab(arr);
    Shared sh(tab, Mode::longest, 3, tab.k, opts.budget);
    RunOutcome run = run_search(sh, opts.threads);
    LongestResult r;
    r.nodes = run.nodes;
    for (const auto &p : run.prefixes) {
        if (p.best > r.length) {
            r.length = p.best;
            r.witness = p.best_witness;
        }
    }
    if (!run.complete) r.kind = LongestResult::Kind::unknown;
    else
        r.kind = r.length >= 3 ? LongestResult::Kind::found : LongestResult::Kind::no_induced_cycle;
    return r;
}

}  // namespace levicyc

// Command-line front end: build arrangements, inspect them, search for
// induced cycles and check claims.
//
// Exit codes: 0 success, 1 a claim was refuted (or solver and oracle
// disagree), 2 usage or input error, 3 undecided (budget exhausted).

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "levicyc/builders.hpp"
#include "levicyc/cycles.hpp"
#include "levicyc/errors.hpp"
#include "levicyc/io.hpp"
#include "levicyc/levi.hpp"
#include "levicyc/oracle.hpp"
#include "levicyc/realization.hpp"
#include "levicyc/theorems.hpp"

namespace {

using namespace levicyc;
using nlohmann::json;

constexpr int exit_ok = 0, exit_refuted = 1, exit_usage = 2, exit_unknown = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FamilyFlags {
    std::optional<long long> k, a, b, n, m;
    std::vector<int> chosen;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--k", k, "line count (near_pencil, generic) or YZ line count (a_w_k)");
        cmd->add_option("--a", a, "lines through the first modular point (two_modular)");
        cmd->add_option("--b", b, "lines through the second modular point (two_modular)");
        cmd->add_option("--n", n, "ceva parameter");
        cmd->add_option("--m", m, "supersolvable_mu3 / a_w_k parameter");
        cmd->add_option("--chosen", chosen, "a_w_k exponents")->delimiter(',');
    }

    // Flags override whatever the base already has.
    FamilyInfo apply(FamilyInfo base) const {
        auto set = [&](const char *key, const std::optional<long long> &v) {
            if (v) base.params[key] = *v;
        };
        set("k", k);
        set("a", a);
        set("b", b);
        set("n", n);
        set("m", m);
        if (!chosen.empty()) base.chosen = chosen;
        return base;
    }
};

struct Common {
    std::string format = "table";
    int threads = 1;
    std::uint64_t budget = 0;
    bool timing = false;

    void add_to(CLI::App *cmd, bool search) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
        if (search) {
            cmd->add_option("--threads", threads, "solver threads")->check(CLI::PositiveNumber);
            cmd->add_option("--budget", budget, "search node budget, 0 for unlimited");
            cmd->add_flag("--timing", timing, "include node counts and wall time");
        }
    }

    SearchOptions options() const { return {budget, threads}; }
    bool json() const { return format == "json"; }
};

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

Arrangement load(const std::string &path) { return read_arrangement(slurp(path)); }

int cmd_build(const std::string &family, const FamilyFlags &flags, bool coords, const std::string &out) {
    FamilyInfo info = flags.apply({family, {}, {}});
    if (family == "ceva" && info.params.count("n") && info.params["n"] == 3)
        std::cerr << "warning: ceva with n = 3 merges the triple points and the n-fold points (t_3 = 12)\n";
    Arrangement arr = build_family(info);
    if (coords) {
        auto lines = family_lines(*arr.family());
        if (!lines) throw UsageError("family " + family + " has no coordinate construction");
        arr = attach_coordinates(arr, *lines);
    }
    emit(to_json(arr).dump(2) + "\n", out);
    return exit_ok;
}

int cmd_stats(const std::string &path, const Common &c) {
    Arrangement arr = load(path);
    auto prof = multiplicity_profile(arr);
    auto modular = modular_points(arr);
    auto report = validate_arrangement(arr);
    if (c.json()) {
        json j;
        j["k"] = arr.line_count();
        j["s"] = prof.s;
        j["q"] = prof.q;
        json t = json::object();
        for (auto [r, count] : prof.t) t[std::to_string(r)] = count;
        j["t"] = t;
        json mods = json::array();
        for (auto p : modular) mods.push_back(p.value);
        j["modular_points"] = mods;
        j["valid"] = report.ok();
        if (arr.family()) j["family"] = arr.family()->name;
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "k: " << arr.line_count() << "\n";
    std::cout << "s: " << prof.s << "\n";
    std::cout << "q: " << prof.q << "\n";
    if (arr.family()) std::cout << "family: " << arr.family()->name << "\n";
    std::cout << "multiplicities:\n";
    std::cout << "  r    t_r\n";
    for (auto [r, count] : prof.t) std::cout << "  " << std::left << std::setw(5) << r << count << "\n";
    std::cout << "modular points:";
    if (modular.empty()) std::cout << " none";
    for (auto p : modular) std::cout << " " << arr.point_names()[p.value];
    std::cout << "\n";
    std::cout << "validation: " << (report.ok() ? "pass" : "FAIL") << "\n";
    for (const auto &chk : report.checks)
        if (!chk.passed) std::cout << "  " << chk.name << ": " << chk.detail << "\n";
    return exit_ok;
}

int cmd_levi(const std::string &path, bool dot, bool as_json, const std::string &out) {
    if (dot == as_json) throw UsageError("levi needs exactly one of --dot or --json");
    LeviGraph g = build_levi(load(path));
    emit(dot ? export_dot(g) : export_json(g), out);
    return exit_ok;
}

int status_exit(Status s) { return s == Status::unknown ? exit_unknown : exit_ok; }

int cmd_cycles(const std::string &path, bool longest, std::optional<int> exists, std::optional<int> spec_max,
               bool show_witness, const Common &c) {
    int modes = int(longest) + int(exists.has_value()) + int(spec_max.has_value());
    if (modes != 1) throw UsageError("cycles needs exactly one of --longest, --exists I, --spectrum MAX");
    Arrangement arr = load(path);
    const auto opts = c.options();

    if (longest) {
        auto r = longest_cycle(arr, opts);
        if (c.json()) {
            json j = to_json(r, c.timing);
            if (!show_witness) j.erase("witness");
            std::cout << j.dump(2) << "\n";
        } else {
            if (r.kind == LongestResult::Kind::found) std::cout << "longest: " << 2 * r.length << "\n";
            else if (r.kind == LongestResult::Kind::no_induced_cycle) std::cout << "longest: none\n";
            else
                std::cout << "longest: unknown (at least " << 2 * r.length << ")\n";
            if (show_witness && r.witness) std::cout << "witness: " << describe(arr, *r.witness) << "\n";
            if (c.timing) std::cout << "nodes: " << r.nodes << "\n";
        }
        return r.kind == LongestResult::Kind::unknown ? exit_unknown : exit_ok;
    }
    if (exists) {
        auto r = exists_cycle(arr, *exists, opts);
        if (c.json()) {
            json j = to_json(r, c.timing);
            j["i"] = *exists;
            if (!show_witness) j.erase("witness");
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "C" << 2 * *exists << ": " << to_string(r.status) << "\n";
            if (show_witness && r.witness) std::cout << "witness: " << describe(arr, *r.witness) << "\n";
            if (c.timing) std::cout << "nodes: " << r.nodes << "\n";
        }
        return status_exit(r.status);
    }
    auto s = spectrum(arr, *spec_max, opts);
    if (c.json()) {
        json j = to_json(s, c.timing);
        if (!show_witness)
            for (auto &[key, entry] : j["lengths"].items()) entry.erase("witness");
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "  i  cycle  status\n";
        for (const auto &[i, r] : s.by_length) {
            std::cout << "  " << std::setw(2) << i << "  C" << std::left << std::setw(5) << 2 * i << std::right
                      << to_string(r.status);
            if (show_witness && r.witness) std::cout << "  " << describe(arr, *r.witness);
            std::cout << "\n";
        }
        if (c.timing) std::cout << "nodes: " << s.nodes << "\n";
    }
    return s.has_unknown() ? exit_unknown : exit_ok;
}

void print_report(const Arrangement &arr, const ClaimReport &r, const Common &c) {
    std::cout << "claim: " << r.claim_id << "\n";
    std::cout << "verdict: " << to_string(r.verdict) << "\n";
    if (!r.hypotheses.empty()) std::cout << "hypotheses:\n";
    for (const auto &h : r.hypotheses)
        std::cout << "  [" << (h.holds ? "holds" : "fails") << "] " << h.name
                  << (h.evidence.empty() ? "" : " (" + h.evidence + ")") << "\n";
    if (!r.conclusions.empty()) std::cout << "conclusions:\n";
    for (const auto &k : r.conclusions)
        std::cout << "  [" << to_string(k.result) << "] " << k.description
                  << (k.evidence.empty() ? "" : ": " + k.evidence) << "\n";
    if (!r.notes.empty()) std::cout << "notes:\n";
    for (const auto &n : r.notes) std::cout << "  " << n << "\n";
    (void)arr;
    if (c.timing) std::cout << "nodes: " << r.nodes << ", wall: " << std::fixed << std::setprecision(1) << r.wall_ms << " ms\n";
}

int verdict_exit(const std::vector<ClaimReport> &reports) {
    bool unknown = false;
    for (const auto &r : reports) {
        if (r.verdict == Verdict::refuted) return exit_refuted;
        unknown = unknown || r.verdict == Verdict::unknown;
    }
    return unknown ? exit_unknown : exit_ok;
}

int cmd_verify(const std::string &path, const std::string &claim, bool all, const FamilyFlags &flags, const Common &c) {
    if (claim.empty() == !all) throw UsageError("verify needs exactly one of --claim ID or --all");
    Arrangement arr = load(path);
    FamilyInfo base = arr.family() ? *arr.family() : FamilyInfo{};
    FamilyInfo params = flags.apply(base);
    std::vector<ClaimReport> reports;
    if (all) {
        reports = verify_all(arr, c.options());
    } else {
        const auto &ids = claim_ids();
        if (std::find(ids.begin(), ids.end(), claim) == ids.end()) throw UsageError("unknown claim " + claim);
        try {
            reports.push_back(evaluate_claim(claim, arr, params, c.options()));
        } catch (const TheoremOutOfScope &e) {
            std::cerr << "out of scope: " << e.what() << "\n";
            ClaimReport r;
            r.claim_id = claim;
            r.verdict = Verdict::not_applicable;
            r.notes.push_back(std::string("out of scope: ") + e.what());
            reports.push_back(r);
        }
    }
    if (c.json()) {
        json j = json::array();
        for (const auto &r : reports) j.push_back(to_json(r, c.timing));
        std::cout << (all ? j : j[0]).dump(2) << "\n";
    } else {
        for (size_t i = 0; i < reports.size(); ++i) {
            if (i) std::cout << "\n";
            print_report(arr, reports[i], c);
        }
    }
    return verdict_exit(reports);
}

int cmd_oracle_check(const std::string &path, int cap, const Common &c) {
    Arrangement arr = load(path);
    LeviGraph g = build_levi(arr);
    auto oracle = oracle_longest_induced_cycle(g.graph(), cap);
    auto solver = longest_cycle(arr, c.options());
    if (solver.kind == LongestResult::Kind::unknown) {
        std::cout << "solver: unknown (budget exhausted)\n";
        return exit_unknown;
    }
    int oracle_len = oracle ? static_cast<int>(oracle->size()) : 0;
    int solver_len = solver.kind == LongestResult::Kind::found ? 2 * solver.length : 0;
    bool agree = oracle_len == solver_len;
    if (c.json()) {
        json j{{"solver", solver_len}, {"oracle", oracle_len}, {"agree", agree}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "solver longest: " << solver_len << "\n";
        std::cout << "oracle longest: " << oracle_len << "\n";
        std::cout << (agree ? "agree" : "DISAGREE") << "\n";
    }
    return agree ? exit_ok : exit_refuted;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"levicyc: line arrangements, Levi graphs and induced cycles"};
    app.require_subcommand(1);

    std::string family, out, path, claim;
    bool coords = false, dot = false, as_json = false, longest = false, witness = false, all = false;
    std::optional<int> exists, spec_max;
    int cap = oracle_default_cap;
    FamilyFlags build_flags, verify_flags;
    Common stats_c, cycles_c, verify_c, oracle_c;

    auto *build = app.add_subcommand("build", "build a named family and write its JSON");
    build->add_option("family", family, "family name")->required()->check(CLI::IsMember(family_names()));
    build_flags.add_to(build);
    build->add_flag("--coords", coords, "attach exact coordinates (ceva, supersolvable_mu3, mu4, a_w_k)");
    build->add_option("-o,--output", out, "output file (default stdout)");

    auto *stats = app.add_subcommand("stats", "print k, s, multiplicities and modular points");
    stats->add_option("file", path)->required();
    stats_c.add_to(stats, false);

    auto *levi = app.add_subcommand("levi", "export the Levi graph");
    levi->add_option("file", path)->required();
    levi->add_flag("--dot", dot, "DOT output");
    levi->add_flag("--json", as_json, "JSON output");
    levi->add_option("-o,--output", out, "output file (default stdout)");

    auto *cycles = app.add_subcommand("cycles", "induced cycle queries");
    cycles->add_option("file", path)->required();
    cycles->add_flag("--longest", longest, "longest induced cycle");
    cycles->add_option("--exists", exists, "is there an induced C_{2i}");
    cycles->add_option("--spectrum", spec_max, "existence for every i in [3, MAX]");
    cycles->add_flag("--witness", witness, "print witnesses");
    cycles_c.add_to(cycles, true);

    auto *verify = app.add_subcommand("verify", "check theorem claims");
    verify->add_option("file", path)->required();
    verify->add_option("--claim", claim, "claim id");
    verify->add_flag("--all", all, "every theorem checker plus the claims for the file's family");
    verify_flags.add_to(verify);
    verify_c.add_to(verify, true);

    auto *oracle = app.add_subcommand("oracle-check", "compare the solver with the brute-force oracle");
    oracle->add_option("file", path)->required();
    oracle->add_option("--cap", cap, "oracle vertex cap (at most 64)");
    oracle_c.add_to(oracle, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*build) return cmd_build(family, build_flags, coords, out);
        if (*stats) return cmd_stats(path, stats_c);
        if (*levi) return cmd_levi(path, dot, as_json, out);
        if (*cycles) return cmd_cycles(path, longest, exists, spec_max, witness, cycles_c);
        if (*verify) return cmd_verify(path, claim, all, verify_flags, verify_c);
        if (*oracle) return cmd_oracle_check(path, cap, oracle_c);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

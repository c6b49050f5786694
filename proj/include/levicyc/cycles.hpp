#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "levicyc/arrangement.hpp"
#include "levicyc/levi.hpp"
#include "levicyc/report.hpp"

namespace levicyc {

/// Alternating sequence l_{j1} p_1 l_{j2} ... l_{ji} p_i, where p_t is the
/// point between lines[t] and lines[(t+1) mod i].
struct InducedCycleWitness {
    std::vector<int> lines;
    std::vector<int> points;

    int length() const { return static_cast<int>(lines.size()); }
    friend bool operator==(const InducedCycleWitness &, const InducedCycleWitness &) = default;
};

/// Rotates and reflects so that lines[0] is the smallest line and
/// lines[1] < lines.back().
InducedCycleWitness canonical_form(const InducedCycleWitness &w);

/// Human-readable form, e.g. "L3 e13 L1 e12 L2 ... L3".
std::string describe(const Arrangement &arr, const InducedCycleWitness &w);

/// Two independent checks that must agree. The combinatorial route tests
/// length, ranges, distinctness, adjacency and inducedness on the incidence;
/// the Levi route tests that the alternating vertex sequence is a cycle of
/// the Levi graph whose vertex set spans exactly 2i edges.
ValidationReport validate_witness(const Arrangement &arr, const InducedCycleWitness &w);
ValidationReport validate_witness(const Arrangement &arr, const LeviGraph &levi, const InducedCycleWitness &w);

enum class Status { found, absent, unknown };

std::string to_string(Status s);

struct SearchOptions {
    std::uint64_t budget = 0;  // search nodes, 0 = unlimited
    int threads = 1;
};

struct ExistsResult {
    Status status = Status::unknown;
    std::optional<InducedCycleWitness> witness;
    std::uint64_t nodes = 0;
};

/// Induced C_{2i}. Throws BadLength for i < 3 and TooLarge for k > 64.
/// For i > min(k, s) the answer is Absent without search.
ExistsResult exists_cycle(const Arrangement &arr, int i, const SearchOptions &opts = {});

struct LongestResult {
    enum class Kind { found, no_induced_cycle, unknown };
    Kind kind = Kind::unknown;
    int length = 0;  // number of lines i; for unknown, the best found so far
    std::optional<InducedCycleWitness> witness;
    std::uint64_t nodes = 0;
};

std::string to_string(LongestResult::Kind k);

/// Largest i with an induced C_{2i}, by branch and bound over canonical
/// line sequences.
LongestResult longest_cycle(const Arrangement &arr, const SearchOptions &opts = {});

struct CycleSpectrum {
    int i_max = 0;
    std::map<int, ExistsResult> by_length;  // 3..i_max
    std::uint64_t nodes = 0;

    /// Largest i with Found, if any.
    std::optional<int> longest_found() const;
    bool has_unknown() const;
};

/// Existence for every i in [3, i_max] from a single search.
CycleSpectrum spectrum(const Arrangement &arr, int i_max, const SearchOptions &opts = {});

}  // namespace levicyc

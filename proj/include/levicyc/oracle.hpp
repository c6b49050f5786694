#pragma once

#include <optional>
#include <set>
#include <vector>

#include "levicyc/levi.hpp"

namespace levicyc {

// Brute-force induced-cycle search on an arbitrary graph. It knows nothing
// about arrangements and shares no code with the line-sequence solver, so
// the two can be checked against each other.

inline constexpr int oracle_default_cap = 40;

/// Vertices of a longest induced cycle (in cycle order), or nullopt if the
/// graph has none. Throws TooLarge if the graph has more than cap vertices
/// or cap exceeds 64.
std::optional<std::vector<int>> oracle_longest_induced_cycle(const Graph &g, int cap = oracle_default_cap);

/// The set of all induced cycle lengths. Same size limits.
std::set<int> oracle_induced_cycle_lengths(const Graph &g, int cap = oracle_default_cap);

/// True if the vertex sequence is an induced cycle of g.
bool is_induced_cycle(const Graph &g, const std::vector<int> &cycle);

}  // namespace levicyc

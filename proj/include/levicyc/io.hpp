#pragma once

#include <string>

#include <json.hpp>

#include "levicyc/arrangement.hpp"
#include "levicyc/cycles.hpp"
#include "levicyc/theorems.hpp"

namespace levicyc {

// JSON formats shared by the CLI and the tests.
//
// Arrangement: { "k", "points": [{"id", "lines"}], "line_names",
// "point_names", optional "coordinates": {"conductor", "lines", "points"}
// with exact strings such as "-3/2" or "e^2 + 1", optional "family":
// {"name", "params", "chosen"} }.

nlohmann::json to_json(const Arrangement &arr);

/// Throws ParseError for malformed input and InvalidArrangement when the
/// incidence fails validation (including duplicate incidences).
Arrangement arrangement_from_json(const nlohmann::json &j);
Arrangement read_arrangement(const std::string &text);

nlohmann::json to_json(const InducedCycleWitness &w);
InducedCycleWitness witness_from_json(const nlohmann::json &j);

// Node counts and wall time depend on scheduling; they are included only
// when with_stats is set so that default output is reproducible.
nlohmann::json to_json(const ExistsResult &r, bool with_stats = false);
nlohmann::json to_json(const LongestResult &r, bool with_stats = false);
nlohmann::json to_json(const CycleSpectrum &s, bool with_stats = false);
nlohmann::json to_json(const ClaimReport &r, bool with_stats = false);

}  // namespace levicyc

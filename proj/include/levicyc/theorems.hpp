#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "levicyc/arrangement.hpp"
#include "levicyc/cycles.hpp"

namespace levicyc {

enum class Verdict { confirmed, refuted, not_applicable, unknown };
enum class Truth { holds, fails, unknown };

std::string to_string(Verdict v);
std::string to_string(Truth t);

struct Hypothesis {
    std::string name;
    bool holds = false;
    std::string evidence;
};

struct ConclusionCheck {
    std::string description;
    Truth result = Truth::unknown;
    std::string evidence;
};

/// Outcome of checking one claim on one arrangement. The verdict is
/// NotApplicable iff a hypothesis fails; otherwise Refuted if any
/// conclusion check fails, Unknown if any is undecided, else Confirmed.
struct ClaimReport {
    std::string claim_id;
    std::vector<Hypothesis> hypotheses;
    std::vector<ConclusionCheck> conclusions;
    Verdict verdict = Verdict::unknown;
    std::vector<std::string> notes;
    std::vector<InducedCycleWitness> witnesses;
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    double wall_ms = 0;

    void finalize();
};

// Theorem checkers. Each evaluates the hypotheses from the incidence data and,
// when they hold, tests the conclusion with the exact solver.

/// t_k = 0 implies an induced C6.
ClaimReport verify_c6(const Arrangement &arr, const SearchOptions &opts = {});

/// t_k = t_{k-1} = 0 implies an induced C8.
ClaimReport verify_c8(const Arrangement &arr, const SearchOptions &opts = {});

/// Case analysis for C10, for every q-fold point. Throws TheoremOutOfScope
/// when k >= 10 but no case matches any q-fold point.
ClaimReport verify_c10(const Arrangement &arr, const SearchOptions &opts = {});

/// Bounds for arrangements whose largest multiplicity is 3.
ClaimReport verify_t3_bounds(const Arrangement &arr, const SearchOptions &opts = {});

/// Bounds for arrangements with largest multiplicity q >= 3.
ClaimReport verify_tq_bounds(const Arrangement &arr, const SearchOptions &opts = {});

/// A modular point rules out an induced C_{2k}.
ClaimReport verify_no_2k_supersolvable(const Arrangement &arr, const SearchOptions &opts = {});

/// Largest m for which the a-w-k claim (iii) is searched; beyond it the
/// verdict is Unknown.
inline constexpr int a_w_k_search_limit = 7;

/// Claims about specific families. Parameters use the FamilyInfo keys
/// ("k", "a", "b", "n", "m") plus chosen exponents for a-w-k.
const std::vector<std::string> &named_claim_ids();

/// All claim ids understood by evaluate_claim: the theorem checkers
/// ("c6", "c8", "c10", "t3-bounds", "tq-bounds", "no-2k-supersolvable")
/// and the named claims.
const std::vector<std::string> &claim_ids();

/// Family a named claim is about, with its default parameters.
FamilyInfo claim_family(const std::string &claim_id, const FamilyInfo &params);

/// Builds the family arrangement and checks the named claim on it.
ClaimReport verify_named_claim(const std::string &claim_id, const FamilyInfo &params, const SearchOptions &opts = {});

/// Checks a claim on a given arrangement. For named claims the arrangement
/// must have the incidence of the claimed family (up to point order), which
/// is recorded as a hypothesis; params fill in the family parameters.
ClaimReport evaluate_claim(const std::string &claim_id, const Arrangement &arr, const FamilyInfo &params,
                           const SearchOptions &opts = {});

/// Every theorem checker plus the named claims for the arrangement's family.
/// TheoremOutOfScope becomes a NotApplicable report with a note.
std::vector<ClaimReport> verify_all(const Arrangement &arr, const SearchOptions &opts = {});

}  // namespace levicyc

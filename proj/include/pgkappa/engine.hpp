#pragma once

#include "pgkappa/bounds.hpp"
#include "pgkappa/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pgkappa {

/// Which decision rule produced the connectivity value. Names are part of the
/// stable JSON output.
enum class Rule {
    PrimePower,
    R2,
    R3_SmallPrime3,
    R3_Prime2,
    LargePhi,
    SquarefreeR4,
    NrGe2,
    R4_Nr1,
    R5_Nr1_P3,
    CandidateEnum,
};

std::string rule_name(Rule rule);

struct Uniqueness {
    enum class Tag { Unique, ExactFamily, CandidatesOnly };
    Tag tag = Tag::CandidatesOnly;
    long long count = 0;

    static Uniqueness unique() { return {Tag::Unique, 1}; }
    static Uniqueness exact_family(long long k) { return {Tag::ExactFamily, k}; }
    static Uniqueness candidates_only(long long k) { return {Tag::CandidatesOnly, k}; }
    std::string tag_name() const;
};

struct Candidate {
    CutSetDescriptor descriptor;
    BoundValue bound;
};

struct KappaResult {
    FactoredInteger n;
    Int kappa;
    Rule rule = Rule::PrimePower;
    std::vector<CutSetDescriptor> minimizers;
    Uniqueness uniqueness;
    std::vector<Candidate> candidates;
};

/// Candidate cut-sets with exact sizes. For r >= 4 this is the narrowed list
/// {Z_r^1} + {Z_a^{e_a} : e_a >= 2} + all X tuples; for r in {2,3} every Z_a^s
/// plus, when r = 3, every X tuple (used for cross-checks).
std::vector<Candidate> candidates(const FactoredInteger& f);

/// Minimum over the candidate table; cross-check target for the fast paths.
Int candidate_minimum(const FactoredInteger& f);

/// The full decision procedure.
KappaResult kappa(const FactoredInteger& f);

/// Minimum cut-set family where a classification is known; throws
/// std::domain_error for prime powers (no cut-sets exist).
std::pair<std::vector<CutSetDescriptor>, Uniqueness> minimum_cutset_family(
    const FactoredInteger& f);

struct MinimizerCheck {
    CutSetDescriptor descriptor;
    bool disconnects = false;
    bool size_matches = false;
};

struct OracleReport {
    Int n;
    Int engine_kappa;
    long long oracle_kappa = -1;
    bool kappa_match = false;
    std::vector<MinimizerCheck> minimizers;
    bool ok = false;
};

/// Runs the explicit max-flow oracle against the engine; any disagreement or
/// invalid claimed minimizer marks the report not ok.
OracleReport verify_against_oracle(const FactoredInteger& f, long long oracle_limit = 600);

}

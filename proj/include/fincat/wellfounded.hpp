#pragma once

#include "fincat/category.hpp"
#include "fincat/constructions.hpp"
#include "fincat/functor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fincat {

/// An identity-reflecting assignment into the ordinal chain: every
/// non-identity arrow strictly increases the rank.
struct RankFunction {
    std::vector<int> rank; // per object
};

/// A list of composable non-identity morphisms returning to their start.
using CycleWitness = std::vector<int>;

struct StrictWfResult {
    bool holds = false;
    std::optional<RankFunction> rank;  // on success (minimal pointwise)
    std::optional<CycleWitness> cycle; // on failure
};

/// Cycle detection on the relation "a non-identity arrow x -> y exists"
/// (a non-identity endomorphism counts as a self-loop).
StrictWfResult decide_strictly_well_founded(CatPtr c);

/// Minimal rank by well-founded recursion v(y) = sup over non-identity
/// arrows x -> y of v(x)+1; absent when the recursion hits a cycle.
std::optional<RankFunction> rank_function(CatPtr c);

struct StrictSectionResult {
    StagedCategory staged;
    std::optional<Functor> section; // projection . section == identity exactly
};

/// Exhaustive search over stage assignments (each candidate section is one).
StrictSectionResult strict_section(CatPtr c, int stages,
                                   const Limits& limits = default_limits());

struct IsoSectionResult {
    StagedCategory staged;
    std::optional<Functor> section;
    std::optional<NatTransformation> iso; // projection . section => identity, iso components
};

IsoSectionResult section_up_to_iso(CatPtr c, int stages,
                                   const Limits& limits = default_limits());

struct RetractCertificate {
    int stage = 0;
    Functor lift;              // I -> I^(stage)
    NatTransformation unit;    // Id => projection . lift
    NatTransformation counit;  // projection . lift => Id, counit . unit = id
};

std::optional<RetractCertificate> retract_through_stage(CatPtr c, int stages,
                                                        const Limits& limits = default_limits());

/// The headline answer for one category: the locally-presentable theorem
/// holds unconditionally on finite input; the accessible-category theorem
/// holds iff the category is well-founded.
struct Verdict {
    bool theorem_A = false;
    std::string note_L; // why the L-theorem is settled for finite input
    std::optional<RankFunction> rank;  // on the input's objects, via the skeleton
    std::optional<CycleWitness> cycle; // morphisms of the input
};

Verdict decide_well_founded(CatPtr c);

struct ConditionResult {
    std::string label;
    bool holds = false;
    int stage = -1; // stage-indexed conditions only
};

struct CrosscheckReport {
    std::vector<ConditionResult> conditions;
    bool concordant = false;
    std::string discrepancy; // e.g. "SW2/SW5"
    std::string render() const;
};

/// Evaluates SW2..SW5 and W1..W6 by independent routes and asserts that all
/// SW answers agree and all W answers agree. Needs n_max >= |Ob|.
CrosscheckReport crosscheck_characterizations(CatPtr c, int n_max,
                                              const Limits& limits = default_limits());

} // namespace fincat

#pragma once

#include "fincat/category.hpp"
#include "fincat/constructions.hpp"
#include "fincat/functor.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace fincat {

struct ChainEntry {
    int object = -1;
    int morphism = -1; // connects this entry to the next
    bool operator==(const ChainEntry&) const = default;
};

/// An eventually periodic omega-indexed diagram in a finite category.
/// Construction canonicalizes to minimal period, then minimal prefix.
struct PeriodicChain {
    CatPtr category;
    std::vector<ChainEntry> prefix;
    std::vector<ChainEntry> cycle; // nonempty; last morphism targets cycle[0]

    int object_at(int k) const;
    int transition_at(int k) const; // morphism X_k -> X_{k+1}
};

PeriodicChain make_chain(CatPtr c, std::vector<ChainEntry> prefix,
                         std::vector<ChainEntry> cycle);

/// Insert an identity step at position k (unrolled index); the result is a
/// refinement presenting the same ind-object.
PeriodicChain insert_identity_step(const PeriodicChain& x, int k);

struct SetChainEntry {
    int size = 0;
    std::vector<int> map; // forward chains: this -> next; inverse chains: next -> this
    bool operator==(const SetChainEntry&) const = default;
};

/// X_0 -> X_1 -> ... with eventually periodic presentation.
struct FinSetChain {
    std::vector<SetChainEntry> prefix, cycle;
    int size_at(int k) const;
    const std::vector<int>& map_at(int k) const; // X_k -> X_{k+1}
};

FinSetChain make_set_chain(std::vector<SetChainEntry> prefix, std::vector<SetChainEntry> cycle);

/// X_0 <- X_1 <- ... ; entry k stores the map X_{k+1} -> X_k.
struct InverseFinSetChain {
    std::vector<SetChainEntry> prefix, cycle;
    int size_at(int k) const;
    const std::vector<int>& map_from_next(int k) const; // X_{k+1} -> X_k
};

InverseFinSetChain make_inverse_set_chain(std::vector<SetChainEntry> prefix,
                                          std::vector<SetChainEntry> cycle);

/// Sequential colimit: the eventual image E of the period map on the
/// cycle-start set, with cocone maps normalising along the inverse of the
/// period bijection on E.
struct ChainColimit {
    int size() const { return static_cast<int>(eventual.size()); }
    int cocone(int level, int element) const;

    FinSetChain chain;
    std::vector<int> eventual;       // elements of the cycle-start set, sorted
    std::vector<int> period_inverse; // index permutation of `eventual`
    int settle_iterations = 0;
};

ChainColimit colim_of_chain(const FinSetChain& s);

/// Inverse limit: threads correspond to the eventual image of the downward
/// period map; projections trace a thread to any level.
struct ChainLimit {
    int size() const { return static_cast<int>(eventual.size()); }
    int projection(int level, int thread) const;

    InverseFinSetChain chain;
    std::vector<int> eventual;       // elements of the cycle-start set, sorted
    std::vector<int> period_inverse; // index permutation of `eventual`
};

ChainLimit lim_of_inverse_chain(const InverseFinSetChain& s);

/// Hom-set between two ind-objects presented as chains: Lim_i colim_j
/// Hom(X_i, Y_j), with enough bookkeeping to trace representatives.
class IndHom {
public:
    int size() const { return limit.size(); }
    int reference_level() const { return ref_level_; }

    /// Component of a thread at source level m: (target level, morphism).
    std::pair<int, int> representative(int element, int m) const;

    /// Classifies a component at the reference source level back to a thread.
    int from_component(int m, int j, int morphism) const;

    PeriodicChain X, Y;
    std::vector<ChainColimit> colims; // per source level 0..ref+cx-1
    ChainLimit limit;

private:
    friend IndHom ind_hom(const PeriodicChain&, const PeriodicChain&);
    int ref_level_ = 0; // prefix length of the inverse chain
    int jref_ = 0;      // cycle start of every hom chain (Y prefix length)
    int cx_ = 1;
    const ChainColimit& colim_at(int i) const;
    std::vector<int> homset_at(int i, int j) const;
};

IndHom ind_hom(const PeriodicChain& x, const PeriodicChain& y);

/// A family over Ob(I) of ind-objects of C with functorial action along I,
/// as produced by evaluating a chain of functors componentwise.
struct EvaluatedFamily {
    CatPtr index_cat;  // I
    CatPtr target_cat; // C
    std::vector<PeriodicChain> component; // per I-object, canonical

    // functor at each unrolled level of the generating chain
    std::vector<Functor> level_prefix, level_cycle;
    const Functor& functor_at(int k) const;
    int action(int f, int k) const; // component of the level-k functor at f
};

/// E applied to a chain X in a functor category: componentwise evaluation.
EvaluatedFamily apply_E(const FunctorCategoryResult& fc, const PeriodicChain& x);

struct FunctorIndHomResult {
    std::vector<IndHom> per_object;         // aligned with Ob(I)
    std::vector<std::vector<int>> elements; // end tuples: a thread per object
};

/// End over I of the componentwise ind-homs (naturality-subset algorithm).
FunctorIndHomResult hom_in_functor_ind(const EvaluatedFamily& u, const EvaluatedFamily& v);

struct SampleReport {
    int lhs_size = 0;
    int rhs_size = 0;
    bool bijective = false;
};

struct FullFaithfulnessReport {
    std::vector<SampleReport> samples;
    bool all_ok = false;
    std::string render() const;
};

/// For each pair of chains in the functor category, computes the ind-hom on
/// both sides of E and traces the canonical comparison map through both
/// algorithms, asserting a bijection.
FullFaithfulnessReport check_full_faithfulness(
    const FunctorCategoryResult& fc,
    const std::vector<std::pair<PeriodicChain, PeriodicChain>>& samples);

struct CounterexampleStage {
    int stage = 0;
    bool presheaf_ok = false;
    bool has_retract = false;
};

struct CounterexampleReport {
    std::vector<CounterexampleStage> stages;
    int first_certificate = -1; // stage, or -1 when absent throughout
    bool presheaf_all_ok = false;
    std::string render() const;
};

/// Builds I^(n) for n = 1..n_max, verifies the truncated E_x presheaf
/// identity E_x(y, beta) = Hom_I(y, x) at every available stage, and reports
/// the retract search per stage.
CounterexampleReport counterexample_report(CatPtr i, int n_max,
                                           const Limits& limits = default_limits());

/// Seeded random eventually periodic chain in c (used by sampling checks).
PeriodicChain random_chain(CatPtr c, std::mt19937_64& rng, int max_prefix = 2,
                           int max_period = 3);

FinSetChain random_set_chain(std::mt19937_64& rng, int max_size = 5, int max_prefix = 3,
                             int max_period = 4);
InverseFinSetChain random_inverse_set_chain(std::mt19937_64& rng, int max_size = 5,
                                            int max_prefix = 3, int max_period = 4);

/// Chain literal: `chain <cat> prefix [o0 -f0-> o1 ...] cycle [c0 -g0-> ... -gk-> c0]`
struct ChainParseResult {
    std::optional<PeriodicChain> chain;
    std::string error;
};

ChainParseResult parse_chain_literal(CatPtr c, const std::string& text);
std::string serialize_chain_literal(const PeriodicChain& chain);

} // namespace fincat

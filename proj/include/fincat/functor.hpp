#pragma once

#include "fincat/category.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fincat {

/// A functor between finite categories, stored as index maps.
struct Functor {
    CatPtr source;
    CatPtr target;
    std::vector<int> omap; // per source object
    std::vector<int> mmap; // per source morphism

    bool same_maps(const Functor& other) const {
        return omap == other.omap && mmap == other.mmap;
    }
};

/// Verifies source/target, identity and composition preservation.
/// Returns a human-readable problem or nullopt.
std::optional<std::string> functor_violation(const Functor& f);

Functor identity_functor(CatPtr c);
Functor compose_functors(const Functor& g, const Functor& f); // g after f

struct NatTransformation {
    Functor source_functor;
    Functor target_functor;
    std::vector<int> components; // per object of the common source
};

std::optional<std::string> naturality_violation(const NatTransformation& t);

/// All functors source -> target, complete and duplicate-free, in
/// lexicographic order of (omap, mmap). Throws SizeLimitError past the cap.
std::vector<Functor> enumerate_functors(CatPtr source, CatPtr target,
                                        const Limits& limits = default_limits());

/// Streaming variant for exhaustive searches: visits every functor in the
/// same order without materializing the list; stops early when the callback
/// returns false.
void enumerate_functors_visit(CatPtr source, CatPtr target,
                              const std::function<bool(const Functor&)>& visit);

/// All natural transformations F => G between parallel functors, in
/// lexicographic component order.
std::vector<NatTransformation> natural_transformations(const Functor& F, const Functor& G);

/// The functor category C^I together with the tables identifying its objects
/// and morphisms with functors and transformations.
struct FunctorCategoryResult {
    CatPtr category;
    std::vector<Functor> objects;              // per object of `category`
    std::vector<NatTransformation> morphisms;  // per morphism of `category`

    int object_for(const Functor& f) const;           // -1 if absent
    int morphism_for(const NatTransformation& t) const;
};

FunctorCategoryResult functor_category(CatPtr index, CatPtr target,
                                       const Limits& limits = default_limits());

/// Witness for is_equivalence: a quasi-inverse on success, or what failed.
struct EquivalenceWitness {
    bool holds = false;
    std::optional<Functor> quasi_inverse;
    std::string failure; // empty on success
};

EquivalenceWitness is_equivalence(const Functor& f);

struct SkeletonResult {
    CatPtr skeleton;
    Functor to_skeleton; // the equivalence C -> skeleton
    Functor inclusion;   // skeleton -> C (full subcategory on least-id representatives)
    std::vector<int> representative; // per object of C, index of its class rep in C
};

SkeletonResult skeleton(CatPtr c);

struct CauchyResult {
    CatPtr completion;
    Functor embedding;                 // C -> completion, fully faithful
    std::vector<int> splitting_of;     // per completion object: the C-idempotent it splits
};

/// Karoubi envelope: objects are idempotents, morphisms f: e -> e' those
/// with e'.f.e = f; the identity of e is e itself.
CauchyResult cauchy_completion(CatPtr c);

struct PosetReflectionResult {
    CatPtr poset;
    Functor quotient; // C -> poset
};

PosetReflectionResult posetal_reflection(CatPtr c);

struct MorphismWitness {
    bool holds = false;
    int counterexample = -1; // source-category morphism, when !holds
};

MorphismWitness is_identity_reflecting(const Functor& f);
MorphismWitness is_conservative(const Functor& f);

} // namespace fincat

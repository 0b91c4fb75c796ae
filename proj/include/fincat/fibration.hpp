#pragma once

#include "fincat/category.hpp"
#include "fincat/functor.hpp"

#include <vector>

namespace fincat {

/// True iff the full subcategory on `objects` is a sieve in B: every
/// morphism b -> a with a in the subset has b in the subset.
bool is_sieve(const FinCategory& b, const std::vector<int>& objects);

/// All sieves of B as sorted object-index lists, in subset enumeration order.
std::vector<std::vector<int>> sieves(const FinCategory& b);

struct FibrationWitness {
    bool holds = false;
    int object = -1;   // e in the source, when !holds
    int morphism = -1; // f into F(e) in the target with no cartesian lift
};

/// Grothendieck cartesian fibration check by exhaustive lift search: for
/// every e and every f: a -> F(e), some lift of f into e must satisfy the
/// universal property against all (psi, g) with a unique filler.
FibrationWitness is_cartesian_fibration(const Functor& f);

/// The full subcategory of B on the given objects, plus its inclusion.
struct SubcategoryResult {
    CatPtr category;
    Functor inclusion;
};

SubcategoryResult full_subcategory(CatPtr b, const std::vector<int>& objects);

/// Restriction C^B -> C^A along the full subcategory A of B (the functor
/// precomposing with the inclusion). Carries both functor categories.
struct RestrictionResult {
    FunctorCategoryResult over_b;
    FunctorCategoryResult over_a;
    Functor restriction;
};

RestrictionResult restriction_functor(CatPtr b, const std::vector<int>& a_objects, CatPtr c,
                                      const Limits& limits = default_limits());

} // namespace fincat

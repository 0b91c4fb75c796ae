#pragma once

#include "fincat/category.hpp"
#include "fincat/functor.hpp"

#include <vector>

namespace fincat {

/// Same ids, swapped endpoints, transposed composition. Involutive bit-exactly.
CatPtr opposite(CatPtr c);

struct ProductResult {
    CatPtr category;
    CatPtr left, right;
    std::vector<std::pair<int, int>> object_pair;   // per product object
    std::vector<std::pair<int, int>> morphism_pair; // per product morphism

    int object_of(int lo, int ro) const;
    int morphism_of(int lm, int rm) const;
};

ProductResult product(CatPtr c, CatPtr d);

/// The staged category I^(n): objects (x, beta) for beta < n, arrows only
/// strictly increasing in stage (one copy of Hom_I(x,y) per beta < gamma),
/// plus identities. The projection forgets the stage.
struct StagedCategory {
    CatPtr base;
    int stage_count = 0;
    CatPtr category;
    Functor projection;

    std::vector<std::pair<int, int>> object_of;    // staged object -> (base object, stage)
    int staged_object(int base_obj, int stage) const;
    // staged morphism for base morphism m from stage b to stage g (b < g);
    int staged_morphism(int base_mor, int stage_from, int stage_to) const;

private:
    friend StagedCategory build_I_alpha(CatPtr, int, const Limits&);
    std::vector<int> obj_index_;
    std::vector<int> mor_index_;
};

StagedCategory build_I_alpha(CatPtr base, int stages, const Limits& limits = default_limits());

/// Twisted arrow category: objects are morphisms of C, a morphism f -> g is
/// a factorization g = v.f.u; projection lands in C^op x C.
struct TwistedArrowResult {
    CatPtr category;
    ProductResult op_times_c;
    Functor projection; // category -> op_times_c.category
    std::vector<int> base_morphism;              // per tw object
    std::vector<std::pair<int, int>> factor;     // per tw morphism: (u, v) in C
};

TwistedArrowResult twisted_arrow(CatPtr c);

/// Skeletal finite sets of cardinality <= max_size with all functions.
/// Object `n<k>` is {0..k-1}; used to enumerate Set-valued functors.
struct FinSetCategory {
    CatPtr category;
    std::vector<int> size_of;                    // per object
    std::vector<std::vector<int>> table_of;      // per morphism: the function
    int object_of_size(int n) const;
    int morphism_of_table(int src_obj, int tgt_obj, const std::vector<int>& table) const;
};

FinSetCategory finset_category(int max_size);

} // namespace fincat

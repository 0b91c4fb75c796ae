#pragma once

#include "fincat/category.hpp"
#include "fincat/constructions.hpp"
#include "fincat/functor.hpp"
#include "fincat/validate.hpp"

#include <string>
#include <vector>

namespace fincat {

/// A Set-valued functor on C^op x C, stored over the explicit product
/// category: a set size per pair object and a function table per pair
/// morphism. H(u, v) acts H(x, y) -> H(x', y') for u: x' -> x, v: y -> y'.
struct FinBifunctor {
    CatPtr base;        // C
    ProductResult domain; // product(opposite(C), C)
    std::vector<int> value;                 // per domain object
    std::vector<std::vector<int>> action;   // per domain morphism

    int value_at(int x, int y) const { return value[domain.object_of(x, y)]; }
    const std::vector<int>& action_of(int u, int v) const {
        return action[domain.morphism_of(u, v)];
    }
};

/// Functoriality check over the whole product table; empty result means valid.
std::vector<std::string> bifunctor_violations(const FinBifunctor& h);

/// Hom(-, -): H(x, y) = Hom_C(x, y), action by pre/post composition.
FinBifunctor hom_bifunctor(CatPtr c);

/// H(x, y) = Hom_D(F x, G y) for parallel functors F, G: C -> D, with the
/// action (u, v): w -> G(v).w.F(u). Its end is Nat(F, G).
FinBifunctor functor_pair_bifunctor(const Functor& F, const Functor& G);

/// An end element is one value per base object (a family x_c in H(c, c)).
struct EndResult {
    std::vector<std::vector<int>> elements; // each of size |Ob C|
};

/// Naturality-subset algorithm: families (x_c) with H(c, f)(x_c) = H(f, c')(x_{c'}).
EndResult end_naturality_subset(const FinBifunctor& h);

/// Limit over the twisted arrow category of H restricted along the projection.
struct TwistedLimitResult {
    TwistedArrowResult tw;
    std::vector<std::vector<int>> elements; // per tw object
};

TwistedLimitResult end_twisted_limit(const FinBifunctor& h);

/// Runs both algorithms, constructs the canonical comparison in both
/// directions and verifies it is a bijection compatible with projections.
struct CheckedEnd {
    EndResult end;
    TwistedLimitResult limit;
    bool algorithms_agree = false;
    std::vector<int> end_to_limit; // index map under the canonical comparison
};

CheckedEnd end_of_bifunctor(const FinBifunctor& h);

/// Bifunctor file format (identities implicit):
///   bifunctor <name>
///   value <x> <y> = <n>
///   lact <u> <y> = i0 i1 ...   # H(u, id_y), u non-identity
///   ract <v> <x> = i0 i1 ...   # H(id_x, v), v non-identity
struct BifunctorParseResult {
    FinBifunctor bifunctor;
    std::vector<std::string> errors;
    bool ok() const { return errors.empty(); }
};

BifunctorParseResult parse_bifunctor_text(CatPtr base, const std::string& text);
std::string serialize_bifunctor(const FinBifunctor& h, const std::string& name);

} // namespace fincat

#include "fincat/fibration.hpp"

#include <algorithm>

namespace fincat {

bool is_sieve(const FinCategory& b, const std::vector<int>& objects) {
    std::vector<bool> in(b.object_count(), false);
    for (int o : objects) in[o] = true;
    for (int m = 0; m < b.morphism_count(); ++m)
        if (in[b.tgt(m)] && !in[b.src(m)]) return false;
    return true;
}

std::vector<std::vector<int>> sieves(const FinCategory& b) {
    std::vector<std::vector<int>> out;
    const int n = b.object_count();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int o = 0; o < n; ++o)
            if (mask & (1u << o)) subset.push_back(o);
        if (is_sieve(b, subset)) out.push_back(std::move(subset));
    }
    return out;
}

namespace {

// phi: e' -> e is cartesian for F iff every psi: e'' -> e and g: F(e'') -> F(e')
// with F(phi).g = F(psi) admits a unique chi: e'' -> e' over g with phi.chi = psi.
bool is_cartesian(const Functor& F, int phi) {
    const FinCategory& E = *F.source;
    const FinCategory& B = *F.target;
    int eprime = E.src(phi), e = E.tgt(phi);
    for (int e2 = 0; e2 < E.object_count(); ++e2)
        for (int psi : E.hom(e2, e))
            for (int g : B.hom(F.omap[e2], F.omap[eprime])) {
                if (B.compose(F.mmap[phi], g) != F.mmap[psi]) continue;
                int fillers = 0;
                for (int chi : E.hom(e2, eprime))
                    if (F.mmap[chi] == g && E.compose(phi, chi) == psi) ++fillers;
                if (fillers != 1) return false;
            }
    return true;
}

} // namespace

FibrationWitness is_cartesian_fibration(const Functor& F) {
    const FinCategory& E = *F.source;
    const FinCategory& B = *F.target;
    for (int e = 0; e < E.object_count(); ++e) {
        int be = F.omap[e];
        for (int f = 0; f < B.morphism_count(); ++f) {
            if (B.tgt(f) != be) continue;
            bool lifted = false;
            for (int eprime = 0; eprime < E.object_count() && !lifted; ++eprime)
                for (int phi : E.hom(eprime, e)) {
                    if (F.mmap[phi] != f) continue;
                    if (is_cartesian(F, phi)) { lifted = true; break; }
                }
            if (!lifted) return {false, e, f};
        }
    }
    return {true, -1, -1};
}

SubcategoryResult full_subcategory(CatPtr b, const std::vector<int>& objects) {
    const FinCategory& B = *b;
    CategoryBuilder builder(B.name() + "_full");
    std::vector<bool> in(B.object_count(), false);
    for (int o : objects) {
        in[o] = true;
        builder.add_object(B.object_id(o));
    }
    std::vector<bool> keep(B.morphism_count(), false);
    for (int m = 0; m < B.morphism_count(); ++m) {
        keep[m] = in[B.src(m)] && in[B.tgt(m)];
        if (keep[m] && !B.is_identity(m))
            builder.add_morphism(B.morphism_id(m), B.object_id(B.src(m)),
                                 B.object_id(B.tgt(m)));
    }
    for (int g = 0; g < B.morphism_count(); ++g)
        for (int f = 0; f < B.morphism_count(); ++f)
            if (keep[g] && keep[f] && !B.is_identity(g) && !B.is_identity(f) &&
                B.composable(g, f))
                builder.set_compose(B.morphism_id(g), B.morphism_id(f),
                                    B.morphism_id(B.compose(g, f)));
    SubcategoryResult res;
    res.category = builder.build();
    const FinCategory& A = *res.category;
    res.inclusion = Functor{res.category, b, {}, {}};
    res.inclusion.omap.resize(A.object_count());
    res.inclusion.mmap.resize(A.morphism_count());
    for (int o = 0; o < A.object_count(); ++o)
        res.inclusion.omap[o] = B.object_index(A.object_id(o)).value();
    for (int m = 0; m < A.morphism_count(); ++m)
        res.inclusion.mmap[m] = B.morphism_index(A.morphism_id(m)).value();
    return res;
}

RestrictionResult restriction_functor(CatPtr b, const std::vector<int>& a_objects, CatPtr c,
                                      const Limits& limits) {
    RestrictionResult res;
    auto sub = full_subcategory(b, a_objects);
    res.over_b = functor_category(b, c, limits);
    res.over_a = functor_category(sub.category, c, limits);

    const FinCategory& FB = *res.over_b.category;
    res.restriction = Functor{res.over_b.category, res.over_a.category, {}, {}};
    res.restriction.omap.resize(FB.object_count());
    res.restriction.mmap.resize(FB.morphism_count());
    for (int o = 0; o < FB.object_count(); ++o) {
        Functor restricted = compose_functors(res.over_b.objects[o], sub.inclusion);
        int idx = res.over_a.object_for(restricted);
        if (idx < 0) throw CategoryError("restriction: restricted functor not found");
        res.restriction.omap[o] = idx;
    }
    for (int m = 0; m < FB.morphism_count(); ++m) {
        const auto& t = res.over_b.morphisms[m];
        NatTransformation restricted{compose_functors(t.source_functor, sub.inclusion),
                                     compose_functors(t.target_functor, sub.inclusion),
                                     {}};
        restricted.components.resize(sub.category->object_count());
        for (int o = 0; o < sub.category->object_count(); ++o)
            restricted.components[o] = t.components[sub.inclusion.omap[o]];
        int idx = res.over_a.morphism_for(restricted);
        if (idx < 0) throw CategoryError("restriction: restricted transformation not found");
        res.restriction.mmap[m] = idx;
    }
    if (auto viol = functor_violation(res.restriction))
        throw CategoryError("restriction functor invalid: " + *viol);
    return res;
}

} // namespace fincat

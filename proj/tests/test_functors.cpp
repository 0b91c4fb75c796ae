#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fincat/catalog.hpp"
#include "fincat/constructions.hpp"
#include "fincat/validate.hpp"
#include "test_util.hpp"

using namespace fincat;
using test_util::isomorphic_by_search;

namespace {

CatPtr fix(const std::string& name) { return fixture_by_name(name)->category; }

// oracle: transformations as a plain filter over the full component product
int count_transformations_by_filter(const Functor& F, const Functor& G) {
    const FinCategory& C = *F.source;
    const FinCategory& D = *F.target;
    std::vector<std::vector<int>> choices;
    for (int o = 0; o < C.object_count(); ++o) choices.push_back(D.hom(F.omap[o], G.omap[o]));
    long total = 1;
    for (auto& ch : choices) total *= static_cast<long>(ch.size());
    int count = 0;
    for (long code = 0; code < total; ++code) {
        long rem = code;
        std::vector<int> comp(C.object_count());
        for (int o = 0; o < C.object_count(); ++o) {
            comp[o] = choices[o][rem % choices[o].size()];
            rem /= static_cast<long>(choices[o].size());
        }
        bool natural = true;
        for (int m = 0; m < C.morphism_count() && natural; ++m)
            natural = D.compose(G.mmap[m], comp[C.src(m)]) ==
                      D.compose(comp[C.tgt(m)], F.mmap[m]);
        if (natural) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("functor enumeration counts") {
    CHECK(enumerate_functors(fix("walking_arrow"), fix("terminal")).size() == 1);
    CHECK(enumerate_functors(fix("z2"), fix("terminal")).size() == 1);
    CHECK(enumerate_functors(fix("z2"), fix("z2")).size() == 2);
    CHECK(enumerate_functors(fix("walking_arrow"), fix("z2")).size() == 2);
    CHECK(enumerate_functors(fix("walking_arrow"), fix("walking_arrow")).size() == 3);
}

TEST_CASE("every enumerated functor is valid, the list is duplicate-free and ordered") {
    auto fs = enumerate_functors(fix("chain_3"), fix("walking_iso"));
    for (const auto& f : fs) CHECK_FALSE(functor_violation(f).has_value());
    for (size_t i = 1; i < fs.size(); ++i) {
        auto key = [](const Functor& f) { return std::make_pair(f.omap, f.mmap); };
        CHECK(key(fs[i - 1]) < key(fs[i]));
    }
}

TEST_CASE("natural transformations: identity present, counts match the filter oracle") {
    for (const auto& name : {"z2", "walking_arrow", "parallel_pair", "chain_3"}) {
        CatPtr c = fix(name);
        Functor id = identity_functor(c);
        auto ts = natural_transformations(id, id);
        bool has_identity = false;
        for (const auto& t : ts) {
            CHECK_FALSE(naturality_violation(t).has_value());
            bool is_id = true;
            for (int o = 0; o < c->object_count(); ++o)
                if (t.components[o] != c->identity(o)) is_id = false;
            has_identity = has_identity || is_id;
        }
        CHECK(has_identity);
        CHECK(static_cast<int>(ts.size()) == count_transformations_by_filter(id, id));
    }
    // the center of Z/2 has two elements; the walking arrow only the identity
    Functor idz = identity_functor(fix("z2"));
    CHECK(natural_transformations(idz, idz).size() == 2);
    Functor ida = identity_functor(fix("walking_arrow"));
    CHECK(natural_transformations(ida, ida).size() == 1);
}

TEST_CASE("functor category: terminal index gives the category back") {
    for (const auto& name : {"walking_arrow", "z2"}) {
        auto fc = functor_category(fix("terminal"), fix(name));
        CHECK(fc.category->object_count() == fix(name)->object_count());
        CHECK(fc.category->morphism_count() == fix(name)->morphism_count());
        CHECK(isomorphic_by_search(fc.category, fix(name)));
    }
}

TEST_CASE("functor category over discrete 2 matches the square of the target") {
    auto fc = functor_category(fix("discrete_2"), fix("walking_arrow"));
    CHECK(fc.category->object_count() == 4);
    CHECK(fc.category->morphism_count() == 9);
    CHECK(check_invariants(*fc.category).empty());
}

TEST_CASE("functor category of the walking arrow in itself has 3 objects") {
    auto fc = functor_category(fix("walking_arrow"), fix("walking_arrow"));
    CHECK(fc.category->object_count() == 3);
    CHECK(check_invariants(*fc.category).empty());
}

TEST_CASE("functor category object/morphism lookups are consistent") {
    auto fc = functor_category(fix("walking_arrow"), fix("walking_iso"));
    for (int o = 0; o < fc.category->object_count(); ++o)
        CHECK(fc.object_for(fc.objects[o]) == o);
    for (int m = 0; m < fc.category->morphism_count(); ++m)
        CHECK(fc.morphism_for(fc.morphisms[m]) == m);
}

TEST_CASE("functor category enforces its caps") {
    Limits tiny;
    tiny.max_functors = 2;
    CHECK_THROWS_AS(functor_category(fix("discrete_2"), fix("walking_arrow"), tiny),
                    SizeLimitError);
    Limits tiny_mor;
    tiny_mor.max_morphisms = 3;
    CHECK_THROWS_AS(functor_category(fix("discrete_2"), fix("walking_arrow"), tiny_mor),
                    SizeLimitError);
}

TEST_CASE("is_equivalence: identity, collapse of the walking iso, and a failure") {
    CHECK(is_equivalence(identity_functor(fix("span"))).holds);

    // quotient of the walking iso onto the terminal category is an equivalence
    CatPtr wi = fix("walking_iso");
    CatPtr t = fix("terminal");
    auto to_terminal = enumerate_functors(wi, t).at(0);
    auto w = is_equivalence(to_terminal);
    CHECK(w.holds);
    REQUIRE(w.quasi_inverse.has_value());
    CHECK_FALSE(functor_violation(*w.quasi_inverse).has_value());

    // the unique functor Z/2 -> terminal is not faithful
    auto collapse = enumerate_functors(fix("z2"), t).at(0);
    CHECK_FALSE(is_equivalence(collapse).holds);
}

TEST_CASE("skeleton: posets are their own skeletons, the walking iso collapses") {
    auto s1 = skeleton(fix("commutative_square"));
    CHECK(s1.skeleton->object_count() == 4);
    CHECK(is_equivalence(s1.to_skeleton).holds);

    auto s2 = skeleton(fix("walking_iso"));
    CHECK(s2.skeleton->object_count() == 1);
    CHECK(s2.skeleton->morphism_count() == 1);
    CHECK(is_equivalence(s2.to_skeleton).holds);
    // least-id representative: object a
    CHECK(s2.skeleton->object_id(0) == "a");
}

TEST_CASE("skeleton of glued isomorphic arrows is the walking arrow") {
    // two copies of the walking arrow connected by isomorphisms a ~ a2, b ~ b2
    CategoryBuilder b("glued");
    b.add_object("a").add_object("a2").add_object("b").add_object("b2");
    b.add_morphism("ia", "a", "a2").add_morphism("ia_inv", "a2", "a");
    b.add_morphism("ib", "b", "b2").add_morphism("ib_inv", "b2", "b");
    b.add_morphism("f", "a", "b").add_morphism("f2", "a2", "b2");
    b.add_morphism("fx", "a", "b2").add_morphism("fy", "a2", "b");
    b.set_compose("ia_inv", "ia", "id_a").set_compose("ia", "ia_inv", "id_a2");
    b.set_compose("ib_inv", "ib", "id_b").set_compose("ib", "ib_inv", "id_b2");
    // all squares commute: every composite lands on the unique arrow between classes
    b.set_compose("f2", "ia", "fx").set_compose("fy", "ia", "f");
    b.set_compose("f", "ia_inv", "fy").set_compose("fx", "ia_inv", "f2");
    b.set_compose("ib", "f", "fx").set_compose("ib_inv", "fx", "f");
    b.set_compose("ib", "fy", "f2").set_compose("ib_inv", "f2", "fy");
    auto cat = b.build();
    auto s = skeleton(cat);
    CHECK(s.skeleton->object_count() == 2);
    CHECK(s.skeleton->morphism_count() == 3);
    CHECK(is_equivalence(s.to_skeleton).holds);
}

TEST_CASE("cauchy completion of Z/2 adds nothing") {
    auto k = cauchy_completion(fix("z2"));
    CHECK(k.completion->object_count() == 1);
    CHECK(k.completion->morphism_count() == 2);
    CHECK(is_equivalence(k.embedding).holds);
}

TEST_CASE("cauchy completion of the walking idempotent splits it") {
    auto k = cauchy_completion(fix("walking_idempotent"));
    CHECK(k.completion->object_count() == 2);
    CHECK(k.completion->morphism_count() == 5);
    CHECK(check_invariants(*k.completion).empty());

    const FinCategory& K = *k.completion;
    // every idempotent splits: e = s . r with r . s an identity
    for (int e = 0; e < K.morphism_count(); ++e) {
        if (!K.is_idempotent(e)) continue;
        bool splits = false;
        for (int y = 0; y < K.object_count() && !splits; ++y)
            for (int r : K.hom(K.src(e), y))
                for (int s : K.hom(y, K.src(e)))
                    if (K.compose(s, r) == e && K.compose(r, s) == K.identity(y)) {
                        splits = true;
                        break;
                    }
        CHECK(splits);
    }
    // embedding is fully faithful: hom-sets map bijectively
    const FinCategory& C = *fix("walking_idempotent");
    std::vector<int> image;
    for (int m = 0; m < C.morphism_count(); ++m) image.push_back(k.embedding.mmap[m]);
    std::sort(image.begin(), image.end());
    CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());

    // minimality: every object is a retract of an embedded object
    for (int y = 0; y < K.object_count(); ++y) {
        bool retract = false;
        for (int x = 0; x < C.object_count() && !retract; ++x) {
            int ex = k.embedding.omap[x];
            for (int r : K.hom(ex, y))
                for (int s : K.hom(y, ex))
                    if (K.compose(r, s) == K.identity(y)) retract = true;
        }
        CHECK(retract);
    }
}

TEST_CASE("cauchy completion is idempotent up to equivalence on all fixtures") {
    for (const auto& f : catalog()) {
        auto k1 = cauchy_completion(f.category);
        auto k2 = cauchy_completion(k1.completion);
        CHECK(is_equivalence(k2.embedding).holds);
    }
}

TEST_CASE("posetal reflection: iso collapse, poset fixed point, square diamond") {
    auto r1 = posetal_reflection(fix("walking_iso"));
    CHECK(r1.poset->object_count() == 1);

    auto r2 = posetal_reflection(fix("commutative_square"));
    CHECK(r2.poset->object_count() == 4);
    CHECK(r2.poset->morphism_count() == 9); // 4 identities + 5 order relations
    // thinness and the reachability characterisation
    const FinCategory& P = *r2.poset;
    const FinCategory& C = *fix("commutative_square");
    for (int x = 0; x < P.object_count(); ++x)
        for (int y = 0; y < P.object_count(); ++y) CHECK(P.hom(x, y).size() <= 1);
    for (int x = 0; x < C.object_count(); ++x)
        for (int y = 0; y < C.object_count(); ++y) {
            bool reach = x == y || !C.hom(x, y).empty();
            bool po = !P.hom(r2.quotient.omap[x], r2.quotient.omap[y]).empty();
            CHECK(reach == po);
        }

    // a poset is its own reflection
    CHECK(isomorphic_by_search(r2.poset, fix("commutative_square")));

    // idempotent up to isomorphism on every fixture
    for (const auto& f : catalog()) {
        auto once = posetal_reflection(f.category);
        auto twice = posetal_reflection(once.poset);
        CHECK(is_equivalence(twice.quotient).holds);
    }
}

TEST_CASE("identity-reflecting and conservative deciders") {
    CHECK(is_identity_reflecting(identity_functor(fix("z3"))).holds);
    CHECK(is_conservative(identity_functor(fix("z3"))).holds);

    auto r = posetal_reflection(fix("walking_iso"));
    auto idr = is_identity_reflecting(r.quotient);
    CHECK_FALSE(idr.holds);
    CHECK_FALSE(fix("walking_iso")->is_identity(idr.counterexample));

    auto collapse = enumerate_functors(fix("walking_arrow"), fix("terminal")).at(0);
    auto cons = is_conservative(collapse);
    CHECK_FALSE(cons.holds);
    CHECK(fix("walking_arrow")->morphism_id(cons.counterexample) == "f");

    // a full inclusion is conservative and identity-reflecting
    CategoryBuilder b("z2_plus_point");
    b.add_object("x").add_object("y").add_morphism("sigma", "x", "x");
    b.set_compose("sigma", "sigma", "id_x");
    auto big = b.build();
    Functor incl{fix("z2"), big, {}, {}};
    incl.omap = {static_cast<int>(*big->object_index("x"))};
    incl.mmap = {static_cast<int>(*big->morphism_index("id_x")),
                 static_cast<int>(*big->morphism_index("sigma"))};
    REQUIRE_FALSE(functor_violation(incl).has_value());
    CHECK(is_conservative(incl).holds);
    CHECK(is_identity_reflecting(incl).holds);
}

TEST_CASE("posetal reflection quotient is identity-reflecting iff no endos or isos") {
    for (const auto& f : catalog()) {
        const FinCategory& C = *f.category;
        bool clean = true;
        for (int m = 0; m < C.morphism_count(); ++m)
            if (!C.is_identity(m) && (C.src(m) == C.tgt(m) || C.is_iso(m))) clean = false;
        auto r = posetal_reflection(f.category);
        CHECK(is_identity_reflecting(r.quotient).holds == clean);
    }
}

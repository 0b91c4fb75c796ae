#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fincat/catalog.hpp"
#include "fincat/validate.hpp"
#include "fincat/wellfounded.hpp"

using namespace fincat;

namespace {

CatPtr fix(const std::string& name) { return fixture_by_name(name)->category; }

// oracle: every stage assignment that strictly increases along non-identity
// arrows, by brute force (feasible for <= 4 objects)
std::vector<std::vector<int>> all_valid_ranks(const FinCategory& C, int max_rank) {
    std::vector<std::vector<int>> out;
    const int n = C.object_count();
    std::vector<int> r(n, 0);
    auto valid = [&]() {
        for (int m = 0; m < C.morphism_count(); ++m)
            if (!C.is_identity(m) && r[C.src(m)] >= r[C.tgt(m)]) return false;
        return true;
    };
    auto rec = [&](auto&& self, int o) -> void {
        if (o == n) {
            if (valid()) out.push_back(r);
            return;
        }
        for (int v = 0; v <= max_rank; ++v) {
            r[o] = v;
            self(self, o + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

TEST_CASE("strict well-foundedness of the basic fixtures") {
    CHECK(decide_strictly_well_founded(fix("chain_3")).holds);
    CHECK(decide_strictly_well_founded(fix("commutative_square")).holds);

    auto z2 = decide_strictly_well_founded(fix("z2"));
    CHECK_FALSE(z2.holds);
    REQUIRE(z2.cycle.has_value());
    REQUIRE(z2.cycle->size() == 1);
    CHECK(fix("z2")->morphism_id((*z2.cycle)[0]) == "sigma");

    auto wi = decide_strictly_well_founded(fix("walking_iso"));
    CHECK_FALSE(wi.holds);
    REQUIRE(wi.cycle.has_value());
    REQUIRE(wi.cycle->size() == 2);
    CHECK(fix("walking_iso")->morphism_id((*wi.cycle)[0]) == "f");
    CHECK(fix("walking_iso")->morphism_id((*wi.cycle)[1]) == "f_inv");
}

TEST_CASE("cycle witnesses compose back to their start") {
    for (const auto& f : catalog()) {
        auto sw = decide_strictly_well_founded(f.category);
        CHECK(sw.holds == f.strictly_well_founded);
        if (!sw.holds) {
            const FinCategory& C = *f.category;
            int composite = C.compose_path(*sw.cycle);
            CHECK(C.src(composite) == C.tgt(composite));
            for (int m : *sw.cycle) CHECK_FALSE(C.is_identity(m));
        }
    }
}

TEST_CASE("rank function values and minimality") {
    auto r = rank_function(fix("chain_3"));
    REQUIRE(r.has_value());
    CHECK(r->rank == std::vector<int>{0, 1, 2});

    auto d = rank_function(fix("discrete_2"));
    REQUIRE(d.has_value());
    CHECK(d->rank == std::vector<int>{0, 0});

    CHECK_FALSE(rank_function(fix("z2")).has_value());

    // minimal pointwise among all valid assignments, exhaustively
    for (const auto& f : catalog()) {
        if (!f.strictly_well_founded || f.category->object_count() > 4) continue;
        auto mine = rank_function(f.category);
        REQUIRE(mine.has_value());
        auto valid = all_valid_ranks(*f.category, f.category->object_count());
        CHECK_FALSE(valid.empty());
        for (const auto& other : valid)
            for (int o = 0; o < f.category->object_count(); ++o)
                CHECK(mine->rank[o] <= other[o]);
    }
}

TEST_CASE("strict sections of the chain need three stages") {
    auto at3 = strict_section(fix("chain_3"), 3);
    REQUIRE(at3.section.has_value());
    // the found section is the rank section
    auto r = rank_function(fix("chain_3"));
    for (int x = 0; x < 3; ++x)
        CHECK(at3.staged.object_of[at3.section->omap[x]] == std::make_pair(x, r->rank[x]));

    CHECK_FALSE(strict_section(fix("chain_3"), 2).section.has_value());
    for (int n = 1; n <= 4; ++n)
        CHECK_FALSE(strict_section(fix("walking_idempotent"), n).section.has_value());
}

TEST_CASE("strict section exists exactly at one stage past the maximal rank") {
    for (const auto& f : catalog()) {
        if (!f.strictly_well_founded || f.category->object_count() == 0) continue;
        auto r = rank_function(f.category);
        REQUIRE(r.has_value());
        int maxr = 0;
        for (int v : r->rank) maxr = std::max(maxr, v);
        CHECK(strict_section(f.category, maxr + 1).section.has_value());
        if (maxr > 0) CHECK_FALSE(strict_section(f.category, maxr).section.has_value());
    }
}

TEST_CASE("well-foundedness verdicts with transported witnesses") {
    auto wi = decide_well_founded(fix("walking_iso"));
    CHECK(wi.theorem_A); // W holds while SW fails: the discriminating fixture
    REQUIRE(wi.rank.has_value());
    CHECK(wi.rank->rank == std::vector<int>{0, 0});

    auto z2 = decide_well_founded(fix("z2"));
    CHECK_FALSE(z2.theorem_A);
    REQUIRE(z2.cycle.has_value());
    CHECK(fix("z2")->morphism_id((*z2.cycle)[0]) == "sigma");

    auto sq = decide_well_founded(fix("commutative_square"));
    CHECK(sq.theorem_A);
    CHECK(sq.rank->rank == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("verdict agrees with strict well-foundedness of the skeleton") {
    for (const auto& f : catalog()) {
        auto v = decide_well_founded(f.category);
        CHECK(v.theorem_A == f.well_founded);
        auto skel = skeleton(f.category);
        CHECK(v.theorem_A == decide_strictly_well_founded(skel.skeleton).holds);
        if (!v.theorem_A) {
            // the cycle composes to a non-identity endomorphism
            const FinCategory& C = *f.category;
            int composite = C.compose_path(*v.cycle);
            CHECK(C.src(composite) == C.tgt(composite));
            CHECK_FALSE(C.is_identity(composite));
        }
    }
}

TEST_CASE("sections up to isomorphism") {
    // the walking iso already has one at a single stage: the constant functor
    auto wi1 = section_up_to_iso(fix("walking_iso"), 1);
    REQUIRE(wi1.section.has_value());
    REQUIRE(wi1.iso.has_value());
    CHECK_FALSE(naturality_violation(*wi1.iso).has_value());
    for (int comp : wi1.iso->components) CHECK(fix("walking_iso")->is_iso(comp));
    CHECK(section_up_to_iso(fix("walking_iso"), 2).section.has_value());

    for (int n = 1; n <= 4; ++n)
        CHECK_FALSE(section_up_to_iso(fix("z2"), n).section.has_value());

    // a strict section is in particular a section up to isomorphism
    CHECK(section_up_to_iso(fix("chain_3"), 3).section.has_value());
}

TEST_CASE("retract certificates") {
    for (int n = 1; n <= 4; ++n) {
        CHECK_FALSE(retract_through_stage(fix("z2"), n).has_value());
        CHECK_FALSE(retract_through_stage(fix("walking_idempotent"), n).has_value());
    }
    // monotone in the stage count once present
    CHECK_FALSE(retract_through_stage(fix("commutative_square"), 2).has_value());
    for (int n = 3; n <= 5; ++n) {
        auto cert = retract_through_stage(fix("commutative_square"), n);
        REQUIRE(cert.has_value());
        const FinCategory& C = *fix("commutative_square");
        CHECK_FALSE(functor_violation(cert->lift).has_value());
        CHECK_FALSE(naturality_violation(cert->unit).has_value());
        CHECK_FALSE(naturality_violation(cert->counit).has_value());
        for (int x = 0; x < C.object_count(); ++x)
            CHECK(C.compose(cert->counit.components[x], cert->unit.components[x]) ==
                  C.identity(x));
    }
    // a section up to iso yields a retract certificate at the same stage
    CHECK(retract_through_stage(fix("walking_iso"), 1).has_value());
}

TEST_CASE("crosscheck concordance on every fixture") {
    for (const auto& f : catalog()) {
        int n_max = std::max(1, f.category->object_count()) + 1;
        auto rep = crosscheck_characterizations(f.category, n_max);
        CHECK(rep.concordant);
        for (const auto& cond : rep.conditions) {
            bool expect = cond.label[0] == 'S' ? f.strictly_well_founded : f.well_founded;
            CHECK(cond.holds == expect);
        }
    }
}

TEST_CASE("crosscheck report text shape") {
    auto rep = crosscheck_characterizations(fix("walking_iso"), 3);
    std::string text = rep.render();
    CHECK(text.find("SW2: false") != std::string::npos);
    CHECK(text.find("W1: true") != std::string::npos);
    CHECK(text.find("W6: true (stage 3)") != std::string::npos);
    CHECK(text.find("CONCORDANT") != std::string::npos);
}

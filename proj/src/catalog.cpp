#include "fincat/catalog.hpp"

namespace fincat {

namespace {

CatPtr terminal_cat() { return CategoryBuilder("terminal").add_object("t").build(); }

CatPtr discrete2() {
    return CategoryBuilder("discrete_2").add_object("a").add_object("b").build();
}

CatPtr walking_arrow() {
    CategoryBuilder b("walking_arrow");
    b.add_object("a").add_object("b").add_morphism("f", "a", "b");
    return b.build();
}

CatPtr parallel_pair() {
    CategoryBuilder b("parallel_pair");
    b.add_object("a").add_object("b");
    b.add_morphism("f", "a", "b").add_morphism("g", "a", "b");
    return b.build();
}

CatPtr span_cat() {
    CategoryBuilder b("span");
    b.add_object("s").add_object("a").add_object("b");
    b.add_morphism("f", "s", "a").add_morphism("g", "s", "b");
    return b.build();
}

CatPtr cospan_cat() {
    CategoryBuilder b("cospan");
    b.add_object("a").add_object("b").add_object("s");
    b.add_morphism("f", "a", "s").add_morphism("g", "b", "s");
    return b.build();
}

CatPtr commutative_square() {
    CategoryBuilder b("commutative_square");
    b.add_object("a").add_object("b").add_object("c").add_object("d");
    b.add_morphism("ab", "a", "b").add_morphism("ac", "a", "c");
    b.add_morphism("bd", "b", "d").add_morphism("cd", "c", "d");
    b.add_morphism("ad", "a", "d");
    b.set_compose("bd", "ab", "ad").set_compose("cd", "ac", "ad");
    return b.build();
}

CatPtr chain3() {
    CategoryBuilder b("chain_3");
    b.add_object("a").add_object("b").add_object("c");
    b.add_morphism("f_ab", "a", "b").add_morphism("f_bc", "b", "c");
    b.add_morphism("f_ac", "a", "c");
    b.set_compose("f_bc", "f_ab", "f_ac");
    return b.build();
}

CatPtr chain4() {
    CategoryBuilder b("chain_4");
    b.add_object("a").add_object("b").add_object("c").add_object("d");
    b.add_morphism("f_ab", "a", "b").add_morphism("f_bc", "b", "c");
    b.add_morphism("f_cd", "c", "d").add_morphism("f_ac", "a", "c");
    b.add_morphism("f_bd", "b", "d").add_morphism("f_ad", "a", "d");
    b.set_compose("f_bc", "f_ab", "f_ac");
    b.set_compose("f_cd", "f_bc", "f_bd");
    b.set_compose("f_cd", "f_ac", "f_ad");
    b.set_compose("f_bd", "f_ab", "f_ad");
    return b.build();
}

CatPtr walking_iso() {
    CategoryBuilder b("walking_iso");
    b.add_object("a").add_object("b");
    b.add_morphism("f", "a", "b").add_morphism("f_inv", "b", "a");
    b.set_compose("f_inv", "f", "id_a").set_compose("f", "f_inv", "id_b");
    return b.build();
}

CatPtr walking_idempotent() {
    CategoryBuilder b("walking_idempotent");
    b.add_object("x").add_morphism("e", "x", "x").set_compose("e", "e", "e");
    return b.build();
}

CatPtr idempotent_monoid2() {
    CategoryBuilder b("idempotent_monoid_2");
    b.add_object("m").add_morphism("e", "m", "m").set_compose("e", "e", "e");
    return b.build();
}

CatPtr z2() {
    CategoryBuilder b("z2");
    b.add_object("x").add_morphism("sigma", "x", "x");
    b.set_compose("sigma", "sigma", "id_x");
    return b.build();
}

CatPtr z3() {
    CategoryBuilder b("z3");
    b.add_object("x");
    b.add_morphism("g1", "x", "x").add_morphism("g2", "x", "x");
    b.set_compose("g1", "g1", "g2").set_compose("g1", "g2", "id_x");
    b.set_compose("g2", "g1", "id_x").set_compose("g2", "g2", "g1");
    return b.build();
}

} // namespace

const std::vector<Fixture>& catalog() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> out;
        out.push_back({"terminal", terminal_cat(), true, true});
        out.push_back({"discrete_2", discrete2(), true, true});
        out.push_back({"walking_arrow", walking_arrow(), true, true});
        out.push_back({"parallel_pair", parallel_pair(), true, true});
        out.push_back({"span", span_cat(), true, true});
        out.push_back({"cospan", cospan_cat(), true, true});
        out.push_back({"commutative_square", commutative_square(), true, true});
        out.push_back({"chain_3", chain3(), true, true});
        out.push_back({"chain_4", chain4(), true, true});
        out.push_back({"walking_iso", walking_iso(), false, true});
        out.push_back({"walking_idempotent", walking_idempotent(), false, false});
        out.push_back({"idempotent_monoid_2", idempotent_monoid2(), false, false});
        out.push_back({"z2", z2(), false, false});
        out.push_back({"z3", z3(), false, false});
        return out;
    }();
    return fixtures;
}

std::optional<Fixture> fixture_by_name(const std::string& name) {
    for (const auto& f : catalog())
        if (f.name == name) return f;
    return std::nullopt;
}

} // namespace fincat

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fincat/catalog.hpp"
#include "fincat/cli.hpp"
#include "fincat/constructions.hpp"
#include "fincat/ends.hpp"
#include "fincat/validate.hpp"
#include "fincat/wellfounded.hpp"

#include <cstdio>
#include <fstream>

using namespace fincat;
using fincat::cli::run;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "cli_tmp_" + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

std::string fixture_file(const std::string& name) {
    return write_temp(name + ".fincat", serialize_category(*fixture_by_name(name)->category));
}

const std::map<std::string, std::string> kEnv{{"FINCAT_SEED", "0"}};

} // namespace

TEST_CASE("validate accepts catalog fixtures and reports stats") {
    auto res = run({"validate", fixture_file("z3")}, kEnv);
    CHECK(res.exit_code == 0);
    CHECK(res.output == "VALID z3: 1 objects, 3 morphisms\n");
}

TEST_CASE("validate rejects a broken file with exit 2 and the violation list") {
    auto path = write_temp("broken.fincat",
                           "category broken\nobject a\nobject b\nobject c\n"
                           "mor f : a -> b\nmor g : b -> c\n");
    auto res = run({"validate", path}, kEnv);
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("MissingComposite: (g, f)") != std::string::npos);
}

TEST_CASE("analyze on Z/2 reports the failing A-verdict with its cycle") {
    auto res = run({"analyze", fixture_file("z2")}, kEnv);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("L-verdict: holds for every C with finite colimits") !=
          std::string::npos);
    CHECK(res.output.find("A-verdict: fails for some C (witness cycle: sigma)") !=
          std::string::npos);
    CHECK(res.output.find("SW1: false") != std::string::npos);
    CHECK(res.output.find("CONCORDANT") != std::string::npos);
}

TEST_CASE("analyze --witness on the square prints the rank function") {
    auto res = run({"analyze", fixture_file("commutative_square"), "--witness"}, kEnv);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("A-verdict: holds for every C") != std::string::npos);
    CHECK(res.output.find("witness rank: a=0 b=1 c=1 d=2") != std::string::npos);
}

TEST_CASE("analyze default output carries the condition table, no witness lines") {
    auto res = run({"analyze", fixture_file("commutative_square")}, kEnv);
    CHECK(res.output.find("SW2: true") != std::string::npos);
    CHECK(res.output.find("W6: true (stage 5)") != std::string::npos);
    CHECK(res.output.find("witness rank") == std::string::npos);
}

TEST_CASE("ialpha prints the staged category in file format") {
    auto res = run({"ialpha", fixture_file("walking_arrow"), "2"}, kEnv);
    CHECK(res.exit_code == 0);
    auto staged = build_I_alpha(fixture_by_name("walking_arrow")->category, 2);
    CHECK(res.output == serialize_category(*staged.category));
    // and the output revalidates
    auto back = load_category_text(res.output);
    CHECK(back.ok());
    CHECK(back.category->morphism_count() == 7);
}

TEST_CASE("counterexample output for Z/2 and the square") {
    auto res = run({"counterexample", fixture_file("z2")}, kEnv);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("stage 1: presheaf ok, retract absent") != std::string::npos);
    CHECK(res.output.find("stage 4: presheaf ok, retract absent") != std::string::npos);
    CHECK(res.output.find("no retract certificate at any tested stage") != std::string::npos);

    auto sq = run({"counterexample", fixture_file("commutative_square"), "--max-stage", "3"},
                  kEnv);
    CHECK(sq.exit_code == 0);
    CHECK(sq.output.find("stage 3: presheaf ok, retract certificate") != std::string::npos);
    CHECK(sq.output.find("first certificate: stage 3") != std::string::npos);
}

TEST_CASE("crosscheck over the catalog and small enumerated categories") {
    auto res = run({"crosscheck", "--max-mor", "2"}, kEnv);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("fixture walking_iso: CONCORDANT") != std::string::npos);
    CHECK(res.output.find("enumerated cat") != std::string::npos);
    // final line
    CHECK(res.output.rfind("CONCORDANT\n") == res.output.size() - 11);
}

TEST_CASE("catalog printing") {
    auto res = run({"catalog", "--name", "z2"}, kEnv);
    CHECK(res.exit_code == 0);
    CHECK(res.output == serialize_category(*fixture_by_name("z2")->category));

    auto all = run({"catalog"}, kEnv);
    CHECK(all.exit_code == 0);
    CHECK(all.output.find("# fixture walking_iso SW=false W=true") != std::string::npos);
    CHECK(all.output.find("# fixture commutative_square SW=true W=true") != std::string::npos);

    CHECK(run({"catalog", "--name", "nope"}, kEnv).exit_code == 2);
}

TEST_CASE("end with the built-in hom bifunctor") {
    auto res = run({"end", fixture_file("z2"), "@hom"}, kEnv);
    CHECK(res.exit_code == 0);
    CHECK(res.output == "end: 2 elements\ntwisted-limit: 2 elements\nagreement: bijective\n");
}

TEST_CASE("end with a bifunctor file") {
    auto h = hom_bifunctor(fixture_by_name("walking_arrow")->category);
    auto path = write_temp("hom_arrow.bif", serialize_bifunctor(h, "hom_arrow"));
    auto res = run({"end", fixture_file("walking_arrow"), path}, kEnv);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("end: 1 elements") != std::string::npos);
    CHECK(res.output.find("agreement: bijective") != std::string::npos);
}

TEST_CASE("indhom on chain literals") {
    auto res = run({"indhom", fixture_file("z2"), "chain z2 prefix [ ] cycle [ x -sigma-> x ]",
                    "chain z2 prefix [ ] cycle [ x -id_x-> x ]"},
                   kEnv);
    CHECK(res.exit_code == 0);
    CHECK(res.output == "indhom: 2 elements\n");

    auto bad = run({"indhom", fixture_file("z2"), "chain z2 prefix [ ] cycle [ ]",
                    "chain z2 prefix [ ] cycle [ x -id_x-> x ]"},
                   kEnv);
    CHECK(bad.exit_code == 2);
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(run({}, kEnv).exit_code == 2);
    CHECK(run({"frobnicate"}, kEnv).exit_code == 2);
    CHECK(run({"validate"}, kEnv).exit_code == 2);
    CHECK(run({"validate", "no_such_file.fincat"}, kEnv).exit_code == 2);
    CHECK(run({"ialpha", fixture_file("z2"), "zero"}, kEnv).exit_code == 2);
}

TEST_CASE("size caps exit with 3 and can be overridden by the environment") {
    std::map<std::string, std::string> env{{"FINCAT_SIZE_CAP", "5"}};
    auto res = run({"ialpha", fixture_file("commutative_square"), "5"}, env);
    CHECK(res.exit_code == 3);
    auto ok = run({"ialpha", fixture_file("commutative_square"), "5"}, kEnv);
    CHECK(ok.exit_code == 0);
}

TEST_CASE("the empty category is analyzable") {
    auto path = write_temp("empty.fincat", "category empty\n");
    auto res = run({"analyze", path}, kEnv);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("A-verdict: holds for every C") != std::string::npos);
    CHECK(res.output.find("CONCORDANT") != std::string::npos);
}

TEST_CASE("analyze verdict never diverges from the library path") {
    for (const auto& name : {"z2", "walking_iso", "chain_3", "walking_idempotent"}) {
        auto res = run({"analyze", fixture_file(name)}, kEnv);
        bool printed_holds = res.output.find("A-verdict: holds for every C") != std::string::npos;
        CHECK(printed_holds == decide_well_founded(fixture_by_name(name)->category).theorem_A);
    }
}

TEST_CASE("outputs are byte-identical across repeated runs") {
    std::vector<std::vector<std::string>> commands = {
        {"analyze", fixture_file("walking_iso")},
        {"counterexample", fixture_file("z3")},
        {"crosscheck", "--max-mor", "2"},
        {"catalog"},
        {"end", fixture_file("z3"), "@hom"},
    };
    for (const auto& cmd : commands) {
        auto a = run(cmd, kEnv);
        auto b = run(cmd, kEnv);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

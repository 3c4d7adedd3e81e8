#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "ratrel/cli.hpp"
#include "ratrel/json_io.hpp"
#include "ratrel/minkowski.hpp"
#include "ratrel/scenario.hpp"

using namespace ratrel;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("boost subcommand: exact Pythagorean speed") {
    auto res = run({"boost", "--speed", "3/5", "--eps", "1/100", "--dim", "2", "--output", "json"});
    REQUIRE(res.code == 0);
    ojson doc = ojson::parse(res.out);
    CHECK(doc.at("w") == "3/5");
    CHECK(doc.at("certificate").at("error_bound") == "0");
    ojson mat = doc.at("certificate").at("output");
    CHECK(mat == ojson::parse(R"([["5/4","-3/4"],["-3/4","5/4"]])"));

    // Emitted matrices re-parse and re-pass the Lorentz check exactly.
    CHECK(is_lorentz(decode_mat(mat)));

    auto again = run({"boost", "--speed", "3/5", "--eps", "1/100", "--dim", "2", "--output", "json"});
    CHECK(again.code == 0);
    CHECK(again.out == res.out);
}

TEST_CASE("boost subcommand rejects |v| >= 1 with a flag-naming diagnostic") {
    auto res = run({"boost", "--speed", "3/2", "--eps", "1/10"});
    CHECK(res.code == 2);
    CHECK(res.err.find("--speed must satisfy |v| < 1") != std::string::npos);
    auto again = run({"boost", "--speed", "3/2", "--eps", "1/10"});
    CHECK(again.err == res.err);
}

TEST_CASE("malformed fractions name the flag and exit 2") {
    auto res = run({"boost", "--speed", "0.5", "--eps", "1/10"});
    CHECK(res.code == 2);
    CHECK(res.err.find("--speed") != std::string::npos);

    auto sphere = run({"sphere", "--target", "1", "x", "--eps", "1/10"});
    CHECK(sphere.code == 2);
    CHECK(sphere.err.find("--target") != std::string::npos);
}

TEST_CASE("model check passes on the built-in scenario and is byte-stable") {
    auto res = run({"model", "check", "--samples", "100", "--seed", "1", "--output", "json"});
    REQUIRE(res.code == 0);
    ojson doc = ojson::parse(res.out);
    CHECK(doc.at("all_passed") == true);
    REQUIRE(doc.at("reports").size() == 6);
    for (const auto& r : doc.at("reports")) CHECK(r.at("status") == "pass");
    CHECK(doc.at("reports")[0].at("light_speed") == "1");

    auto again = run({"model", "check", "--samples", "100", "--seed", "1", "--output", "json"});
    CHECK(again.code == 0);
    CHECK(again.out == res.out);
}

TEST_CASE("model check: single axiom filter and unknown axiom diagnostics") {
    auto res = run({"model", "check", "--samples", "50", "--seed", "2", "--axiom", "AxSelf",
                    "--output", "json"});
    REQUIRE(res.code == 0);
    ojson doc = ojson::parse(res.out);
    REQUIRE(doc.at("reports").size() == 1);
    CHECK(doc.at("reports")[0].at("axiom") == "AxSelf");

    auto bad = run({"model", "check", "--axiom", "AxBogus"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("--axiom") != std::string::npos);
}

TEST_CASE("model check in d = 2 and 3") {
    for (const char* d : {"2", "3"}) {
        auto res = run({"model", "check", "--samples", "60", "--seed", "1", "--dim", d,
                        "--output", "json"});
        REQUIRE(res.code == 0);
        CHECK(ojson::parse(res.out).at("all_passed") == true);
    }
}

TEST_CASE("sphere subcommand") {
    auto res = run({"sphere", "--target", "3", "4", "--eps", "1/100", "--output", "json"});
    REQUIRE(res.code == 0);
    ojson doc = ojson::parse(res.out);
    CHECK(doc.at("point") == ojson::parse(R"(["3/5","4/5"])"));
    CHECK(doc.at("error_bound") == "0");

    auto zero = run({"sphere", "--target", "0", "0", "--eps", "1/100"});
    CHECK(zero.code == 2);
}

TEST_CASE("ortho subcommand") {
    auto res = run({"ortho", "--plane", "1,2", "--toward", "4", "3", "--eps", "1/100", "--dim",
                    "2", "--output", "json"});
    REQUIRE(res.code == 0);
    ojson doc = ojson::parse(res.out);
    CHECK(doc.at("certificate").at("output") ==
          ojson::parse(R"([["4/5","-3/5"],["3/5","4/5"]])"));
    CHECK(doc.at("certificate").at("error_bound") == "0");

    auto bad_plane = run({"ortho", "--plane", "1,1", "--toward", "1", "1", "--eps", "1/10"});
    CHECK(bad_plane.code == 2);
    CHECK(bad_plane.err.find("--plane") != std::string::npos);
}

TEST_CASE("observer and witness subcommands") {
    auto res = run({"observer", "--velocity", "1/2", "1/3", "--eps", "1/1000", "--output",
                    "json"});
    REQUIRE(res.code == 0);
    ojson doc = ojson::parse(res.out);
    Mat lin = decode_mat(doc.at("map").at("matrix"));
    CHECK(is_lorentz(lin));

    auto wit = run({"witness", "--velocity", "1/2", "1/3", "1/5", "--eps", "1/1000", "--seed",
                    "3", "--output", "json"});
    REQUIRE(wit.code == 0);
    ojson wdoc = ojson::parse(wit.out);
    CHECK(wdoc.contains("observer_k"));
    CHECK(wdoc.contains("lambda"));
    auto wit2 = run({"witness", "--velocity", "1/2", "1/3", "1/5", "--eps", "1/1000", "--seed",
                     "3", "--output", "json"});
    CHECK(wit2.out == wit.out);

    auto fast = run({"observer", "--velocity", "1", "0", "--eps", "1/10"});
    CHECK(fast.code == 2);
    CHECK(fast.err.find("--velocity") != std::string::npos);
}

TEST_CASE("poincare subcommand with flags") {
    auto res = run({"poincare", "--translation", "1", "0", "0", "--boost-speed", "1/2",
                    "--pre-plane", "1,2", "--pre-toward", "1", "1", "--post-plane", "1,2",
                    "--post-toward", "1", "-1", "--eps", "1/50", "--dim", "3", "--output",
                    "json"});
    REQUIRE(res.code == 0);
    ojson doc = ojson::parse(res.out);
    CHECK(is_lorentz(decode_mat(doc.at("map").at("matrix"))));
    CHECK(Rational::parse(doc.at("certificate").at("error_bound").get<std::string>()) <
          Rational(1, 50));
}

TEST_CASE("scenario files load, fail validation with named bodies") {
    Model model = builtin_scenario(3);
    std::string path = "test_scenario_tmp.json";
    {
        std::ofstream f(path);
        f << scenario_to_json(model).dump(2);
    }
    auto res = run({"model", "check", "--samples", "40", "--seed", "1", "--scenario", path,
                    "--output", "json"});
    CHECK(res.code == 0);

    ojson broken = scenario_to_json(model);
    broken["observers"][1]["matrix"][1][1] = "7";
    std::string bad_path = "test_scenario_bad_tmp.json";
    {
        std::ofstream f(bad_path);
        f << broken.dump(2);
    }
    auto bad = run({"model", "check", "--scenario", bad_path});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("boost-a") != std::string::npos);
    std::remove(path.c_str());
    std::remove(bad_path.c_str());
}

TEST_CASE("poincare subcommand with a JSON spec file") {
    ojson spec;
    spec["translation"] = {"1", "0", "0", "0"};
    spec["boost_speed"] = "1/3";
    spec["pre"] = {{"rotations", {{{"plane", {1, 2}}, {"toward", {"2", "1"}}}}},
                   {"flip_axes", ojson::array()}};
    std::string path = "test_poincare_spec_tmp.json";
    {
        std::ofstream f(path);
        f << spec.dump(2);
    }
    auto res = run({"poincare", "--spec", path, "--eps", "1/100", "--dim", "4", "--output",
                    "json"});
    REQUIRE(res.code == 0);
    ojson doc = ojson::parse(res.out);
    CHECK(is_lorentz(decode_mat(doc.at("map").at("matrix"))));
    CHECK(doc.at("map").at("translation") == ojson::parse(R"(["1","0","0","0"])"));
    std::remove(path.c_str());

    auto missing = run({"poincare", "--spec", "does_not_exist_tmp.json", "--eps", "1/10"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("--spec") != std::string::npos);

    // A structurally wrong spec file (rotation without a plane) is a usage
    // error, not a crash.
    ojson bad;
    bad["pre"] = {{"rotations", {{{"toward", {"1", "1"}}}}}};
    std::string bad_path = "test_poincare_bad_spec_tmp.json";
    {
        std::ofstream f(bad_path);
        f << bad.dump();
    }
    auto malformed = run({"poincare", "--spec", bad_path, "--eps", "1/10"});
    CHECK(malformed.code == 2);
    std::remove(bad_path.c_str());
}

TEST_CASE("witness JSON replays through the worldview predicate") {
    auto res = run({"witness", "--velocity", "2/5", "-1/3", "1/7", "--eps", "1/100000", "--seed",
                    "11", "--output", "json"});
    REQUIRE(res.code == 0);
    ojson doc = ojson::parse(res.out);

    PoincareMap k = decode_poincare(doc.at("observer_k"));
    Vec x = decode_vec(doc.at("x"));
    Vec y = decode_vec(doc.at("y"));
    Rational lambda = Rational::parse(doc.at("lambda").get<std::string>());
    std::vector<Rational> achieved = decode_rational_list(doc.at("achieved"));

    Model model = builtin_scenario(4);
    const PoincareMap& id = model.find("Id")->observer();
    Body kb{"k", k};
    CHECK(worldview(id, kb, x));
    CHECK(worldview(id, kb, y));
    CHECK(y - x == lambda * Vec::from_parts(Rational(1), achieved));
}

TEST_CASE("RATREL_OUTPUT picks the default output mode") {
    setenv("RATREL_OUTPUT", "json", 1);
    auto res = run({"sphere", "--target", "3", "4", "--eps", "1/100"});
    unsetenv("RATREL_OUTPUT");
    REQUIRE(res.code == 0);
    ojson doc = ojson::parse(res.out);
    CHECK(doc.at("command") == "sphere");

    auto human = run({"sphere", "--target", "3", "4", "--eps", "1/100"});
    CHECK(human.out.find("point = (3/5, 4/5)") != std::string::npos);
}

TEST_CASE("help exits 0, unknown flags exit 2") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"boost", "--nope", "1"}).code == 2);
    CHECK(run({}).code == 2);
}

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "schober/schobercli.hpp"

using namespace schober;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
    args.insert(args.begin(), "schober");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p.string();
}

SuiteConfig small_config() {
    SuiteConfig c;
    c.max_n_decat = 3;
    c.max_n_categorified = 2;
    c.degree_bound = 8;
    c.named_degree_bound = 8;
    c.named_cases = false;
    c.demazure_samples = 5;
    c.threads = 1;
    return c;
}

}  // namespace

TEST_CASE("config defaults validate and round-trip") {
    SuiteConfig c;
    CHECK_NOTHROW(c.validate());
    auto back = SuiteConfig::from_json(c.to_json());
    CHECK(back.to_json() == c.to_json());
    CHECK(SuiteConfig::from_json(json::object()).to_json() == c.to_json());
}

TEST_CASE("config rejects bad input") {
    CHECK_THROWS_AS(SuiteConfig::from_json(json{{"max_n_decta", 4}}), std::invalid_argument);
    for (auto j : {json{{"max_n_decat", 1}}, json{{"max_n_decat", 9}}, json{{"max_n_categorified", 5}},
                   json{{"degree_bound", 7}}, json{{"degree_bound", 0}}, json{{"named_degree_bound", -2}},
                   json{{"demazure_samples", 0}}, json{{"threads", -1}}}) {
        CAPTURE(j.dump());
        CHECK_THROWS_AS(SuiteConfig::from_json(j).validate(), std::invalid_argument);
    }
}

TEST_CASE("environment overrides") {
    SuiteConfig c;
    setenv("SCHOBER_THREADS", "3", 1);
    setenv("SCHOBER_OUTPUT_DIR", "/tmp/x", 1);
    c.apply_env();
    unsetenv("SCHOBER_THREADS");
    unsetenv("SCHOBER_OUTPUT_DIR");
    CHECK(c.threads == 3);
    CHECK(c.output_dir == "/tmp/x");
}

TEST_CASE("condition names") {
    auto& n = condition_names();
    CHECK(n.size() == 6);
    CHECK(std::find(n.begin(), n.end(), "(Far-commutativity)") != n.end());
}

TEST_CASE("small suite: passes, deterministic, report round-trips") {
    auto c = small_config();
    auto r1 = run_schober_suite(c);
    CHECK(r1.pass());
    for (auto& name : condition_names()) CHECK(r1.conditions.count(name) == 1);
    auto r2 = run_schober_suite(c);
    CHECK(r1.content().dump() == r2.content().dump());
    auto back = SchoberReport::from_json(r1.to_json());
    CHECK(back.content().dump() == r1.content().dump());
    CHECK(back.pass());

    auto dir = std::filesystem::temp_directory_path() / "schober_report_test";
    std::filesystem::remove_all(dir);
    write_report(r1, dir.string());
    CHECK(std::filesystem::exists(dir / "summary.json"));
    size_t files = 0;
    for (auto& e : std::filesystem::directory_iterator(dir)) files += e.path().extension() == ".json";
    CHECK(files == 1 + r1.conditions.size() + r1.supplementary.size());
    std::filesystem::remove_all(dir);
}

TEST_CASE("a failing case fails the report") {
    auto r = run_schober_suite(small_config());
    auto& s = r.conditions.begin()->second;
    REQUIRE(!s.cases.empty());
    s.cases[0].pass = false;
    CHECK(!r.pass());
    CHECK(r.content()["status"] == "fail");
}

TEST_CASE("demazure suite") {
    auto r = demazure_suite(4, 5, 11);
    CHECK(r.passed());
    CHECK(!r.cases.empty());
}

TEST_CASE("perverse suite and mutations") {
    auto r = perverse_suite();
    CHECK(r.passed());
    for (int n : {2, 3, 4}) {
        auto d = extract_perverse_data(n);
        CHECK(perverse_check(d).passed());
        // perturb one entry of one map
        auto& m = d.maps.begin()->second;
        REQUIRE(m.rows * m.cols > 0);
        m.a[0] = m.a[0] + LaurentPoly(1);
        CAPTURE(n);
        CHECK(!perverse_check(d).passed());
    }
}

TEST_CASE("realized digons") { CHECK(realized_digon_suite(2, 8).passed()); }

TEST_CASE("cli: cube exports") {
    auto r = cli({"cube", "comp", "4", "--dot"});
    CHECK(r.code == 0);
    size_t vertices = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);)
        if (line.find("->") == std::string::npos && line.find("\";") != std::string::npos) ++vertices;
    CHECK(vertices == 8);

    r = cli({"cube", "bifact", "4", "3", "2", "5", "--json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["vertices"].size() == 16);

    r = cli({"cube", "comp", "3", "--json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["vertices"].size() == 4);
}

TEST_CASE("cli: usage errors") {
    CHECK(cli({}).code != 0);
    CHECK(cli({"cube", "comp"}).code != 0);
    CHECK(cli({"cube", "comp", "3", "--dot", "--json"}).code != 0);
    auto r = cli({"cube", "bifact", "4", "3", "2", "2"});
    CHECK(r.code != 0);
    CHECK(!r.err.empty());
    CHECK(cli({"hecke", "verify", "--suite", "nope", "-n", "3"}).code != 0);
    CHECK(cli({"bimod", "verify", "--suite", "a1", "--degree-bound", "7"}).code != 0);
    CHECK(cli({"schober", "run", "--config", "/nonexistent/cfg.json"}).code != 0);
    auto bad = temp_file("schober_bad_cfg.json", R"({"unknown_key": 1})");
    r = cli({"schober", "run", "--config", bad});
    CHECK(r.code != 0);
    CHECK(r.err.find("unknown_key") != std::string::npos);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli: verify commands") {
    auto r = cli({"hecke", "verify", "--suite", "digon", "-n", "3"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["cases"].size() > 0);
    r = cli({"bimod", "verify", "--suite", "a1", "--degree-bound", "8"});
    CHECK(r.code == 0);
    auto path = (std::filesystem::temp_directory_path() / "schober_defect.json").string();
    r = cli({"hecke", "verify", "--suite", "defect", "-n", "3", "--json", path});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(path));
}

TEST_CASE("cli: schober run and perverse check") {
    auto cfg = temp_file("schober_small_cfg.json", small_config().to_json().dump());
    auto r = cli({"schober", "run", "--config", cfg});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["status"] == "pass");

    auto good = temp_file("schober_perv_good.json", extract_perverse_data(3).to_json().dump());
    CHECK(cli({"perverse", "check", "--input", good}).code == 0);
    // zero maps are a valid A1 diagram but violate the A2 invertibility relations
    for (int n : {2, 3}) {
        auto d = extract_perverse_data(n);
        for (auto& [k, m] : d.maps)
            for (auto& e : m.a) e = LaurentPoly();
        auto zero = temp_file("schober_perv_zero.json", d.to_json().dump());
        r = cli({"perverse", "check", "--input", zero});
        CHECK(r.code == (n == 2 ? 0 : 1));
        CHECK(json::parse(r.out)["cases"].size() > 0);
    }
    CHECK(cli({"perverse", "check", "--input", temp_file("schober_perv_bad.json", "{\"shape\": \"a5\"}")}).code != 0);
}

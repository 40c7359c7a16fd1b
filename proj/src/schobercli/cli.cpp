#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "schober/schobercli.hpp"

namespace schober {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void emit(std::ostream& out, const json& j, const std::string& path) {
    if (path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << j.dump(2) << "\n";
}

json suite_json(const SuiteReport& r) {
    json j = r.to_json();
    j["schema"] = 1;
    return j;
}

void summary_line(std::ostream& out, const SuiteReport& r) {
    out << r.suite << ": " << (r.passed() ? "pass" : "fail") << " (" << r.cases.size() - r.failures() << "/"
        << r.cases.size() << ")\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Perverse schober verification toolkit", "schober"};
    app.require_subcommand(1);

    // cube
    auto* cube = app.add_subcommand("cube", "composition cube exports");
    cube->require_subcommand(1);
    int comp_n = 0;
    bool comp_dot = false, comp_json = false;
    auto* comp = cube->add_subcommand("comp", "the cube Comp(n)");
    comp->add_option("n", comp_n, "number of strands")->required()->check(CLI::Range(1, 8));
    auto* cd = comp->add_flag("--dot", comp_dot, "Graphviz output (default)");
    comp->add_flag("--json", comp_json, "JSON output")->excludes(cd);
    int ba = 0, bb = 0, bc = 0, bd = 0;
    bool bif_dot = false, bif_json = false;
    auto* bif = cube->add_subcommand("bifact", "the bifactorization cube Q(ab,cd)");
    bif->add_option("a", ba)->required()->check(CLI::NonNegativeNumber);
    bif->add_option("b", bb)->required()->check(CLI::NonNegativeNumber);
    bif->add_option("c", bc)->required()->check(CLI::NonNegativeNumber);
    bif->add_option("d", bd)->required()->check(CLI::NonNegativeNumber);
    auto* bfd = bif->add_flag("--dot", bif_dot, "Graphviz output (default)");
    bif->add_flag("--json", bif_json, "JSON output")->excludes(bfd);

    // hecke verify
    auto* hecke = app.add_subcommand("hecke", "decategorified identities");
    hecke->require_subcommand(1);
    std::string hsuite, hjson;
    int hn = 0;
    auto* hv = hecke->add_subcommand("verify", "run a Hecke-level suite");
    hv->add_option("--suite", hsuite)->required()->check(CLI::IsMember({"braid", "bialgebra", "squareswitch", "defect", "digon"}));
    hv->add_option("-n", hn, "maximal number of strands")->required()->check(CLI::Range(1, 8));
    hv->add_option("--json", hjson, "write the report to this file");

    // bimod verify
    auto* bimod = app.add_subcommand("bimod", "categorified checks on realized bimodules");
    bimod->require_subcommand(1);
    std::string bsuite, bjson;
    int bD = 0;
    auto* bv = bimod->add_subcommand("verify", "run a bimodule-level suite");
    bv->add_option("--suite", bsuite)->required()->check(CLI::IsMember({"a1", "a2", "t22", "expl", "koszul", "pkls"}));
    bv->add_option("--degree-bound", bD, "degree bound D (positive, even)")->required()->check(CLI::Range(2, 64));
    bv->add_option("--json", bjson, "write the report to this file");

    // schober run
    auto* sch = app.add_subcommand("schober", "the full schober report");
    sch->require_subcommand(1);
    std::string config_path;
    auto* run = sch->add_subcommand("run", "run every configured suite");
    run->add_option("--config", config_path, "JSON configuration file")->required();

    // perverse check
    auto* perv = app.add_subcommand("perverse", "perverse-sheaf relation checks");
    perv->require_subcommand(1);
    std::string input_path;
    auto* pc = perv->add_subcommand("check", "check user-supplied matrices");
    pc->add_option("--input", input_path, "JSON file with shape, ranks and maps")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (comp->parsed()) {
            if (comp_json) out << comp_cube_json(comp_n).dump(2) << "\n";
            else out << comp_cube_dot(comp_n);
            return 0;
        }
        if (bif->parsed()) {
            BifactCube q;
            try {
                q = bifact_cube(drop_zeros({ba, bb}), drop_zeros({bc, bd}));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (bif_json) out << bifact_json(q).dump(2) << "\n";
            else out << bifact_dot(q);
            return 0;
        }
        if (hv->parsed()) {
            auto r = run_hecke_suite(hsuite, hn);
            emit(out, suite_json(r), hjson);
            if (!hjson.empty()) summary_line(out, r);
            return r.passed() ? 0 : 1;
        }
        if (bv->parsed()) {
            if (bD % 2) throw UsageError("--degree-bound must be even");
            auto r = bimod_suite(bsuite, bD);
            emit(out, suite_json(r), bjson);
            if (!bjson.empty()) summary_line(out, r);
            return r.passed() ? 0 : 1;
        }
        if (run->parsed()) {
            SuiteConfig cfg;
            try {
                cfg = SuiteConfig::from_json(read_json_file(config_path));
                cfg.apply_env();
                cfg.validate();
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            auto rep = run_schober_suite(cfg);
            if (!cfg.output_dir.empty()) write_report(rep, cfg.output_dir);
            out << rep.to_json().dump(2) << "\n";
            return rep.pass() ? 0 : 1;
        }
        if (pc->parsed()) {
            PerverseData d;
            try {
                d = PerverseData::from_json(read_json_file(input_path));
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            auto r = perverse_check(d);
            out << suite_json(r).dump(2) << "\n";
            return r.passed() ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out << json{{"schema", 1}, {"status", "error"}, {"error", e.what()}}.dump(2) << "\n";
        return 3;
    }
    return 2;
}

}  // namespace schober

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

#include "schober/schobercli.hpp"

using namespace schober;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome suites(std::initializer_list<SuiteReport> rs) {
    bool ok = true;
    std::string detail;
    for (auto& r : rs) {
        ok = ok && r.passed() && !r.cases.empty();
        if (!detail.empty()) detail += ", ";
        detail += r.suite + " " + std::to_string(r.cases.size() - r.failures()) + "/" + std::to_string(r.cases.size());
    }
    return {ok, detail};
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        double limit;  // seconds
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {"Demazure calculus, n <= 5, 50 samples", 30, [] { return suites({demazure_suite(5, 50, 1)}); }},
        {"digon identity, b <= 6; realized digons b <= 3, D = 16", 60,
         [] { return suites({suite_digon(6), realized_digon_suite(3, 16)}); }},
        {"colored braid and fork-slide relations, n <= 5", 120, [] { return suites({suite_braid(5)}); }},
        {"bialgebra relation, a + b <= 6", 120, [] { return suites({suite_bialgebra(6)}); }},
        {"square switch, n <= 5", 60, [] { return suites({suite_squareswitch(5)}); }},
        {"defect vanishing and twist units, n <= 6", 120, [] { return suites({suite_defect(6)}); }},
        {"categorified A1, D = 16", 60, [] { return suites({bimod_suite("a1", 16)}); }},
        {"categorified A2, D = 16", 300, [] { return suites({bimod_suite("a2", 16)}); }},
        {"T22 minimal model, D = 12", 600, [] { return suites({bimod_suite("t22", 12)}); }},
        {"Koszul complexes and PKLS decomposition, D = 16", 600,
         [] { return suites({bimod_suite("koszul", 16), bimod_suite("pkls", 16)}); }},
        {"perverse-sheaf relations and mutations", 30, [] { return suites({perverse_suite()}); }},
        {"end-to-end default run, deterministic", 1800,
         [] {
             SuiteConfig cfg;
             auto a = run_schober_suite(cfg);
             auto b = run_schober_suite(cfg);
             bool same = a.content().dump() == b.content().dump();
             return Outcome{a.pass() && b.pass() && same,
                            std::string("status ") + (a.pass() ? "pass" : "fail") + (same ? ", identical" : ", differs")};
         }},
    };

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = o.pass && secs < c.limit;
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " [" << std::setw(2) << i + 1 << "] " << c.name << ": " << o.detail << " ("
                  << std::fixed << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit
                  << " s)" << std::endl;
    }
    std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed ? 1 : 0;
}

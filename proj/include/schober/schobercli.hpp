#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "schober/bimodcx.hpp"

namespace schober {

struct SuiteConfig {
    int max_n_decat = 6;
    int max_n_categorified = 3;
    int degree_bound = 16;
    int named_degree_bound = 12;  // the named n = 4 cases
    bool decategorified = true;
    bool categorified = true;
    bool named_cases = true;
    bool perverse = true;
    bool demazure = true;
    int demazure_samples = 50;
    unsigned seed = 1;
    std::string output_dir;  // empty: nothing written
    int threads = 0;         // 0: hardware concurrency

    // unknown keys are rejected
    static SuiteConfig from_json(const json& j);
    json to_json() const;
    // throws std::invalid_argument
    void validate() const;
    // SCHOBER_THREADS and SCHOBER_OUTPUT_DIR
    void apply_env();
};

// the five schober conditions and the framing condition
const std::vector<std::string>& condition_names();

struct SchoberReport {
    json config;
    std::map<std::string, SuiteReport> conditions;
    std::map<std::string, SuiteReport> supplementary;
    std::map<std::string, double> timings;  // seconds, kept out of content()

    bool pass() const;
    // deterministic part of the report
    json content() const;
    json to_json() const;
    static SchoberReport from_json(const json& j);
};

SuiteReport suite_from_json(const json& j);

SchoberReport run_schober_suite(const SuiteConfig& cfg);
// one file per suite plus summary.json
void write_report(const SchoberReport& r, const std::string& dir);

// Demazure calculus: reduced-word independence and D_i^2 = 0 on random polynomials of degree <= 8
SuiteReport demazure_suite(int max_n, int samples, unsigned seed);
// extracted A1, A2 and A1 x A1 data, their relations, and single-entry mutations
SuiteReport perverse_suite();
SuiteReport perverse_check(const PerverseData& d);
// realized digons for b <= max_b against qbinom(b, s) Hilb(R_b)
SuiteReport realized_digon_suite(int max_b, int D);

// entry point of the command line tool; returns the exit code
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schober

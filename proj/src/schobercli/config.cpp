#include <cstdlib>
#include <set>
#include <stdexcept>

#include "schober/schobercli.hpp"

namespace schober {

SuiteConfig SuiteConfig::from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
    static const std::set<std::string> known{"schema",         "max_n_decat",    "max_n_categorified", "degree_bound",
                                             "named_degree_bound", "decategorified", "categorified", "named_cases",
                                             "perverse",       "demazure",       "demazure_samples",   "seed",
                                             "output_dir",     "threads"};
    for (auto& [k, v] : j.items())
        if (!known.count(k)) throw std::invalid_argument("config: unknown key " + k);
    if (j.value("schema", 1) != 1) throw std::invalid_argument("config: schema must be 1");
    SuiteConfig c;
    c.max_n_decat = j.value("max_n_decat", c.max_n_decat);
    c.max_n_categorified = j.value("max_n_categorified", c.max_n_categorified);
    c.degree_bound = j.value("degree_bound", c.degree_bound);
    c.named_degree_bound = j.value("named_degree_bound", c.named_degree_bound);
    c.decategorified = j.value("decategorified", c.decategorified);
    c.categorified = j.value("categorified", c.categorified);
    c.named_cases = j.value("named_cases", c.named_cases);
    c.perverse = j.value("perverse", c.perverse);
    c.demazure = j.value("demazure", c.demazure);
    c.demazure_samples = j.value("demazure_samples", c.demazure_samples);
    c.seed = j.value("seed", c.seed);
    c.output_dir = j.value("output_dir", c.output_dir);
    c.threads = j.value("threads", c.threads);
    c.validate();
    return c;
}

json SuiteConfig::to_json() const {
    return {{"schema", 1},
            {"max_n_decat", max_n_decat},
            {"max_n_categorified", max_n_categorified},
            {"degree_bound", degree_bound},
            {"named_degree_bound", named_degree_bound},
            {"decategorified", decategorified},
            {"categorified", categorified},
            {"named_cases", named_cases},
            {"perverse", perverse},
            {"demazure", demazure},
            {"demazure_samples", demazure_samples},
            {"seed", seed},
            {"output_dir", output_dir},
            {"threads", threads}};
}

void SuiteConfig::validate() const {
    auto need = [](bool ok, const std::string& what) {
        if (!ok) throw std::invalid_argument("config: " + what);
    };
    need(max_n_decat >= 2 && max_n_decat <= 8, "max_n_decat must be in [2, 8]");
    need(max_n_categorified >= 2 && max_n_categorified <= 4, "max_n_categorified must be in [2, 4]");
    need(degree_bound > 0 && degree_bound % 2 == 0, "degree_bound must be positive and even");
    need(named_degree_bound > 0 && named_degree_bound % 2 == 0, "named_degree_bound must be positive and even");
    need(demazure_samples > 0, "demazure_samples must be positive");
    need(threads >= 0, "threads must be non-negative");
}

void SuiteConfig::apply_env() {
    if (const char* t = std::getenv("SCHOBER_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(t, &end, 10);
        if (end == t || *end || v < 0) throw std::invalid_argument("SCHOBER_THREADS: expected a non-negative integer");
        threads = static_cast<int>(v);
    }
    if (const char* d = std::getenv("SCHOBER_OUTPUT_DIR")) output_dir = d;
}

}  // namespace schober

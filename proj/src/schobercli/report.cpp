#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "schober/schobercli.hpp"

namespace schober {

const std::vector<std::string>& condition_names() {
    static const std::vector<std::string> names{"(Adjunctability)",      "(Recursiveness)",    "(Far-commutativity)",
                                                "(Twist invertibility)", "(Defect vanishing)", "(Cotwist invertibility)"};
    return names;
}

SuiteReport suite_from_json(const json& j) {
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    r.n = j.at("n").get<int>();
    for (auto& c : j.at("cases")) {
        CaseResult x;
        x.inputs = c.at("inputs");
        x.pass = c.at("status").get<std::string>() == "pass";
        x.lhs = c.at("lhs").get<std::string>();
        x.rhs = c.at("rhs").get<std::string>();
        x.extra = c.contains("extra") ? c["extra"] : json();
        r.cases.push_back(std::move(x));
    }
    return r;
}

bool SchoberReport::pass() const {
    for (auto* m : {&conditions, &supplementary})
        for (auto& [k, s] : *m)
            if (!s.passed()) return false;
    return true;
}

json SchoberReport::content() const {
    json j{{"schema", 1}, {"status", pass() ? "pass" : "fail"}, {"config", config}};
    j["conditions"] = json::object();
    for (auto& name : condition_names()) {
        auto it = conditions.find(name);
        if (it != conditions.end()) j["conditions"][name] = it->second.to_json();
    }
    j["supplementary"] = json::object();
    for (auto& [k, s] : supplementary) j["supplementary"][k] = s.to_json();
    return j;
}

json SchoberReport::to_json() const {
    json j = content();
    j["timings"] = timings;
    return j;
}

SchoberReport SchoberReport::from_json(const json& j) {
    if (j.value("schema", 0) != 1) throw std::invalid_argument("report: schema must be 1");
    SchoberReport r;
    r.config = j.at("config");
    for (auto& [k, v] : j.at("conditions").items()) r.conditions[k] = suite_from_json(v);
    for (auto& [k, v] : j.at("supplementary").items()) r.supplementary[k] = suite_from_json(v);
    if (j.contains("timings")) r.timings = j["timings"].get<std::map<std::string, double>>();
    return r;
}

namespace {

std::string file_stem(std::string s) {
    std::string out;
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        else if (!out.empty() && out.back() != '_') out += '_';
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

void write_json(const std::filesystem::path& p, const json& j) {
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << j.dump(2) << "\n";
}

}  // namespace

void write_report(const SchoberReport& r, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (auto* m : {&r.conditions, &r.supplementary})
        for (auto& [k, s] : *m) {
            json j = s.to_json();
            j["schema"] = 1;
            write_json(std::filesystem::path(dir) / (file_stem(k) + ".json"), j);
        }
    json summary{{"schema", 1}, {"status", r.pass() ? "pass" : "fail"}, {"config", r.config}, {"timings", r.timings}};
    summary["suites"] = json::object();
    for (auto* m : {&r.conditions, &r.supplementary})
        for (auto& [k, s] : *m)
            summary["suites"][k] = {{"cases", s.cases.size()}, {"failures", s.failures()}, {"file", file_stem(k) + ".json"}};
    write_json(std::filesystem::path(dir) / "summary.json", summary);
}

}  // namespace schober

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "schober/hecke.hpp"

namespace schober {

namespace {

std::atomic<int> g_threads{0};

CaseResult compare(json inputs, const SchurMor& lhs, const SchurMor& rhs) {
    CaseResult r;
    r.inputs = std::move(inputs);
    r.pass = lhs == rhs;
    r.lhs = lhs.elt.str();
    r.rhs = rhs.elt.str();
    if (!lhs.exact() || !rhs.exact()) r.extra["inexact"] = true;
    if (!r.pass && lhs.dom == rhs.dom && lhs.cod == rhs.cod && !rhs.is_zero()) {
        // report a monomial discrepancy if there is one
        const int w = rhs.elt.support().front();
        if (auto u = lhs.elt.coeff(w).divide_exact(rhs.elt.coeff(w)))
            if (u->is_unit() && *u * rhs.elt == lhs.elt) r.extra["ratio"] = u->str();
    }
    return r;
}

SuiteReport finish(std::string name, int n, std::vector<CaseResult> cases) {
    SuiteReport rep;
    rep.suite = std::move(name);
    rep.n = n;
    rep.cases = std::move(cases);
    std::stable_sort(rep.cases.begin(), rep.cases.end(),
                     [](const CaseResult& a, const CaseResult& b) { return a.inputs.dump() < b.inputs.dump(); });
    return rep;
}

// runs the case builders in parallel, keeping their order
std::vector<CaseResult> run_cases(const std::vector<std::function<CaseResult()>>& jobs) {
    std::vector<CaseResult> out(jobs.size());
    parallel_for(jobs.size(), [&](size_t i) { out[i] = jobs[i](); });
    return out;
}

SchurMor compose_all(const std::vector<SchurMor>& fs) {  // fs applied left to right
    SchurMor r = fs.front();
    for (size_t i = 1; i < fs.size(); ++i) r = schur_compose(fs[i], r);
    return r;
}

// composite of crossings sigma_{i} (0-based strand index) applied in order
SchurMor braid_word(std::vector<int> colours, const std::vector<int>& word) {
    std::vector<SchurMor> fs;
    for (int i : word) {
        fs.push_back(strand_crossing(colours, i));
        std::swap(colours[i], colours[i + 1]);
    }
    return compose_all(fs);
}

Composition comp(std::vector<int> v) { return drop_zeros(v); }

}  // namespace

void set_worker_threads(int t) { g_threads = t; }

int worker_threads() {
    int t = g_threads.load();
    if (t > 0) return t;
    if (const char* e = std::getenv("SCHOBER_THREADS")) {
        int v = std::atoi(e);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(size_t count, const std::function<void(size_t)>& f) {
    const size_t T = std::min<size_t>(worker_threads(), count);
    if (T <= 1) {
        for (size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (size_t t = 0; t < T; ++t)
        pool.emplace_back([&] {
            for (size_t i; (i = next++) < count;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

bool SuiteReport::passed() const { return failures() == 0; }

size_t SuiteReport::failures() const {
    return std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; });
}

json SuiteReport::to_json() const {
    json j{{"suite", suite}, {"n", n}, {"passed", passed()}, {"failures", failures()}};
    j["cases"] = json::array();
    for (auto& c : cases) {
        json cj{{"inputs", c.inputs}, {"status", c.pass ? "pass" : "fail"}, {"lhs", c.lhs}, {"rhs", c.rhs}};
        if (!c.extra.is_null()) cj["extra"] = c.extra;
        j["cases"].push_back(cj);
    }
    return j;
}

// ---- digon ----

SuiteReport suite_digon(int n) {
    std::vector<std::function<CaseResult()>> jobs;
    for (int b = 2; b <= n; ++b)
        for (int s = 1; s < b; ++s)
            jobs.push_back([b, s] {
                SchurMor lhs = schur_compose(merge_class(s, b - s), split_class(s, b - s));
                SchurMor rhs = qbinom_z(b, s) * schur_id(Composition{b});
                CaseResult r = compare({{"relation", "digon"}, {"b", b}, {"s", s}}, lhs, rhs);
                r.extra["multiplicity"] = qbinom_z(b, s).str();
                return r;
            });
    for (int m = 3; m <= n; ++m)
        for (int a = 1; a < m; ++a)
            for (int b = 1; a + b < m; ++b) {
                const int c = m - a - b;
                jobs.push_back([a, b, c] {
                    SchurMor l = schur_compose(whisker({}, split_class(a, b), Composition{c}), split_class(a + b, c));
                    SchurMor r = schur_compose(whisker(Composition{a}, split_class(b, c), {}), split_class(a, b + c));
                    return compare({{"relation", "coassociativity"}, {"a", a}, {"b", b}, {"c", c}}, l, r);
                });
                jobs.push_back([a, b, c] {
                    SchurMor l = schur_compose(merge_class(a + b, c), whisker({}, merge_class(a, b), Composition{c}));
                    SchurMor r = schur_compose(merge_class(a, b + c), whisker(Composition{a}, merge_class(b, c), {}));
                    return compare({{"relation", "associativity"}, {"a", a}, {"b", b}, {"c", c}}, l, r);
                });
            }
    return finish("digon", n, run_cases(jobs));
}

// ---- braid ----

SuiteReport suite_braid(int n) {
    std::vector<std::function<CaseResult()>> jobs;
    for (int m = 1; m <= n; ++m)
        for (int a = 0; a <= m; ++a)
            for (int b = 0; a + b <= m; ++b) {
                const int c = m - a - b;
                jobs.push_back([a, b, c] {
                    std::vector<int> col{a, b, c};
                    return compare({{"relation", "braid"}, {"colours", col}}, braid_word(col, {0, 1, 0}),
                                   braid_word(col, {1, 0, 1}));
                });
            }
    for (int m = 2; m <= n; ++m)
        for (int a = 1; a < m; ++a) {
            const int b = m - a;
            jobs.push_back([a, b] {
                SchurMor c = crossing_class(a, b, b, a);
                SchurMor ci = crossing_class_inv(b, a, a, b);
                SchurMor prod = schur_compose(ci, c);
                CaseResult r;
                r.inputs = {{"relation", "inverse"}, {"a", a}, {"b", b}};
                auto u = unit_multiple_of_id(prod);
                r.pass = u.has_value();
                r.lhs = prod.elt.str();
                r.rhs = u ? u->str() + " * id" : "unit * id";
                return r;
            });
        }
    for (int m = 4; m <= n; ++m)
        for (int a = 1; a < m; ++a)
            for (int b = 1; a + b < m; ++b)
                for (int c = 1; a + b + c < m; ++c) {
                    const int d = m - a - b - c;
                    jobs.push_back([a, b, c, d] {
                        std::vector<int> col{a, b, c, d};
                        return compare({{"relation", "far-commutation"}, {"colours", col}}, braid_word(col, {0, 2}),
                                       braid_word(col, {2, 0}));
                    });
                }
    for (int m = 3; m <= n; ++m)
        for (int a = 1; a < m; ++a)
            for (int b = 1; a + b < m; ++b) {
                const int c = m - a - b;
                const Composition A{a}, B{b}, C{c};
                // split slides through a crossing from below / above, both strands
                jobs.push_back([=] {
                    SchurMor l = schur_compose(whisker({}, split_class(b, c), A), crossing_class(a, b + c, b + c, a));
                    SchurMor r = compose_all({whisker(A, split_class(b, c), {}), whisker({}, crossing_class(a, b, b, a), C),
                                              whisker(B, crossing_class(a, c, c, a), {})});
                    return compare({{"relation", "fork-slide split right"}, {"colours", {a, b, c}}}, l, r);
                });
                jobs.push_back([=] {
                    // (a1, a2) = (a, b) split on the left strand, crossing colour c
                    SchurMor l = schur_compose(whisker(C, split_class(a, b), {}), crossing_class(a + b, c, c, a + b));
                    SchurMor r = compose_all({whisker({}, split_class(a, b), C), whisker(A, crossing_class(b, c, c, b), {}),
                                              whisker({}, crossing_class(a, c, c, a), B)});
                    return compare({{"relation", "fork-slide split left"}, {"colours", {a, b, c}}}, l, r);
                });
                jobs.push_back([=] {
                    SchurMor l = schur_compose(crossing_class(a, b + c, b + c, a), whisker(A, merge_class(b, c), {}));
                    SchurMor r = compose_all({whisker({}, crossing_class(a, b, b, a), C), whisker(B, crossing_class(a, c, c, a), {}),
                                              whisker({}, merge_class(b, c), A)});
                    return compare({{"relation", "fork-slide merge right"}, {"colours", {a, b, c}}}, l, r);
                });
                jobs.push_back([=] {
                    SchurMor l = schur_compose(crossing_class(a + b, c, c, a + b), whisker({}, merge_class(a, b), C));
                    SchurMor r = compose_all({whisker(A, crossing_class(b, c, c, b), {}), whisker({}, crossing_class(a, c, c, a), B),
                                              whisker(C, merge_class(a, b), {})});
                    return compare({{"relation", "fork-slide merge left"}, {"colours", {a, b, c}}}, l, r);
                });
            }
    return finish("braid", n, run_cases(jobs));
}

// ---- bialgebra ----

SchurMor imcs_class(int a, int b, int c, int d, int s) {
    if (s < 0 || s > b || s > d) throw std::out_of_range("imcs_class: s out of range");
    const Composition S = drop_zeros({s});
    SchurMor split = whisker(Composition{a}, split_class(b - s, s), {});
    SchurMor X = whisker({}, crossing_class(a, b - s, c, d - s), S);
    SchurMor merge = whisker(drop_zeros({c}), merge_class(d - s, s), {});
    return compose_all({split, X, merge});
}

namespace {

SchurMor quadruple_term(const BialgQuad& t, const Composition& ab, const Composition& cd) {
    Composition ijkl = comp({t.i, t.j, t.k, t.l});
    Composition ikjl = comp({t.i, t.k, t.j, t.l});
    SchurMor ind = ind_class(ab, ijkl);
    SchurMor mid = whisker(comp({t.i}), crossing_class(t.j, t.k, t.k, t.j), comp({t.l}));
    SchurMor res = res_class(ikjl, cd);
    return LaurentPoly::monomial(t.j * t.k) * compose_all({ind, mid, res});
}

}  // namespace

SuiteReport suite_bialgebra(int n) {
    std::vector<std::function<CaseResult()>> jobs;
    for (int m = 1; m <= n; ++m)
        for (int a = 0; a <= m; ++a)
            for (int c = 0; c <= m; ++c) {
                const int b = m - a, d = m - c;
                if (b <= std::min({a, c, d}))
                    jobs.push_back([a, b, c, d] {
                        SchurMor lhs = path_class({{a, b}, {a + b}, {c, d}}, true);
                        SchurMor rhs = schur_zero(lhs.dom, lhs.cod);
                        for (int s = 0; s <= b; ++s)
                            rhs += LaurentPoly::monomial(-s * (s + a - d)) * imcs_class(a, b, c, d, s);
                        return compare({{"relation", "split-merge"}, {"ab", {a, b}}, {"cd", {c, d}}}, lhs, rhs);
                    });
                if (a >= 1 && b >= 1 && c >= 1 && d >= 1)
                    jobs.push_back([a, b, c, d] {
                        Composition ab{a, b}, cd{c, d};
                        SchurMor lhs = path_class({{a, b}, {a + b}, {c, d}}, false);
                        SchurMor rhs = schur_zero(ab, cd);
                        auto quads = bialg_quadruples(ab, cd);
                        for (auto& t : quads) rhs += quadruple_term(t, ab, cd);
                        CaseResult r = compare({{"relation", "quadruples"}, {"ab", {a, b}}, {"cd", {c, d}}}, lhs, rhs);
                        r.extra["terms"] = quads.size();
                        return r;
                    });
            }
    return finish("bialgebra", n, run_cases(jobs));
}

// ---- square switch ----

SchurMor square_L(int a, int b, int s, int r) {
    const int c = a + s - r, d = b - s + r;
    if (s < 0 || r < 0 || s > b || r > a + s) throw std::out_of_range("square_L: invalid labels");
    return path_class({{a, b}, {a, s, b - s}, {a + s, b - s}, {c, r, b - s}, {c, d}}, true);
}

SchurMor square_R(int a, int b, int s, int r) {
    const int c = a - s + r, d = b + s - r;
    if (s < 0 || r < 0 || s > a || r > b + s) throw std::out_of_range("square_R: invalid labels");
    return path_class({{a, b}, {a - s, s, b}, {a - s, b + s}, {a - s, r, d}, {c, d}}, true);
}

CaseResult squareswitch_case(int a, int b, int s, int r, bool left_form) {
    const int c = left_form ? a + s - r : a - s + r, d = a + b - c;
    SchurMor lhs = left_form ? square_L(a, b, s, r) : square_R(a, b, s, r);
    if (left_form ? b < c : b > c) throw std::domain_error("squareswitch: multiplicity needs b >= c (L) or b <= c (R)");
    SchurMor rhs = schur_zero(lhs.dom, lhs.cod);
    const int gap = std::abs(b - c);
    for (int t = 0; t <= std::min(r, s); ++t) {
        const int s2 = r - t, r2 = s - t;
        if (left_form) {
            if (s2 > a || r2 > b + s2) continue;
            rhs += qbinom_z(gap, t) * square_R(a, b, s2, r2);
        } else {
            if (s2 > b || r2 > a + s2) continue;
            rhs += qbinom_z(gap, t) * square_L(a, b, s2, r2);
        }
    }
    return compare({{"form", left_form ? "L" : "R"}, {"a", a}, {"b", b}, {"c", c}, {"d", d}, {"s", s}, {"r", r}}, lhs, rhs);
}

SuiteReport suite_squareswitch(int n) {
    std::vector<std::function<CaseResult()>> jobs;
    for (int m = 1; m <= n; ++m)
        for (int a = 0; a <= m; ++a) {
            const int b = m - a;
            for (int s = 0; s <= std::max(a, b); ++s)
                for (int r = 0; r <= m; ++r) {
                    if (s <= b && r <= a + s && b >= a + s - r)
                        jobs.push_back([=] { return squareswitch_case(a, b, s, r, true); });
                    if (s <= a && r <= b + s && b <= a - s + r)
                        jobs.push_back([=] { return squareswitch_case(a, b, s, r, false); });
                }
        }
    return finish("squareswitch", n, run_cases(jobs));
}

// ---- Beck-Chevalley defect ----

SchurMor bc_defect_class(const Composition& ab, const Composition& cd) {
    BifactCube q = bifact_cube(ab, cd);
    SchurMor acc = schur_zero(ab, cd);
    for (auto& [v, w] : zigzag_vertices(q)) {
        std::vector<std::vector<int>> path;
        for (auto& c : w.comps) path.push_back(c.parts);
        SchurMor term = path_class(path, false);
        acc += LaurentPoly(__builtin_popcount(v) % 2 ? -1 : 1) * term;
    }
    return acc;
}

SuiteReport suite_defect(int n) {
    std::vector<std::function<CaseResult()>> jobs;
    for (int m = 2; m <= n; ++m)
        for (int a = 1; a < m; ++a)
            for (int c = 1; c < m; ++c) {
                const int b = m - a, d = m - c;
                jobs.push_back([a, b, c, d] {
                    Composition ab{a, b}, cd{c, d};
                    SchurMor lhs = bc_defect_class(ab, cd);
                    json in{{"ab", {a, b}}, {"cd", {c, d}}};
                    if (a != d) {
                        in["relation"] = "vanishing";
                        return compare(in, lhs, schur_zero(ab, cd));
                    }
                    in["relation"] = "twist";
                    SchurMor rhs = LaurentPoly::monomial(a * b) * crossing_class(a, b, b, a);
                    return compare(in, lhs, rhs);
                });
            }
    return finish("defect", n, run_cases(jobs));
}

std::optional<LaurentPoly> skein_normalisation(int kmin, int kmax) {
    SchurMor C = crossing_class(1, 1, 1, 1), Ci = crossing_class_inv(1, 1, 1, 1);
    SchurMor target = (LaurentPoly::monomial(1) - LaurentPoly::monomial(-1)) * schur_id(Composition{1, 1});
    for (int k = kmin; k <= kmax; ++k)
        for (int sg : {1, -1}) {
            LaurentPoly al = LaurentPoly::monomial(k, sg), inv = LaurentPoly::monomial(-k, sg);
            if ((al * C) - (inv * Ci) == target) return al;
        }
    return std::nullopt;
}

SuiteReport run_hecke_suite(const std::string& name, int n) {
    if (name == "digon") return suite_digon(n);
    if (name == "braid") return suite_braid(n);
    if (name == "bialgebra") return suite_bialgebra(n);
    if (name == "squareswitch") return suite_squareswitch(n);
    if (name == "defect") return suite_defect(n);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace schober

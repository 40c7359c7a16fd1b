#include <stdexcept>

#include "detail.hpp"
#include "schober/bimodcx.hpp"

namespace schober {

std::vector<Composition> ladder_comps(int a, int b, int c, int d, int k) {
    std::vector<Composition> out;
    for (auto& p : ladder_path(a, b, c, d, k)) out.push_back(drop_zeros(p));
    return out;
}

WebWord ladder_web(int a, int b, int c, int d, int k) { return WebWord::from_comps(ladder_comps(a, b, c, d, k)); }

size_t ladder_M_vertex() { return 3; }

std::vector<int> ladder_M_vars(int a, int b, int c, int d, int k) {
    (void)b;
    (void)d;
    std::vector<int> v;
    for (int i = c; i < a + k; ++i) v.push_back(i);
    return v;
}

std::vector<Composition> whisker_I(const std::vector<Composition>& path, int s, int a, int b, int c, int d) {
    std::vector<Composition> out{drop_zeros({a, b})};
    for (auto& p : path) {
        auto parts = p.parts;
        parts.push_back(s);
        out.push_back(drop_zeros(parts));
    }
    out.push_back(drop_zeros({c, d}));
    return out;
}

namespace {

Composition comp(std::vector<int> parts, int s) {
    parts.push_back(s);
    return drop_zeros(parts);
}

}  // namespace

BimodMap chi_plus_whiskered(int m, int k, int a, int b, int c, int d, int s) {
    // ladder data of (a, b-s, c, d-s); s = 0 gives the plain differential
    const int B = b - s, D = d - s;
    if (s < 0 || B < 0 || D < 0) throw std::invalid_argument("chi_plus: bad whiskering");
    if (k - 1 < ladder_kmin(a, B, c, D) || k > B) throw std::out_of_range("chi_plus: rung out of range");
    const int n = a + b;
    auto wk = whisker_I(ladder_comps(a, B, c, D, k), s, a, b, c, d);
    auto wk1 = whisker_I(ladder_comps(a, B, c, D, k - 1), s, a, b, c, d);
    // the web with the moved strand held back
    const Composition Q1 = comp({a, k - 1, 1, B - k}, s), U = comp({a + k - 1, 1, B - k}, s),
                      Q2 = comp({c, a + k - 1 - c, 1, B - k}, s);
    std::vector<Composition> y = wk;
    y[2] = Q1;
    y[3] = U;
    y[4] = Q2;
    const Composition P1 = wk1[2], V = wk1[3], P2 = wk1[4];
    BimodMap iota = refinement_map(wk, y);
    const DualBases& db = detail::fbases(U, V);
    Poly dec = Poly::constant(n, 1);
    for (int i = 0; i < m; ++i) dec *= Poly::var(n, a + k - 1);
    auto one = Poly::constant(n, 1);
    int delta = -2 * (B - k) + 2 * m;
    BimodMap pi = vertex_map(
        y, wk1,
        [&](const VertexTensor& v) {
            std::vector<VertexTensor> out;
            for (size_t i = 0; i < db.basis.size(); ++i) {
                Poly l = detail::trace(Q1, P1, db.dual[i] * v[2] * v[3] * dec);
                if (l.is_zero()) continue;
                Poly r = detail::trace(Q2, P2, v[4] * db.basis[i]);
                if (r.is_zero()) continue;
                VertexTensor o = v;
                o[2] = l;
                o[3] = one;
                o[4] = r;
                out.push_back(std::move(o));
            }
            return out;
        },
        delta);
    BimodMap chi = compose(pi, iota);
    if (chi.is_zero()) throw std::domain_error("chi_plus: zero map");
    return chi;
}

BimodMap chi_plus(int m, int k, int a, int b, int c, int d) { return chi_plus_whiskered(m, k, a, b, c, d, 0); }

}  // namespace schober

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "detail.hpp"
#include "schober/bimodcx.hpp"

namespace schober {

size_t WebComplex::count(int i) const {
    if (i < lo || i > hi()) return 0;
    return obj[i - lo].size();
}

void WebComplex::resize(int lo_, int hi_) {
    if (obj.empty()) {
        lo = lo_;
        obj.resize(hi_ - lo_ + 1);
        d.resize(hi_ - lo_ + 1);
        return;
    }
    if (lo_ < lo) {
        obj.insert(obj.begin(), lo - lo_, {});
        d.insert(d.begin(), lo - lo_, {});
        lo = lo_;
    }
    if (hi_ > hi()) {
        obj.resize(hi_ - lo + 1);
        d.resize(hi_ - lo + 1);
    }
}

void WebComplex::add_summand(int h, Summand s) {
    resize(h, h);
    if (!obj.empty() && !obj[0].empty() && !s.r) throw std::invalid_argument("add_summand: null realization");
    obj[h - lo].push_back(std::move(s));
}

void WebComplex::add_component(int h, size_t t, size_t s, const PolyMat& m) {
    if (h < lo || h + 1 > hi()) throw std::out_of_range("add_component: degree out of range");
    const auto &S = obj[h - lo].at(s), &T = obj[h + 1 - lo].at(t);
    if (m.rows() != T.r->rank() || m.cols() != S.r->rank()) throw std::invalid_argument("add_component: shape");
    auto& slot = d[h - lo];
    auto it = slot.find({t, s});
    if (it == slot.end()) slot.emplace(std::make_pair(t, s), m);
    else it->second += m;
}

bool WebComplex::empty() const {
    for (auto& o : obj)
        if (!o.empty()) return false;
    return true;
}

const Summand& first_summand(const WebComplex& c) {
    for (auto& o : c.obj)
        if (!o.empty()) return o.front();
    throw std::logic_error("empty complex");
}

const Composition& WebComplex::dom() const { return first_summand(*this).r->dom(); }
const Composition& WebComplex::cod() const { return first_summand(*this).r->cod(); }
const CoeffRing& WebComplex::ring() const { return first_summand(*this).r->ring(); }

WebComplex WebComplex::shifted(int q, int t) const {
    WebComplex c = *this;
    c.lo += t;
    for (auto& o : c.obj)
        for (auto& s : o) s.q += q;
    return c;
}

bool WebComplex::d_squared_zero() const {
    for (int h = lo; h + 2 <= hi(); ++h) {
        const size_t i = h - lo;
        std::map<std::pair<size_t, size_t>, PolyMat> sq;
        for (auto& [k2, m2] : d[i + 1])
            for (auto& [k1, m1] : d[i])
                if (k1.first == k2.second) {
                    auto key = std::make_pair(k2.first, k1.second);
                    auto it = sq.find(key);
                    if (it == sq.end()) sq.emplace(key, m2 * m1);
                    else it->second += m2 * m1;
                }
        for (auto& [k, m] : sq)
            if (!m.is_zero()) return false;
    }
    return true;
}

bool WebComplex::well_formed(std::string* why) const {
    for (int h = lo; h < hi(); ++h) {
        const size_t i = h - lo;
        for (auto& [k, m] : d[i]) {
            const Summand &S = obj[i].at(k.second), &T = obj[i + 1].at(k.first);
            BimodMap f{S.r, T.r, S.q - T.q, m};
            if (!f.homogeneous() || !f.intertwines()) {
                if (why) *why = "component " + S.r->str() + " -> " + T.r->str() + " at degree " + std::to_string(h);
                return false;
            }
        }
    }
    return true;
}

BiLaurent WebComplex::graded_rank() const {
    BiLaurent r;
    for (size_t i = 0; i < obj.size(); ++i)
        for (auto& s : obj[i])
            for (int d0 : s.r->basis_degrees()) r += BiLaurent::monomial(d0 + s.q, lo + static_cast<int>(i));
    return r;
}

HilbertSeries WebComplex::euler_series() const {
    BiLaurent num;
    for (size_t i = 0; i < obj.size(); ++i)
        for (auto& s : obj[i])
            for (int d0 : s.r->basis_degrees()) num += BiLaurent::monomial(d0 + s.q, 0, (lo + i) % 2 ? -1 : 1);
    return HilbertSeries(num, {}) * ring().hilbert();
}

json WebComplex::to_json(int D) const {
    json j;
    j["schema"] = 1;
    j["lo"] = lo;
    j["objects"] = json::array();
    for (size_t i = 0; i < obj.size(); ++i)
        for (size_t s = 0; s < obj[i].size(); ++s) {
            const auto& x = obj[i][s];
            json o{{"hdeg", lo + static_cast<int>(i)}, {"index", s}, {"web", x.r->str()}, {"qshift", x.q}, {"rank", x.r->rank()}};
            if (!x.label.empty()) o["label"] = x.label;
            if (D >= 0) {
                auto dims = x.r->dims(0, D);
                o["dims_unshifted"] = dims;
            }
            j["objects"].push_back(o);
        }
    j["components"] = json::array();
    for (size_t i = 0; i < d.size(); ++i)
        for (auto& [k, m] : d[i])
            if (!m.is_zero()) j["components"].push_back({{"hdeg", lo + static_cast<int>(i)}, {"from", k.second}, {"to", k.first}});
    return j;
}

// ---------------------------------------------------------------------------

BiLaurent FreeComplex::graded_rank() const {
    BiLaurent r;
    for (size_t i = 0; i < deg.size(); ++i)
        for (int d0 : deg[i]) r += BiLaurent::monomial(d0, lo + static_cast<int>(i));
    return r;
}

bool FreeComplex::d_squared_zero() const {
    for (size_t i = 0; i + 1 < d.size(); ++i)
        if (d[i].rows() && d[i + 1].cols() && !(d[i + 1] * d[i]).is_zero()) return false;
    return true;
}

int FreeComplex::min_degree() const {
    int m = 0;
    bool any = false;
    for (auto& v : deg)
        for (int x : v) m = any ? std::min(m, x) : x, any = true;
    return m;
}

FreeComplex flatten(const WebComplex& c) {
    FreeComplex f;
    f.lo = c.lo;
    if (c.empty()) return f;
    f.ring = &c.ring();
    f.nvars = f.ring->ngens();
    std::vector<std::vector<size_t>> off(c.obj.size());
    f.deg.resize(c.obj.size());
    for (size_t i = 0; i < c.obj.size(); ++i)
        for (auto& s : c.obj[i]) {
            off[i].push_back(f.deg[i].size());
            for (int d0 : s.r->basis_degrees()) f.deg[i].push_back(d0 + s.q);
        }
    for (size_t i = 0; i < c.obj.size(); ++i) {
        const size_t rows = i + 1 < c.obj.size() ? f.deg[i + 1].size() : 0;
        PolyMat m(rows, f.deg[i].size(), f.nvars);
        if (i + 1 < c.obj.size())
            for (auto& [k, blk] : c.d[i])
                for (size_t y = 0; y < blk.rows(); ++y)
                    for (size_t x = 0; x < blk.cols(); ++x) m(off[i + 1][k.first] + y, off[i][k.second] + x) = blk(y, x);
        f.d.push_back(std::move(m));
    }
    return f;
}

RatMatrix degree_matrix(const FreeComplex& c, size_t i, int q, size_t* rows_out, size_t* cols_out) {
    const CoeffRing& R = *c.ring;
    std::vector<std::pair<size_t, size_t>> col_start;  // (basis x, first column)
    size_t ncols = 0;
    for (size_t x = 0; x < c.deg[i].size(); ++x) {
        col_start.emplace_back(x, ncols);
        ncols += R.dim(q - c.deg[i][x]);
    }
    size_t nrows = 0;
    std::vector<size_t> row_start;
    std::vector<std::map<Poly::Mono, size_t>> row_index;
    if (i + 1 < c.deg.size())
        for (size_t y = 0; y < c.deg[i + 1].size(); ++y) {
            row_start.push_back(nrows);
            std::map<Poly::Mono, size_t> idx;
            const auto& B = R.basis(q - c.deg[i + 1][y]);
            for (size_t k = 0; k < B.size(); ++k) idx[B[k]] = nrows + k;
            nrows += B.size();
            row_index.push_back(std::move(idx));
        }
    if (rows_out) *rows_out = nrows;
    if (cols_out) *cols_out = ncols;
    RatMatrix M(nrows, ncols);
    if (!nrows || !ncols) return M;
    for (size_t x = 0; x < c.deg[i].size(); ++x) {
        const auto& B = R.basis(q - c.deg[i][x]);
        for (size_t y = 0; y < c.deg[i + 1].size(); ++y) {
            const Poly& e = c.d[i](y, x);
            if (e.is_zero()) continue;
            for (size_t k = 0; k < B.size(); ++k)
                for (auto& [mm, cf] : e.terms()) {
                    auto it = row_index[y].find(mm + B[k]);
                    if (it == row_index[y].end()) throw std::logic_error("degree_matrix: inhomogeneous differential");
                    M(it->second, col_start[x].second + k) += cf;
                }
        }
    }
    return M;
}

namespace {

size_t dim_at(const FreeComplex& c, size_t i, int q) {
    size_t s = 0;
    for (int d0 : c.deg[i]) s += c.ring->dim(q - d0);
    return s;
}

size_t modp_rank_of(const RatMatrix& M, bool* ok) {
    std::vector<uint32_t> a(M.rows() * M.cols());
    for (size_t r = 0; r < M.rows(); ++r)
        for (size_t c = 0; c < M.cols(); ++c) {
            auto v = modp::reduce(M(r, c));
            if (!v) {
                *ok = false;
                return 0;
            }
            a[r * M.cols() + c] = *v;
        }
    *ok = true;
    return modp::rank(a, M.rows(), M.cols());
}

}  // namespace

size_t exact_rank(const RatMatrix& m, bool* used_fallback) {
    bool ok = false;
    size_t r = modp_rank_of(m, &ok);
    if (ok && r == std::min(m.rows(), m.cols())) {
        if (used_fallback) *used_fallback = false;
        return r;
    }
    if (used_fallback) *used_fallback = true;
    return m.rank();
}

json HomologyReport::to_json() const {
    json h = json::array();
    for (auto& [k, v] : homology) h.push_back({{"hdeg", k.first}, {"qdeg", k.second}, {"dim", v}});
    return {{"exact", exact}, {"qmin", qmin}, {"qmax", qmax}, {"homology", h}, {"rational_fallback", used_rational_fallback}};
}

HomologyReport homology(const FreeComplex& c, int D) {
    HomologyReport rep;
    rep.qmax = D;
    if (c.deg.empty() || !c.ring) return rep;
    rep.qmin = c.min_degree();
    const size_t L = c.deg.size();
    const int nq = D - rep.qmin + 1;
    if (nq <= 0) return rep;
    std::vector<std::vector<long>> H(nq);
    std::vector<char> fb(nq, 0);
    parallel_for(static_cast<size_t>(nq), [&](size_t qi) {
        const int q = rep.qmin + static_cast<int>(qi);
        std::vector<RatMatrix> mats(L);
        std::vector<size_t> rk(L, 0);
        for (size_t i = 0; i + 1 < L; ++i) {
            mats[i] = degree_matrix(c, i, q);
            bool ok = false;
            rk[i] = modp_rank_of(mats[i], &ok);
            if (!ok) rk[i] = mats[i].rank(), fb[qi] = 1;
        }
        std::vector<long> h(L);
        bool bad = false;
        for (size_t i = 0; i < L; ++i) {
            h[i] = static_cast<long>(dim_at(c, i, q)) - static_cast<long>(rk[i]) - (i ? static_cast<long>(rk[i - 1]) : 0);
            if (h[i]) bad = true;
        }
        if (bad) {
            // mod-p ranks only bound the rational ranks from below
            fb[qi] = 1;
            for (size_t i = 0; i + 1 < L; ++i) rk[i] = mats[i].rank();
            for (size_t i = 0; i < L; ++i)
                h[i] = static_cast<long>(dim_at(c, i, q)) - static_cast<long>(rk[i]) - (i ? static_cast<long>(rk[i - 1]) : 0);
        }
        H[qi] = std::move(h);
    });
    for (int qi = 0; qi < nq; ++qi) {
        if (fb[qi]) rep.used_rational_fallback = true;
        for (size_t i = 0; i < L; ++i)
            if (H[qi][i]) {
                rep.exact = false;
                rep.homology[{c.lo + static_cast<int>(i), rep.qmin + qi}] = H[qi][i];
            }
    }
    return rep;
}

HomologyReport check_exact(const WebComplex& c, int D) { return homology(flatten(c), D); }

// ---------------------------------------------------------------------------

FreeComplex reduce_free(const FreeComplex& c) {
    const size_t L = c.deg.size();
    std::vector<PolyMat> d = c.d;
    std::vector<std::vector<char>> alive(L);
    for (size_t i = 0; i < L; ++i) alive[i].assign(c.deg[i].size(), 1);
    for (size_t i = 0; i + 1 < L; ++i) {
        for (;;) {
            size_t py = 0, px = 0;
            bool found = false;
            for (size_t x = 0; x < c.deg[i].size() && !found; ++x) {
                if (!alive[i][x]) continue;
                for (size_t y = 0; y < c.deg[i + 1].size(); ++y) {
                    if (!alive[i + 1][y]) continue;
                    const Poly& e = d[i](y, x);
                    if (!e.is_zero() && e.terms().size() == 1 && e.terms().begin()->first == 0) {
                        py = y, px = x, found = true;
                        break;
                    }
                }
            }
            if (!found) break;
            const Rational inv = 1 / d[i](py, px).coeff(0);
            std::vector<size_t> ys, xs;
            for (size_t y = 0; y < c.deg[i + 1].size(); ++y)
                if (alive[i + 1][y] && y != py && !d[i](y, px).is_zero()) ys.push_back(y);
            for (size_t x = 0; x < c.deg[i].size(); ++x)
                if (alive[i][x] && x != px && !d[i](py, x).is_zero()) xs.push_back(x);
            for (size_t y : ys) {
                Poly a = d[i](y, px) * inv;
                for (size_t x : xs) d[i](y, x) -= a * d[i](py, x);
            }
            alive[i][px] = 0;
            alive[i + 1][py] = 0;
        }
    }
    FreeComplex out;
    out.lo = c.lo;
    out.ring = c.ring;
    out.nvars = c.nvars;
    std::vector<std::vector<size_t>> keep(L);
    for (size_t i = 0; i < L; ++i) {
        std::vector<int> dg;
        for (size_t x = 0; x < c.deg[i].size(); ++x)
            if (alive[i][x]) keep[i].push_back(x), dg.push_back(c.deg[i][x]);
        out.deg.push_back(dg);
    }
    for (size_t i = 0; i < L; ++i)
        out.d.push_back(i + 1 < L ? d[i].submatrix(keep[i + 1], keep[i]) : PolyMat(0, keep[i].size(), c.nvars));
    return out;
}

std::optional<PolyMat> graded_inverse(const PolyMat& c) {
    if (c.rows() != c.cols()) return std::nullopt;
    const size_t n = c.rows();
    const int nv = c.nvars();
    auto inv0 = c.constant_part().inverse();
    if (!inv0) return std::nullopt;
    PolyMat I0(n, n, nv);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if ((*inv0)(i, j) != 0) I0(i, j) = Poly::constant(nv, (*inv0)(i, j));
    PolyMat N = PolyMat::identity(n, nv) - I0 * c;
    PolyMat S = PolyMat::identity(n, nv), P = PolyMat::identity(n, nv);
    for (size_t k = 0; k <= 4 * n + 64; ++k) {
        P = P * N;
        if (P.is_zero()) break;
        S += P;
    }
    PolyMat inv = S * I0;
    if (c * inv != PolyMat::identity(n, nv)) return std::nullopt;
    return inv;
}

WebComplex gaussian_eliminate(const WebComplex& in, int D) {
    (void)D;
    WebComplex c = in;
    for (;;) {
        bool done = true;
        for (size_t i = 0; i + 1 < c.obj.size() && done; ++i) {
            for (auto& [k, m] : c.d[i]) {
                const auto [t, s] = k;
                const Summand &S = c.obj[i][s], &T = c.obj[i + 1][t];
                if (S.r->rank() != T.r->rank() || m.is_zero()) continue;
                if (S.r->hilbert().shifted(S.q) != T.r->hilbert().shifted(T.q)) continue;
                auto inv = graded_inverse(m);
                if (!inv) continue;
                // d'(t', s') = d(t', s') - d(t', s) c^{-1} d(t, s')
                std::map<std::pair<size_t, size_t>, PolyMat> nd;
                for (auto& [k2, m2] : c.d[i]) {
                    if (k2.first == t || k2.second == s) continue;
                    nd.emplace(k2, m2);
                }
                for (auto& [k1, a] : c.d[i]) {
                    if (k1.second != s || k1.first == t) continue;
                    PolyMat left = a * *inv;
                    for (auto& [k2, b] : c.d[i]) {
                        if (k2.first != t || k2.second == s) continue;
                        PolyMat corr = left * b;
                        auto key = std::make_pair(k1.first, k2.second);
                        auto it = nd.find(key);
                        if (it == nd.end()) nd.emplace(key, PolyMat(corr.rows(), corr.cols(), corr.nvars()) - corr);
                        else it->second -= corr;
                    }
                }
                auto reindex = [](size_t v, size_t gone) { return v > gone ? v - 1 : v; };
                std::map<std::pair<size_t, size_t>, PolyMat> di;
                for (auto& [k2, m2] : nd)
                    if (!m2.is_zero()) di.emplace(std::make_pair(reindex(k2.first, t), reindex(k2.second, s)), m2);
                if (i > 0) {
                    std::map<std::pair<size_t, size_t>, PolyMat> prev;
                    for (auto& [k2, m2] : c.d[i - 1])
                        if (k2.first != s) prev.emplace(std::make_pair(reindex(k2.first, s), k2.second), m2);
                    c.d[i - 1] = std::move(prev);
                }
                if (i + 1 < c.d.size()) {
                    std::map<std::pair<size_t, size_t>, PolyMat> next;
                    for (auto& [k2, m2] : c.d[i + 1])
                        if (k2.second != t) next.emplace(std::make_pair(k2.first, reindex(k2.second, t)), m2);
                    c.d[i + 1] = std::move(next);
                }
                c.d[i] = std::move(di);
                c.obj[i].erase(c.obj[i].begin() + s);
                c.obj[i + 1].erase(c.obj[i + 1].begin() + t);
                done = false;
                break;
            }
        }
        if (done) break;
    }
    // trim empty ends
    while (!c.obj.empty() && c.obj.back().empty()) c.obj.pop_back(), c.d.pop_back();
    while (!c.obj.empty() && c.obj.front().empty()) c.obj.erase(c.obj.begin()), c.d.erase(c.d.begin()), ++c.lo;
    return c;
}

bool has_contracting_homotopy(const WebComplex& c) {
    if (c.empty()) return true;
    // unknowns: h: C^i -> C^{i-1} built from Hom bases, plus lambda with dh + hd = lambda id
    struct Param {
        int h;
        size_t t, s;
        PolyMat m;
    };
    std::vector<Param> params;
    for (int h = c.lo + 1; h <= c.hi(); ++h)
        for (size_t s = 0; s < c.count(h); ++s)
            for (size_t t = 0; t < c.count(h - 1); ++t) {
                const Summand &X = c.obj[h - c.lo][s], &Y = c.obj[h - 1 - c.lo][t];
                for (auto& f : hom_basis(X.r, Y.r, X.q - Y.q)) params.push_back({h, t, s, f.m});
            }
    const size_t lam = params.size();
    std::map<std::tuple<int, size_t, size_t, size_t, size_t, Poly::Mono>, detail::SparseRow> eq;
    auto addm = [&](int h, size_t s, size_t t, const PolyMat& m, size_t p, const Rational& sign) {
        for (size_t y = 0; y < m.rows(); ++y)
            for (size_t x = 0; x < m.cols(); ++x)
                for (auto& [mm, cf] : m(y, x).terms()) eq[{h, s, t, y, x, mm}][p] += sign * cf;
    };
    for (size_t p = 0; p < params.size(); ++p) {
        const Param& P = params[p];
        // d h: C^h_s -> C^{h-1}_t -> C^h_{t'}
        for (auto& [k, m] : c.d[P.h - 1 - c.lo])
            if (k.second == P.t) addm(P.h, P.s, k.first, m * P.m, p, 1);
        // h d: C^{h-1}_{s'} -> C^h_s -> C^{h-1}_t
        if (P.h - 1 >= c.lo)
            for (auto& [k, m] : c.d[P.h - 1 - c.lo])
                if (k.first == P.s) addm(P.h - 1, k.second, P.t, P.m * m, p, 1);
    }
    for (int h = c.lo; h <= c.hi(); ++h)
        for (size_t s = 0; s < c.count(h); ++s) {
            const RealPtr& r = c.obj[h - c.lo][s].r;
            addm(h, s, s, PolyMat::identity(r->rank(), r->ring().ngens()), lam, -1);
        }
    detail::SparseSolver solver(lam + 1);
    for (auto& [k, row] : eq) solver.add_row(std::move(row));
    for (auto& v : solver.nullspace())
        if (v[lam] != 0) return true;
    return false;
}

bool is_contractible(const WebComplex& c, int D) {
    WebComplex r = gaussian_eliminate(c, D);
    return r.empty() || has_contracting_homotopy(r);
}

// ---------------------------------------------------------------------------

std::vector<ChainMap> chain_map_basis(const WebComplex& A, const WebComplex& B) {
    struct Param {
        int h;
        size_t t, s;
        PolyMat m;
    };
    std::vector<Param> params;
    for (int h = std::max(A.lo, B.lo); h <= std::min(A.hi(), B.hi()); ++h)
        for (size_t s = 0; s < A.count(h); ++s)
            for (size_t t = 0; t < B.count(h); ++t) {
                const Summand &X = A.obj[h - A.lo][s], &Y = B.obj[h - B.lo][t];
                for (auto& f : hom_basis(X.r, Y.r, X.q - Y.q)) params.push_back({h, t, s, f.m});
            }
    std::vector<ChainMap> out;
    if (params.empty()) return out;
    // d_B f - f d_A, blockwise (h, s in A^h, t' in B^{h+1}); coordinates (block, y, x, mono)
    std::map<std::tuple<int, size_t, size_t, size_t, size_t, Poly::Mono>, detail::SparseRow> eq;
    auto addm = [&](int h, size_t s, size_t t2, const PolyMat& m, size_t p, int sign) {
        for (size_t y = 0; y < m.rows(); ++y)
            for (size_t x = 0; x < m.cols(); ++x)
                for (auto& [mm, cf] : m(y, x).terms()) eq[{h, s, t2, y, x, mm}][p] += sign > 0 ? cf : Rational(-cf);
    };
    for (size_t p = 0; p < params.size(); ++p) {
        const Param& P = params[p];
        // d_B . f_h : A^h_s -> B^{h+1}_{t'}
        if (P.h >= B.lo && P.h < B.hi())
            for (auto& [k, m] : B.d[P.h - B.lo])
                if (k.second == P.t) addm(P.h, P.s, k.first, m * P.m, p, +1);
        // f_h . d_A : A^{h-1}_{s'} -> B^h_t
        if (P.h - 1 >= A.lo && P.h - 1 < A.hi())
            for (auto& [k, m] : A.d[P.h - 1 - A.lo])
                if (k.first == P.s) addm(P.h - 1, k.second, P.t, P.m * m, p, -1);
    }
    detail::SparseSolver solver(params.size());
    for (auto& [k, row] : eq) solver.add_row(std::move(row));
    for (auto& v : solver.nullspace()) {
        ChainMap f;
        f.src = &A;
        f.tgt = &B;
        f.f.resize(A.obj.size());
        for (size_t p = 0; p < params.size(); ++p) {
            if (v[p] == 0) continue;
            auto& slot = f.f[params[p].h - A.lo];
            auto key = std::make_pair(params[p].t, params[p].s);
            PolyMat term = v[p] * params[p].m;
            auto it = slot.find(key);
            if (it == slot.end()) slot.emplace(key, term);
            else it->second += term;
        }
        out.push_back(std::move(f));
    }
    return out;
}

WebComplex cone(const ChainMap& f) {
    const WebComplex &A = *f.src, &B = *f.tgt;
    WebComplex C;
    const int lo = std::min(A.lo - 1, B.lo), hi = std::max(A.hi() - 1, B.hi());
    C.resize(lo, hi);
    // C^h = A^{h+1} (+) B^h, A-summands first
    for (int h = lo; h <= hi; ++h) {
        for (size_t s = 0; s < A.count(h + 1); ++s) C.obj[h - lo].push_back(A.obj[h + 1 - A.lo][s]);
        for (size_t t = 0; t < B.count(h); ++t) C.obj[h - lo].push_back(B.obj[h - B.lo][t]);
    }
    for (int h = lo; h < hi; ++h) {
        const size_t na = A.count(h + 1);
        if (h + 1 >= A.lo && h + 1 < A.hi())
            for (auto& [k, m] : A.d[h + 1 - A.lo]) C.add_component(h, k.first, k.second, Rational(-1) * m);
        if (h + 1 >= A.lo && h + 1 <= A.hi() && !f.f.empty())
            for (auto& [k, m] : f.f[h + 1 - A.lo]) C.add_component(h, A.count(h + 2) + k.first, k.second, m);
        if (h >= B.lo && h < B.hi())
            for (auto& [k, m] : B.d[h - B.lo]) C.add_component(h, A.count(h + 2) + k.first, na + k.second, m);
    }
    return C;
}

json EquivalenceReport::to_json() const {
    return {{"found", found},
            {"iso", iso},
            {"cone_contractible", cone_contractible},
            {"chain_maps", chain_maps},
            {"ranks_match", ranks_match},
            {"lhs_rank", lhs_rank.str()},
            {"rhs_rank", rhs_rank.str()},
            {"cone", cone_homology.to_json()}};
}

EquivalenceReport certify_equivalence(const WebComplex& a, const WebComplex& b, int D, unsigned seed) {
    EquivalenceReport rep;
    rep.lhs_rank = reduce_free(flatten(a)).graded_rank();
    rep.rhs_rank = reduce_free(flatten(b)).graded_rank();
    rep.ranks_match = rep.lhs_rank == rep.rhs_rank;
    auto basis = chain_map_basis(a, b);
    rep.chain_maps = basis.size();
    if (basis.empty()) {
        rep.cone_homology.exact = false;
        return rep;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(1, 997);
    ChainMap f;
    f.src = &a;
    f.tgt = &b;
    f.f.resize(a.obj.size());
    for (auto& g : basis) {
        Rational lam = dist(rng);
        for (size_t i = 0; i < g.f.size(); ++i)
            for (auto& [k, m] : g.f[i]) {
                auto it = f.f[i].find(k);
                if (it == f.f[i].end()) f.f[i].emplace(k, lam * m);
                else it->second += lam * m;
            }
    }
    WebComplex C = cone(f);
    rep.cone_homology = check_exact(C, D);
    // exactness is a statement about vector spaces; a bimodule contracting homotopy upgrades it
    if (rep.cone_homology.exact) rep.cone_contractible = has_contracting_homotopy(gaussian_eliminate(C, D));
    rep.found = rep.cone_homology.exact && rep.cone_contractible;
    // isomorphism in each degree: square blocks with invertible constant part
    rep.iso = true;
    for (int h = std::min(a.lo, b.lo); h <= std::max(a.hi(), b.hi()); ++h) {
        size_t ra = 0, rb = 0;
        for (size_t s = 0; s < a.count(h); ++s) ra += a.obj[h - a.lo][s].r->rank();
        for (size_t t = 0; t < b.count(h); ++t) rb += b.obj[h - b.lo][t].r->rank();
        if (ra != rb) {
            rep.iso = false;
            break;
        }
        if (!ra) continue;
        std::vector<size_t> oa, ob;
        size_t acc = 0;
        for (size_t s = 0; s < a.count(h); ++s) oa.push_back(acc), acc += a.obj[h - a.lo][s].r->rank();
        acc = 0;
        for (size_t t = 0; t < b.count(h); ++t) ob.push_back(acc), acc += b.obj[h - b.lo][t].r->rank();
        PolyMat M(rb, ra, a.ring().ngens());
        for (auto& [k, m] : f.f[h - a.lo])
            for (size_t y = 0; y < m.rows(); ++y)
                for (size_t x = 0; x < m.cols(); ++x) M(ob[k.first] + y, oa[k.second] + x) = m(y, x);
        if (!graded_inverse(M)) {
            rep.iso = false;
            break;
        }
    }
    return rep;
}

json NoseReport::to_json() const {
    return {{"objects_equal", objects_equal}, {"proportional", proportional}, {"ratios", ratios}};
}

NoseReport compare_on_the_nose(const WebComplex& a, const WebComplex& b) {
    NoseReport rep;
    rep.objects_equal = a.lo == b.lo && a.obj.size() == b.obj.size();
    for (size_t i = 0; rep.objects_equal && i < a.obj.size(); ++i) {
        if (a.obj[i].size() != b.obj[i].size()) rep.objects_equal = false;
        for (size_t s = 0; rep.objects_equal && s < a.obj[i].size(); ++s)
            if (a.obj[i][s].r != b.obj[i][s].r || a.obj[i][s].q != b.obj[i][s].q) rep.objects_equal = false;
    }
    if (!rep.objects_equal) return rep;
    rep.proportional = true;
    for (size_t i = 0; i < a.d.size(); ++i) {
        std::set<std::pair<size_t, size_t>> keys;
        for (auto& [k, m] : a.d[i]) keys.insert(k);
        for (auto& [k, m] : b.d[i]) keys.insert(k);
        for (auto& k : keys) {
            auto ia = a.d[i].find(k), ib = b.d[i].find(k);
            const bool za = ia == a.d[i].end() || ia->second.is_zero(), zb = ib == b.d[i].end() || ib->second.is_zero();
            if (za && zb) continue;
            if (za != zb) {
                rep.proportional = false;
                rep.ratios.push_back("0");
                continue;
            }
            auto r = proportionality(ia->second, ib->second);
            if (!r) rep.proportional = false;
            rep.ratios.push_back(r ? r->get_str() : "none");
        }
    }
    return rep;
}

}  // namespace schober

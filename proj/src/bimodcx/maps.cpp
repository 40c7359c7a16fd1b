#include <stdexcept>

#include "detail.hpp"
#include "schober/bimodcx.hpp"

namespace schober {

bool BimodMap::intertwines() const {
    const auto &L = src->left_action(), &LT = tgt->left_action();
    if (L.size() != LT.size()) return false;
    for (size_t e = 0; e < L.size(); ++e)
        if (LT[e] * m != m * L[e]) return false;
    return true;
}

bool BimodMap::homogeneous() const {
    const CoeffRing& R = src->ring();
    for (size_t y = 0; y < m.rows(); ++y)
        for (size_t x = 0; x < m.cols(); ++x) {
            const int want = src->basis_degree(x) + delta - tgt->basis_degree(y);
            for (auto& [mono, c] : m(y, x).terms())
                if (R.degree(mono) != want) return false;
        }
    return true;
}

json BimodMap::to_json() const {
    return {{"source", src->str()}, {"target", tgt->str()}, {"delta", delta}, {"matrix", m.to_json()}};
}

BimodMap compose(const BimodMap& f, const BimodMap& g) {
    if (f.src != g.tgt) throw std::invalid_argument("compose: " + g.tgt->str() + " != " + f.src->str());
    return BimodMap{g.src, f.tgt, f.delta + g.delta, f.m * g.m};
}

BimodMap operator+(const BimodMap& f, const BimodMap& g) {
    if (f.src != g.src || f.tgt != g.tgt || f.delta != g.delta) throw std::invalid_argument("BimodMap sum: mismatch");
    return BimodMap{f.src, f.tgt, f.delta, f.m + g.m};
}

BimodMap operator*(const Rational& c, const BimodMap& f) { return BimodMap{f.src, f.tgt, f.delta, c * f.m}; }

BimodMap identity_map(const RealPtr& r) { return BimodMap{r, r, 0, PolyMat::identity(r->rank(), r->ring().ngens())}; }

int map_qdegree(const BimodMap& f, int src_shift, int tgt_shift) { return -(f.delta + tgt_shift - src_shift); }

BimodMap vertex_map(const std::vector<Composition>& src_al, const std::vector<Composition>& tgt_al, const VertexFn& fn,
                    int delta) {
    RealPtr S = Realization::get(src_al), T = Realization::get(tgt_al);
    if (S->dom() != T->dom() || S->cod() != T->cod()) throw std::invalid_argument("vertex_map: ends differ");
    auto si = detail::align_index(src_al), ti = detail::align_index(tgt_al);
    const int n = S->n();
    BimodMap f{S, T, delta, PolyMat(T->rank(), S->rank(), S->ring().ngens())};
    for (size_t x = 0; x < S->rank(); ++x) {
        auto red = S->basis_element(x);
        VertexTensor v(src_al.size(), Poly::constant(n, 1));
        for (size_t i = 0; i < src_al.size(); ++i)
            if (i == 0 || si[i] != si[i - 1]) v[i] = red[si[i]];
        for (auto& out : fn(v)) {
            if (out.size() != tgt_al.size()) throw std::logic_error("vertex_map: wrong output length");
            std::vector<Poly> tr(T->path().size(), Poly::constant(n, 1));
            bool zero = false;
            for (size_t i = 0; i < out.size(); ++i) {
                if (out[i].is_zero()) zero = true;
                tr[ti[i]] *= out[i];
            }
            if (zero) continue;
            auto col = T->normal_form(tr);
            for (size_t y = 0; y < T->rank(); ++y) f.m(y, x) += col[y];
        }
    }
    return f;
}

BimodMap refinement_map(const std::vector<Composition>& src_al, const std::vector<Composition>& tgt_al) {
    if (src_al.size() != tgt_al.size()) throw std::invalid_argument("refinement_map: lengths differ");
    for (size_t i = 0; i < src_al.size(); ++i)
        if (!tgt_al[i].refines(src_al[i]))
            throw std::invalid_argument("refinement_map: " + tgt_al[i].str() + " does not refine " + src_al[i].str());
    if (src_al.front() != tgt_al.front() || src_al.back() != tgt_al.back())
        throw std::invalid_argument("refinement_map: ends differ");
    return vertex_map(src_al, tgt_al, [](const VertexTensor& v) { return std::vector<VertexTensor>{v}; }, 0);
}

BimodMap decoration(const RealPtr& r, size_t v, const Poly& g) {
    const int d = g.degree();
    return vertex_map(r->path(), r->path(),
                      [&](const VertexTensor& t) {
                          VertexTensor o = t;
                          o[v] *= g;
                          return std::vector<VertexTensor>{o};
                      },
                      d);
}

namespace {

struct AB {
    Composition n, ab;
    explicit AB(int a, int b) : n{a + b}, ab{a, b} {
        if (a < 1 || b < 1) throw std::invalid_argument("foam: a, b >= 1");
    }
};

}  // namespace

BimodMap foam_unit(int a, int b) {
    AB c(a, b);
    return refinement_map({c.n, c.n, c.n}, {c.n, c.ab, c.n});
}

BimodMap foam_counit(int a, int b) {
    AB c(a, b);
    return refinement_map({c.ab, c.n, c.ab}, {c.ab, c.ab, c.ab});
}

BimodMap foam_coev(int a, int b) {
    AB c(a, b);
    const DualBases& db = detail::fbases(c.ab, c.n);
    return vertex_map({c.ab, c.ab, c.ab}, {c.ab, c.n, c.ab},
                      [&](const VertexTensor& v) {
                          std::vector<VertexTensor> out;
                          for (size_t i = 0; i < db.basis.size(); ++i)
                              out.push_back({v[0] * v[1] * v[2] * db.basis[i], Poly::constant(a + b, 1), db.dual[i]});
                          return out;
                      },
                      2 * a * b);
}

BimodMap foam_trace(int a, int b) {
    AB c(a, b);
    return vertex_map({c.n, c.ab, c.n}, {c.n, c.n, c.n},
                      [&](const VertexTensor& v) {
                          return std::vector<VertexTensor>{{v[0], detail::trace(c.ab, c.n, v[1]), v[2]}};
                      },
                      -2 * a * b);
}

std::vector<SnakeResult> snake_identities(int a, int b) {
    AB c(a, b);
    const int n = a + b;
    const DualBases& db = detail::fbases(c.ab, c.n);
    auto one = Poly::constant(n, 1);
    std::vector<SnakeResult> out;
    // split web n -> ab, merge web ab -> n
    RealPtr S = Realization::get({c.n, c.ab}), M = Realization::get({c.ab, c.n});
    {
        auto f = refinement_map({c.n, c.n, c.n, c.ab}, {c.n, c.ab, c.n, c.ab});
        auto g = refinement_map({c.n, c.ab, c.n, c.ab}, {c.n, c.ab, c.ab, c.ab});
        out.push_back({"counit.unit on split", compose(g, f).m == identity_map(S).m});
    }
    {
        auto f = refinement_map({c.ab, c.n, c.n, c.n}, {c.ab, c.n, c.ab, c.n});
        auto g = refinement_map({c.ab, c.n, c.ab, c.n}, {c.ab, c.ab, c.ab, c.n});
        out.push_back({"counit.unit on merge", compose(g, f).m == identity_map(M).m});
    }
    {
        auto f = vertex_map({c.n, c.ab, c.ab, c.ab}, {c.n, c.ab, c.n, c.ab},
                            [&](const VertexTensor& v) {
                                std::vector<VertexTensor> o;
                                for (size_t i = 0; i < db.basis.size(); ++i)
                                    o.push_back({v[0], v[1] * v[2] * v[3] * db.basis[i], one, db.dual[i]});
                                return o;
                            },
                            2 * a * b);
        auto g = vertex_map({c.n, c.ab, c.n, c.ab}, {c.n, c.n, c.n, c.ab},
                            [&](const VertexTensor& v) {
                                return std::vector<VertexTensor>{{v[0], detail::trace(c.ab, c.n, v[1]), v[2], v[3]}};
                            },
                            -2 * a * b);
        out.push_back({"trace.coev on split", compose(g, f).m == identity_map(S).m});
    }
    {
        auto f = vertex_map({c.ab, c.ab, c.ab, c.n}, {c.ab, c.n, c.ab, c.n},
                            [&](const VertexTensor& v) {
                                std::vector<VertexTensor> o;
                                for (size_t i = 0; i < db.basis.size(); ++i)
                                    o.push_back({v[0] * v[1] * v[2] * db.basis[i], one, db.dual[i], v[3]});
                                return o;
                            },
                            2 * a * b);
        auto g = vertex_map({c.ab, c.n, c.ab, c.n}, {c.ab, c.n, c.n, c.n},
                            [&](const VertexTensor& v) {
                                return std::vector<VertexTensor>{{v[0], v[1], detail::trace(c.ab, c.n, v[2]), v[3]}};
                            },
                            -2 * a * b);
        out.push_back({"trace.coev on merge", compose(g, f).m == identity_map(M).m});
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace detail {

void SparseSolver::add_row(SparseRow r) {
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    // pivot rows have no entries in other pivot columns, so one pass suffices
    std::vector<std::pair<size_t, Rational>> hits;
    for (auto& [c, v] : r)
        if (piv_.count(c)) hits.emplace_back(c, v);
    for (auto& [c, v] : hits)
        for (auto& [cc, pv] : piv_.at(c)) {
            Rational& e = r[cc];
            e -= v * pv;
            if (e == 0) r.erase(cc);
        }
    if (r.empty()) return;
    const size_t pc = r.begin()->first;
    const Rational inv = 1 / r.begin()->second;
    for (auto& [c, v] : r) v *= inv;
    for (auto& [c, row] : piv_) {
        auto it = row.find(pc);
        if (it == row.end()) continue;
        const Rational f = it->second;
        for (auto& [cc, v] : r) {
            Rational& e = row[cc];
            e -= f * v;
            if (e == 0) row.erase(cc);
        }
    }
    piv_.emplace(pc, std::move(r));
}

std::vector<std::vector<Rational>> SparseSolver::nullspace() const {
    std::vector<std::vector<Rational>> out;
    for (size_t f = 0; f < n_; ++f) {
        if (piv_.count(f)) continue;
        std::vector<Rational> v(n_);
        v[f] = 1;
        for (auto& [pc, row] : piv_) {
            auto it = row.find(f);
            if (it != row.end()) v[pc] = -it->second;
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

std::vector<BimodMap> hom_basis(const RealPtr& S, const RealPtr& T, int delta) {
    if (S->dom() != T->dom() || S->cod() != T->cod()) throw std::invalid_argument("hom_basis: ends differ");
    const CoeffRing& R = S->ring();
    const int nv = R.ngens();
    // unknowns: (y, x, monomial) with the forced degree
    struct Var {
        size_t y, x;
        Poly::Mono m;
    };
    std::vector<Var> vars;
    std::map<std::pair<size_t, size_t>, std::vector<size_t>> at;
    for (size_t y = 0; y < T->rank(); ++y)
        for (size_t x = 0; x < S->rank(); ++x) {
            const int e = S->basis_degree(x) + delta - T->basis_degree(y);
            for (auto m : R.basis(e)) {
                at[{y, x}].push_back(vars.size());
                vars.push_back({y, x, m});
            }
        }
    std::vector<BimodMap> out;
    if (vars.empty()) return out;
    detail::SparseSolver solver(vars.size());
    const auto &LS = S->left_action(), &LT = T->left_action();
    for (size_t g = 0; g < LS.size(); ++g) {
        // (LT Phi - Phi LS)(y, x) = 0 coefficientwise
        std::map<std::tuple<size_t, size_t, Poly::Mono>, detail::SparseRow> eq;
        for (size_t v = 0; v < vars.size(); ++v) {
            const Var& u = vars[v];
            for (size_t y = 0; y < T->rank(); ++y)
                for (auto& [mm, c] : LT[g](y, u.y).terms()) eq[{y, u.x, mm + u.m}][v] += c;
            for (size_t x = 0; x < S->rank(); ++x)
                for (auto& [mm, c] : LS[g](u.x, x).terms()) eq[{u.y, x, mm + u.m}][v] -= c;
        }
        for (auto& [k, row] : eq) solver.add_row(std::move(row));
    }
    for (auto& sol : solver.nullspace()) {
        BimodMap f{S, T, delta, PolyMat(T->rank(), S->rank(), nv)};
        for (size_t v = 0; v < vars.size(); ++v)
            if (sol[v] != 0) f.m(vars[v].y, vars[v].x).add_term(vars[v].m, sol[v]);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace schober

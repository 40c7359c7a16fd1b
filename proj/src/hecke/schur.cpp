#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "schober/hecke.hpp"

namespace schober {

namespace {

const HeckeElt& cached_symmetrizer(const Composition& c) {
    static std::mutex mu;
    static std::map<Composition, std::unique_ptr<HeckeElt>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(c);
    if (it != cache.end()) return *it->second;
    HeckeElt x = symmetrizer(c);
    // x_c^2 = pi_c x_c is the defining normalisation
    if (hecke_mul(x, x) != poincare(c) * x) throw std::logic_error("symmetrizer normalisation failed for " + c.str());
    return *cache.emplace(c, std::make_unique<HeckeElt>(std::move(x))).first->second;
}

void require_same_objects(const SchurMor& a, const SchurMor& b) {
    if (a.dom != b.dom || a.cod != b.cod) throw std::invalid_argument("Schur morphisms between different objects");
}

}  // namespace

SchurMor& SchurMor::operator+=(const SchurMor& o) {
    require_same_objects(*this, o);
    if (den == o.den) {
        elt += o.elt;
    } else {
        elt = den * o.elt + o.den * elt;
        den = den * o.den;
    }
    return *this;
}

SchurMor operator-(SchurMor a, const SchurMor& b) {
    SchurMor nb = b;
    nb.elt = -nb.elt;
    return a += nb;
}

SchurMor operator*(const LaurentPoly& c, SchurMor a) {
    a.elt = c * a.elt;
    return a;
}

bool SchurMor::in_hom_space() const {
    const LaurentPoly q = LaurentPoly::monomial(1);
    const HeckeElt qe = q * elt;
    auto check = [&](const Composition& c, bool left) {
        auto off = c.offsets();
        for (size_t b = 0; b < c.size(); ++b)
            for (int i = off[b] + 1; i < off[b + 1]; ++i)
                if ((left ? elt.mul_Ts_left(i) : elt.mul_Ts_right(i)) != qe) return false;
        return true;
    };
    return check(cod, true) && check(dom, false);
}

std::string SchurMor::str() const {
    std::string s = dom.str() + " -> " + cod.str() + ": " + elt.str();
    if (!exact()) s += " / (" + den.str() + ")";
    return s;
}

json SchurMor::to_json() const {
    json j{{"domain", dom.parts}, {"codomain", cod.parts}, {"element", elt.to_json()}};
    if (!exact()) j["denominator"] = den.str();
    return j;
}

SchurMor schur_zero(const Composition& dom, const Composition& cod) {
    if (dom.total() != cod.total()) throw std::invalid_argument("schur_zero: totals differ");
    return SchurMor{dom, cod, HeckeElt(dom.total()), LaurentPoly(1)};
}

SchurMor schur_id(const Composition& c) { return SchurMor{c, c, cached_symmetrizer(c), LaurentPoly(1)}; }

SchurMor schur_compose(const SchurMor& f, const SchurMor& g) {
    if (f.dom != g.cod) throw std::invalid_argument("schur_compose: " + f.dom.str() + " != " + g.cod.str());
    HeckeElt prod = hecke_mul(f.elt, g.elt);
    LaurentPoly pi = poincare(f.dom);
    SchurMor r{g.dom, f.cod, HeckeElt(f.dom.total()), f.den * g.den};
    if (auto e = prod.divide_exact(pi)) {
        r.elt = std::move(*e);
    } else {
        r.elt = std::move(prod);
        r.den = r.den * pi;
    }
    return r;
}

SchurMor schur_tensor(const SchurMor& f, const SchurMor& g) {
    const int m = f.dom.total(), k = g.dom.total();
    if (m == 0) return g;
    if (k == 0) return f;
    HeckeElt a = f.elt.embed(m + k, 0), b = g.elt.embed(m + k, m);
    return SchurMor{concat(f.dom, g.dom), concat(f.cod, g.cod), hecke_mul(a, b), f.den * g.den};
}

SchurMor whisker(const Composition& left, const SchurMor& f, const Composition& right) {
    SchurMor r = f;
    if (left.total() > 0) r = schur_tensor(schur_id(left), r);
    if (right.total() > 0) r = schur_tensor(r, schur_id(right));
    return r;
}

std::optional<LaurentPoly> unit_multiple_of_id(const SchurMor& f) {
    if (f.dom != f.cod || !f.exact()) return std::nullopt;
    const HeckeAlgebra& H = f.elt.algebra();
    LaurentPoly u = f.elt.coeff(H.index(longest_element(f.dom)));
    if (!u.is_unit()) return std::nullopt;
    if (u * schur_id(f.dom).elt != f.elt) return std::nullopt;
    return u;
}

SchurMor split_class(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("split_class: negative label");
    Composition top = drop_zeros({a + b});
    return SchurMor{top, drop_zeros({a, b}), cached_symmetrizer(top), LaurentPoly(1)};
}

SchurMor merge_class(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("merge_class: negative label");
    Composition top = drop_zeros({a + b});
    return SchurMor{drop_zeros({a, b}), top, cached_symmetrizer(top), LaurentPoly(1)};
}

SchurMor ind_class(const Composition& c, const Composition& finer) {
    if (!finer.refines(c)) throw std::invalid_argument("ind_class: " + finer.str() + " does not refine " + c.str());
    return SchurMor{c, finer, cached_symmetrizer(c), LaurentPoly(1)};
}

SchurMor res_class(const Composition& finer, const Composition& c) {
    if (!finer.refines(c)) throw std::invalid_argument("res_class: " + finer.str() + " does not refine " + c.str());
    const int shift = c.longest_length() - finer.longest_length();
    return SchurMor{finer, c, cached_symmetrizer(c).shifted(shift), LaurentPoly(1)};
}

SchurMor path_class(const std::vector<std::vector<int>>& path, bool merge_shifted) {
    if (path.empty()) throw std::invalid_argument("path_class: empty path");
    Composition prev = drop_zeros(path[0]);
    SchurMor e = schur_id(prev);
    for (size_t i = 1; i < path.size(); ++i) {
        Composition next = drop_zeros(path[i]);
        if (next == prev) continue;
        HeckeElt step(prev.total());
        if (next.refines(prev)) {
            step = e.elt.mul_sym_left(prev);
        } else if (prev.refines(next)) {
            step = e.elt.mul_sym_left(next);
            if (!merge_shifted) step = step.shifted(next.longest_length() - prev.longest_length());
        } else {
            throw std::invalid_argument("path_class: " + prev.str() + " and " + next.str() + " are not comparable");
        }
        auto d = step.divide_exact(poincare(prev));
        if (!d) throw std::logic_error("path_class: inexact division at " + prev.str());
        e = SchurMor{e.dom, next, std::move(*d), e.den};
        prev = next;
    }
    return e;
}

int ladder_kmin(int a, int b, int c, int d) {
    if (a + b != c + d) throw std::invalid_argument("ladder: a+b != c+d");
    return std::max(0, c - a);
}

std::vector<std::vector<int>> ladder_path(int a, int b, int c, int d, int k) {
    if (a + b != c + d) throw std::invalid_argument("ladder: a+b != c+d");
    if (k < ladder_kmin(a, b, c, d) || k > b) throw std::out_of_range("ladder: rung label out of range");
    return {{a, b}, {a, k, b - k}, {a + k, b - k}, {c, a + k - c, b - k}, {c, d}};
}

SchurMor ladder_class(int a, int b, int c, int d, int k) { return path_class(ladder_path(a, b, c, d, k), true); }

namespace {

SchurMor crossing_sum(int a, int b, int c, int d, int sign) {
    if (a < 0 || b < 0 || c < 0 || d < 0) throw std::invalid_argument("crossing: negative label");
    if (a + b != c + d) throw std::invalid_argument("crossing: a+b != c+d");
    SchurMor r = schur_zero(drop_zeros({a, b}), drop_zeros({c, d}));
    for (int k = ladder_kmin(a, b, c, d); k <= b; ++k) {
        const int j = b - k;
        LaurentPoly coef = LaurentPoly::monomial(sign * j * (a - d + 1), j % 2 ? -1 : 1);
        r += coef * ladder_class(a, b, c, d, k);
    }
    return r;
}

}  // namespace

SchurMor crossing_class(int a, int b, int c, int d) { return crossing_sum(a, b, c, d, -1); }
SchurMor crossing_class_inv(int a, int b, int c, int d) { return crossing_sum(a, b, c, d, +1); }

SchurMor strand_crossing(const std::vector<int>& colours, int i, bool positive) {
    if (i < 0 || i + 1 >= static_cast<int>(colours.size())) throw std::out_of_range("strand_crossing index");
    const int a = colours[i], b = colours[i + 1];
    SchurMor c = positive ? crossing_class(a, b, b, a) : crossing_class_inv(a, b, b, a);
    std::vector<int> left(colours.begin(), colours.begin() + i), right(colours.begin() + i + 2, colours.end());
    return whisker(drop_zeros(left), c, drop_zeros(right));
}

HilbertSeries character(const SchurMor& h) {
    const int n = h.dom.total();
    const HeckeAlgebra& H = h.elt.algebra();
    BiLaurent phi;
    for (int w : h.elt.support()) phi += h.elt.coeff(w).to_bi().shifted(H.length[w]);
    LaurentPoly den = poincare(h.dom) * poincare(h.cod) * h.den;
    HilbertSeries ring(BiLaurent(1), std::vector<int>(n, 2));
    HilbertSeries d(den.to_bi().shifted(h.cod.longest_length()), {});
    return HilbertSeries(phi, {}) * ring / d;
}

}  // namespace schober

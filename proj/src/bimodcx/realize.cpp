#include <mutex>
#include <sstream>
#include <stdexcept>

#include "detail.hpp"
#include "schober/bimodcx.hpp"

namespace schober {

namespace {

bool finer(const Composition& x, const Composition& y) { return x != y && x.refines(y); }

}  // namespace

std::vector<Composition> reduce_path(const std::vector<Composition>& path) {
    if (path.empty()) throw std::invalid_argument("reduce_path: empty path");
    std::vector<Composition> out;
    for (auto& c : path) {
        if (!out.empty() && out.back() == c) continue;
        if (!out.empty() && !c.refines(out.back()) && !out.back().refines(c))
            throw std::invalid_argument("web path: " + out.back().str() + " and " + c.str() + " are not comparable");
        if (!out.empty() && c.total() != out.back().total()) throw std::invalid_argument("web path: totals differ");
        out.push_back(c);
    }
    return out;
}

int merge_shift(const std::vector<Composition>& path) {
    int s = 0;
    for (size_t i = 1; i < path.size(); ++i)
        if (finer(path[i - 1], path[i])) s -= path[i].longest_length() - path[i - 1].longest_length();
    return s;
}

WebWord WebWord::from_comps(const std::vector<Composition>& path, bool merge_shifted) {
    WebWord w;
    w.path = reduce_path(path);
    w.qshift = merge_shifted ? merge_shift(w.path) : 0;
    return w;
}

WebWord WebWord::from_path(const std::vector<std::vector<int>>& path, bool merge_shifted) {
    std::vector<Composition> comps;
    for (auto& p : path) comps.push_back(drop_zeros(p));
    return from_comps(comps, merge_shifted);
}

std::string WebWord::str() const {
    std::string s;
    for (size_t i = 0; i < path.size(); ++i) s += (i ? " -> " : "") + path[i].str();
    if (qshift) s += " {q^" + std::to_string(qshift) + "}";
    return s;
}

json WebWord::to_json() const {
    json p = json::array();
    for (auto& c : path) p.push_back(c.parts);
    return {{"path", p}, {"qshift", qshift}};
}

namespace detail {

std::vector<size_t> align_index(const std::vector<Composition>& aligned) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < aligned.size(); ++i) idx.push_back(i == 0 ? 0 : idx.back() + (aligned[i] != aligned[i - 1]));
    return idx;
}

}  // namespace detail

// ---------------------------------------------------------------------------

std::shared_ptr<const Realization> Realization::get(const std::vector<Composition>& path) {
    auto red = reduce_path(path);
    static std::mutex mu;
    static std::map<std::vector<Composition>, std::shared_ptr<const Realization>> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(red);
        if (it != cache.end()) return it->second;
    }
    std::shared_ptr<const Realization> r(new Realization(red));
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(red, r).first->second;
}

Realization::Realization(std::vector<Composition> path) : path_(std::move(path)), ring_(CoeffRing::get(path_.front())) {
    const size_t L = path_.size();
    for (size_t i = 0; i < L; ++i) {
        bool up_left = i == 0 || finer(path_[i], path_[i - 1]);
        bool up_right = i + 1 == L || finer(path_[i], path_[i + 1]);
        if (up_left && up_right) peaks_.push_back(i);
        if (i > 0 && i + 1 < L && finer(path_[i - 1], path_[i]) && finer(path_[i + 1], path_[i])) valleys_.push_back(i);
    }
    if (peaks_.size() != valleys_.size() + 1) throw std::logic_error("Realization: peak/valley count");
    run_of_.resize(L);
    for (size_t i = 0, j = 0; i < L; ++i) {
        run_of_[i] = j;
        if (j < valleys_.size() && valleys_[j] == i) ++j;
    }
    const size_t m = peaks_.size();
    for (size_t j = 0; j < m; ++j) {
        const Composition& V = j ? path_[valleys_[j - 1]] : dom();
        const DualBases& db = detail::fbases(path_[peaks_[j]], V);
        fb_basis_.push_back(db.basis);
        fb_dual_.push_back(db.dual);
    }
    // tuples (i_{m-1}, ..., i_0), flattened with i_{m-1} most significant
    std::vector<size_t> t(m, 0);
    for (;;) {
        int d = 0;
        for (size_t j = 0; j < m; ++j) d += fb_basis_[j][t[j]].degree();
        deg_.push_back(d);
        tuples_.push_back(t);
        size_t j = 0;
        while (j < m && ++t[j] == fb_basis_[j].size()) t[j++] = 0;
        if (j == m) break;
    }
    // the loop above enumerates with i_0 fastest; flattening below matches that order
    InvariantRing codring(cod());
    for (auto& g : codring.generators()) {
        PolyMat L_e(rank(), rank(), ring_.ngens());
        for (size_t x = 0; x < rank(); ++x) {
            auto v = basis_element(x);
            v.back() *= g;
            auto col = normal_form(v);
            for (size_t y = 0; y < rank(); ++y) L_e(y, x) = std::move(col[y]);
        }
        left_.push_back(std::move(L_e));
    }
}

std::vector<Poly> Realization::basis_element(size_t i) const {
    const int n = this->n();
    std::vector<Poly> v(path_.size(), Poly::constant(n, 1));
    for (size_t j = 0; j < peaks_.size(); ++j) v[peaks_[j]] = fb_basis_[j][tuples_[i][j]];
    return v;
}

std::vector<Poly> Realization::normal_form(const std::vector<Poly>& vertex_polys) const {
    if (vertex_polys.size() != path_.size()) throw std::invalid_argument("normal_form: wrong number of vertices");
    const int n = this->n();
    const size_t m = peaks_.size();
    std::vector<Poly> g(m, Poly::constant(n, 1));
    for (size_t i = 0; i < path_.size(); ++i)
        if (!(vertex_polys[i].terms().size() == 1 && vertex_polys[i].coeff(0) == 1)) g[run_of_[i]] *= vertex_polys[i];
    // index = sum_j i_j * stride_j with i_0 least significant
    std::vector<size_t> stride(m, 1);
    for (size_t j = 1; j < m; ++j) stride[j] = stride[j - 1] * fb_basis_[j - 1].size();
    std::vector<std::pair<size_t, Poly>> st{{0, g[m - 1]}};
    for (size_t jj = m; jj-- > 0;) {
        const Composition& P = path_[peaks_[jj]];
        const Composition& V = jj ? path_[valleys_[jj - 1]] : dom();
        std::vector<std::pair<size_t, Poly>> next;
        for (auto& [idx, r] : st) {
            if (r.is_zero()) continue;
            for (size_t i = 0; i < fb_basis_[jj].size(); ++i) {
                Poly c = P == V ? r : detail::trace(P, V, fb_dual_[jj][i] * r);
                if (c.is_zero()) continue;
                if (jj) c *= g[jj - 1];
                next.emplace_back(idx + i * stride[jj], std::move(c));
            }
        }
        st = std::move(next);
    }
    std::vector<Poly> out(rank(), ring_.zero());
    for (auto& [idx, r] : st) out[idx] += ring_.from_x(r);
    return out;
}

HilbertSeries Realization::hilbert() const {
    HilbertSeries h;
    for (size_t p : peaks_) h = h * schober::hilbert(path_[p]);
    for (size_t v : valleys_) h = h / schober::hilbert(path_[v]);
    return h;
}

HilbertSeries Realization::basis_hilbert() const {
    BiLaurent num;
    for (int d : deg_) num += BiLaurent::q(d);
    return HilbertSeries(num, {}) * ring_.hilbert();
}

std::vector<long> Realization::dims(int lo, int hi) const {
    std::vector<long> out;
    for (int q = lo; q <= hi; ++q) {
        long s = 0;
        for (int d : deg_) s += static_cast<long>(ring_.dim(q - d));
        out.push_back(s);
    }
    return out;
}

bool Realization::check_dimensions(int D) const {
    auto a = dims(0, D);
    auto b = hilbert().expand(0, D);
    for (int q = 0; q <= D; ++q)
        if (Rational(a[q]) != b[q]) return false;
    return hilbert() == basis_hilbert();
}

std::string Realization::str() const {
    std::string s;
    for (size_t i = 0; i < path_.size(); ++i) s += (i ? "->" : "") + path_[i].str();
    return s;
}

}  // namespace schober

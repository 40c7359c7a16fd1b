#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "detail.hpp"
#include "schober/bimodcx.hpp"

namespace schober {

struct CoeffRing::Cache {
    std::recursive_mutex mu;
    std::map<int, std::vector<Poly::Mono>> basis;
    std::map<int, RatMatrix> inv;  // orbit-representative coordinates -> y coordinates
    std::map<Poly::Mono, Poly> to_x;
};

CoeffRing::CoeffRing(Composition c) : c_(std::move(c)), inv_(c_), gdeg_(inv_.generator_degrees()), cache_(new Cache) {}
CoeffRing::~CoeffRing() = default;

const CoeffRing& CoeffRing::get(const Composition& c) {
    static std::mutex mu;
    static std::map<Composition, std::unique_ptr<CoeffRing>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(c);
    if (it != cache.end()) return *it->second;
    return *cache.emplace(c, std::unique_ptr<CoeffRing>(new CoeffRing(c))).first->second;
}

int CoeffRing::degree(Poly::Mono m) const {
    int d = 0;
    for (int i = 0; i < ngens(); ++i) d += Poly::exponent(m, i) * gdeg_[i];
    return d;
}

const std::vector<Poly::Mono>& CoeffRing::basis(int qdeg) const {
    static const std::vector<Poly::Mono> empty;
    if (qdeg < 0 || qdeg % 2) return empty;
    std::lock_guard<std::recursive_mutex> lk(cache_->mu);
    auto it = cache_->basis.find(qdeg);
    if (it != cache_->basis.end()) return it->second;
    std::vector<Poly::Mono> out;
    std::vector<int> e(ngens(), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == ngens()) {
            if (left == 0) out.push_back(Poly::pack(e));
            return;
        }
        for (int x = 0; x * gdeg_[i] <= left; ++x) {
            e[i] = x;
            rec(i + 1, left - x * gdeg_[i]);
        }
        e[i] = 0;
    };
    rec(0, qdeg);
    std::sort(out.begin(), out.end());
    return cache_->basis.emplace(qdeg, std::move(out)).first->second;
}

Poly CoeffRing::to_x(const Poly& y) const {
    const int n = c_.total();
    Poly out(n);
    std::lock_guard<std::recursive_mutex> lk(cache_->mu);
    for (auto& [m, c] : y.terms()) {
        auto it = cache_->to_x.find(m);
        if (it == cache_->to_x.end()) {
            Poly p = Poly::constant(n, 1);
            for (int i = 0; i < ngens(); ++i)
                for (int r = 0; r < Poly::exponent(m, i); ++r) p *= inv_.generators()[i];
            it = cache_->to_x.emplace(m, std::move(p)).first;
        }
        out += it->second * c;
    }
    return out;
}

Poly CoeffRing::from_x(const Poly& p) const {
    Poly out(ngens());
    std::map<int, Poly> parts;
    for (auto& [m, c] : p.terms()) {
        int d = 2 * Poly::mono_degree(m);
        auto it = parts.try_emplace(d, Poly(p.nvars())).first;
        it->second.add_term(m, c);
    }
    for (auto& [d, part] : parts) {
        auto reps = orbit_representatives(c_, d);
        const auto& B = basis(d);
        if (reps.size() != B.size()) throw std::logic_error("CoeffRing: dimension mismatch in degree " + std::to_string(d));
        const RatMatrix* inv = nullptr;
        {
            std::lock_guard<std::recursive_mutex> lk(cache_->mu);
            auto it = cache_->inv.find(d);
            if (it == cache_->inv.end()) {
                RatMatrix A(reps.size(), B.size());
                for (size_t j = 0; j < B.size(); ++j) {
                    Poly x = to_x(Poly::monomial(ngens(), Poly::unpack(B[j], ngens())));
                    for (size_t r = 0; r < reps.size(); ++r) A(r, j) = x.coeff(reps[r]);
                }
                auto ai = A.inverse();
                if (!ai) throw std::logic_error("CoeffRing: singular change of basis");
                it = cache_->inv.emplace(d, std::move(*ai)).first;
            }
            inv = &it->second;
        }
        for (size_t j = 0; j < B.size(); ++j) {
            Rational s = 0;
            for (size_t r = 0; r < reps.size(); ++r) {
                const Rational& a = (*inv)(j, r);
                if (a != 0) s += a * part.coeff(reps[r]);
            }
            if (s != 0) out.add_term(B[j], s);
        }
    }
    return out;
}

HilbertSeries CoeffRing::hilbert() const { return HilbertSeries::free_poly(gdeg_); }

// ---------------------------------------------------------------------------

PolyMat::PolyMat(size_t rows, size_t cols, int nvars) : r_(rows), c_(cols), nv_(nvars), a_(rows * cols, Poly(nvars)) {}

PolyMat PolyMat::identity(size_t n, int nvars) {
    PolyMat m(n, n, nvars);
    for (size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(nvars, 1);
    return m;
}

PolyMat operator*(const PolyMat& x, const PolyMat& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("PolyMat: shape mismatch in product");
    PolyMat z(x.r_, y.c_, std::max(x.nv_, y.nv_));
    for (size_t i = 0; i < x.r_; ++i)
        for (size_t k = 0; k < x.c_; ++k) {
            const Poly& a = x(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < y.c_; ++j) {
                const Poly& b = y(k, j);
                if (!b.is_zero()) z(i, j) += a * b;
            }
        }
    return z;
}

PolyMat& PolyMat::operator+=(const PolyMat& y) {
    if (r_ != y.r_ || c_ != y.c_) throw std::invalid_argument("PolyMat: shape mismatch in sum");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += y.a_[i];
    return *this;
}

PolyMat& PolyMat::operator-=(const PolyMat& y) {
    if (r_ != y.r_ || c_ != y.c_) throw std::invalid_argument("PolyMat: shape mismatch in difference");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= y.a_[i];
    return *this;
}

PolyMat& PolyMat::operator*=(const Rational& c) {
    for (auto& p : a_) p *= c;
    if (c == 0)
        for (auto& p : a_) p = Poly(nv_);
    return *this;
}

bool PolyMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMat PolyMat::submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
    PolyMat m(rows.size(), cols.size(), nv_);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
}

RatMatrix PolyMat::constant_part() const {
    RatMatrix m(r_, c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j).coeff(0);
    return m;
}

json PolyMat::to_json() const {
    json rows = json::array();
    for (size_t i = 0; i < r_; ++i) {
        json row = json::array();
        for (size_t j = 0; j < c_; ++j) row.push_back((*this)(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

std::optional<Rational> proportionality(const PolyMat& a, const PolyMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    std::optional<Rational> lambda;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            const Poly &x = a(i, j), &y = b(i, j);
            if (x.is_zero() != y.is_zero()) return std::nullopt;
            if (x.is_zero()) continue;
            if (!lambda) lambda = x.terms().begin()->second / y.terms().begin()->second;
            if (x != y * *lambda) return std::nullopt;
        }
    return lambda;
}

// ---------------------------------------------------------------------------

namespace detail {

Poly trace(const Composition& I, const Composition& J, const Poly& p) {
    if (I == J) return p;
    static std::mutex mu;
    static std::map<std::pair<Composition, Composition>, std::vector<int>> words;
    const std::vector<int>* w;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = words.find({I, J});
        if (it == words.end()) {
            if (!I.refines(J)) throw std::invalid_argument("trace: " + I.str() + " does not refine " + J.str());
            Permutation x = longest_element(J) * longest_element(I).inverse();
            it = words.emplace(std::make_pair(I, J), reduced_word(x)).first;
        }
        w = &it->second;
    }
    return demazure_word(*w, p);
}

const DualBases& fbases(const Composition& P, const Composition& V) {
    static std::mutex mu;
    static std::map<std::pair<Composition, Composition>, std::unique_ptr<DualBases>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({P, V});
    if (it != cache.end()) return *it->second;
    auto db = std::make_unique<DualBases>(P == V ? DualBases{{Poly::constant(P.total(), 1)}, {Poly::constant(P.total(), 1)}}
                                                 : frobenius_bases(P, V));
    return *cache.emplace(std::make_pair(P, V), std::move(db)).first->second;
}

}  // namespace detail

}  // namespace schober

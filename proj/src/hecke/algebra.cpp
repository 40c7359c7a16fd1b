#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "schober/hecke.hpp"

namespace schober {

namespace {

inline int64_t add_checked(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Hecke coefficient overflow");
    return r;
}

inline int64_t mul_checked(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Hecke coefficient overflow");
    return r;
}

}  // namespace

int HeckeAlgebra::rank(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    int r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) smaller += w[j] < w[i];
        r = r * (n - i) + smaller;
    }
    return r;
}

int HeckeAlgebra::index(const Permutation& w) const {
    if (w.n() != n) throw std::invalid_argument("permutation size does not match Hecke algebra");
    return rank(w.images());
}

const HeckeAlgebra& HeckeAlgebra::get(int n) {
    constexpr int kMax = 8;
    if (n < 0 || n > kMax) throw std::out_of_range("Hecke algebra supports 0 <= n <= 8");
    static std::array<std::unique_ptr<HeckeAlgebra>, kMax + 1> cache;
    static std::array<std::once_flag, kMax + 1> once;
    std::call_once(once[n], [n] {
        auto H = std::make_unique<HeckeAlgebra>();
        H->n = n;
        H->perms = all_permutations(n);
        H->N = static_cast<int>(H->perms.size());
        H->length.resize(H->N);
        H->inverse.resize(H->N);
        H->max_right_descent.assign(H->N, 0);
        H->rmul.assign(std::max(n, 1), std::vector<int>(H->N));
        H->lmul.assign(std::max(n, 1), std::vector<int>(H->N));
        for (int w = 0; w < H->N; ++w) {
            const Permutation& p = H->perms[w];
            if (rank(p.images()) != w) throw std::logic_error("permutation enumeration is not lexicographic");
            H->length[w] = p.length();
            H->inverse[w] = rank(p.inverse().images());
            for (int s = 1; s < n; ++s) {
                Permutation si = Permutation::simple(n, s);
                H->rmul[s][w] = rank((p * si).images());
                H->lmul[s][w] = rank((si * p).images());
                if (p.right_descent(s)) H->max_right_descent[w] = s;
            }
        }
        cache[n] = std::move(H);
    });
    return *cache[n];
}

// ---- HeckeElt ----

HeckeElt::HeckeElt(int n) : n_(n), H_(&HeckeAlgebra::get(n)) {}

HeckeElt HeckeElt::T(const Permutation& w) {
    HeckeElt x(w.n());
    x.add_coeff(x.H_->index(w), LaurentPoly(1));
    return x;
}

HeckeElt HeckeElt::T_word(int n, const std::vector<int>& word) {
    HeckeElt x = one(n);
    for (int s : word) {
        if (s < 1 || s >= n) throw std::out_of_range("T_word: generator index");
        x = x.mul_Ts_right(s);
    }
    return x;
}

HeckeElt HeckeElt::one(int n) { return scalar(n, LaurentPoly(1)); }

HeckeElt HeckeElt::scalar(int n, const LaurentPoly& c) {
    HeckeElt x(n);
    x.add_coeff(0, c);
    return x;
}

LaurentPoly HeckeElt::coeff(int w) const {
    LaurentPoly r;
    for (int k = 0; k < K_; ++k)
        if (int64_t c = slice(k)[w]) r += LaurentPoly::monomial(lo_ + k, c);
    return r;
}

void HeckeElt::ensure_range(int lo, int hi) {
    if (lo > hi) return;
    const int N = H_->N;
    if (K_ == 0) {
        lo_ = lo;
        K_ = hi - lo + 1;
        d_.assign(static_cast<size_t>(K_) * N, 0);
        return;
    }
    const int nlo = std::min(lo, lo_), nhi = std::max(hi, lo_ + K_ - 1);
    if (nlo == lo_ && nhi == lo_ + K_ - 1) return;
    const int nK = nhi - nlo + 1;
    std::vector<int64_t> nd(static_cast<size_t>(nK) * N, 0);
    std::copy(d_.begin(), d_.end(), nd.begin() + static_cast<size_t>(lo_ - nlo) * N);
    d_.swap(nd);
    lo_ = nlo;
    K_ = nK;
}

void HeckeElt::trim() {
    const int N = H_->N;
    auto zero = [&](int k) {
        const int64_t* p = slice(k);
        return std::all_of(p, p + N, [](int64_t v) { return v == 0; });
    };
    int a = 0, b = K_;
    while (a < b && zero(a)) ++a;
    while (b > a && zero(b - 1)) --b;
    if (a == b) {
        K_ = 0;
        lo_ = 0;
        d_.clear();
        return;
    }
    if (a == 0 && b == K_) return;
    std::vector<int64_t> nd(d_.begin() + static_cast<size_t>(a) * N, d_.begin() + static_cast<size_t>(b) * N);
    d_.swap(nd);
    lo_ += a;
    K_ = b - a;
}

void HeckeElt::add_coeff(int w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    ensure_range(c.lo(), c.hi());
    for (int e = c.lo(); e <= c.hi(); ++e) {
        int64_t& t = slice(e - lo_)[w];
        t = add_checked(t, c[e]);
    }
    trim();
}

std::vector<int> HeckeElt::support() const {
    std::vector<int> out;
    for (int w = 0; w < H_->N; ++w)
        for (int k = 0; k < K_; ++k)
            if (slice(k)[w]) {
                out.push_back(w);
                break;
            }
    return out;
}

void HeckeElt::axpy(int64_t c, int qshift, const HeckeElt& z) {
    if (c == 0 || z.K_ == 0) return;
    if (z.n_ != n_) throw std::invalid_argument("Hecke size mismatch");
    ensure_range(z.lo_ + qshift, z.lo_ + qshift + z.K_ - 1);
    const int N = H_->N;
    const int off = z.lo_ + qshift - lo_;
    for (int k = 0; k < z.K_; ++k) {
        int64_t* dst = slice(off + k);
        const int64_t* src = z.slice(k);
        if (c == 1) {
            for (int w = 0; w < N; ++w)
                if (src[w]) dst[w] = add_checked(dst[w], src[w]);
        } else {
            for (int w = 0; w < N; ++w)
                if (src[w]) dst[w] = add_checked(dst[w], mul_checked(c, src[w]));
        }
    }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
    axpy(1, 0, o);
    trim();
    return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
    axpy(-1, 0, o);
    trim();
    return *this;
}

HeckeElt HeckeElt::operator-() const {
    HeckeElt r = *this;
    for (auto& v : r.d_) v = -v;
    return r;
}

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& x) {
    HeckeElt r(x.n_);
    for (int e = c.lo(); !c.is_zero() && e <= c.hi(); ++e) r.axpy(c[e], e, x);
    r.trim();
    return r;
}

bool HeckeElt::operator==(const HeckeElt& o) const {
    return n_ == o.n_ && lo_ == o.lo_ && K_ == o.K_ && d_ == o.d_;
}

HeckeElt HeckeElt::shifted(int d) const {
    HeckeElt r = *this;
    if (r.K_) r.lo_ += d;
    return r;
}

HeckeElt HeckeElt::mul_Ts_right(int s) const {
    if (s < 1 || s >= n_) throw std::out_of_range("mul_Ts_right: generator index");
    HeckeElt r(n_);
    if (K_ == 0) return r;
    const int N = H_->N;
    r.lo_ = lo_ - 1;
    r.K_ = K_ + 2;
    r.d_.assign(static_cast<size_t>(r.K_) * N, 0);
    const auto& rm = H_->rmul[s];
    for (int k = 0; k < K_; ++k) {
        const int64_t* src = slice(k);
        int64_t* same = r.slice(k + 1);
        int64_t* up = r.slice(k + 2);
        int64_t* down = r.slice(k);
        for (int w = 0; w < N; ++w) {
            const int64_t c = src[w];
            if (!c) continue;
            const int ws = rm[w];
            same[ws] = add_checked(same[ws], c);
            if (H_->length[ws] < H_->length[w]) {
                // T_w T_s = T_{ws} + (q - q^{-1}) T_w when ws < w
                up[w] = add_checked(up[w], c);
                down[w] = add_checked(down[w], -c);
            }
        }
    }
    r.trim();
    return r;
}

HeckeElt HeckeElt::mul_Ts_left(int s) const {
    if (s < 1 || s >= n_) throw std::out_of_range("mul_Ts_left: generator index");
    HeckeElt r(n_);
    if (K_ == 0) return r;
    const int N = H_->N;
    r.lo_ = lo_ - 1;
    r.K_ = K_ + 2;
    r.d_.assign(static_cast<size_t>(r.K_) * N, 0);
    const auto& lm = H_->lmul[s];
    for (int k = 0; k < K_; ++k) {
        const int64_t* src = slice(k);
        int64_t* same = r.slice(k + 1);
        int64_t* up = r.slice(k + 2);
        int64_t* down = r.slice(k);
        for (int w = 0; w < N; ++w) {
            const int64_t c = src[w];
            if (!c) continue;
            const int sw = lm[w];
            same[sw] = add_checked(same[sw], c);
            if (H_->length[sw] < H_->length[w]) {
                up[w] = add_checked(up[w], c);
                down[w] = add_checked(down[w], -c);
            }
        }
    }
    r.trim();
    return r;
}

// Sum over a parabolic factor S_m = S_{m-1} D_m with D_m the minimal coset
// representatives s_{j-1} s_{j-2} ... s_{j-k}; applying the factors in turn
// multiplies by q^{l(w_c)} x_c.
HeckeElt HeckeElt::mul_sym_right(const Composition& c) const {
    if (c.total() != n_) throw std::invalid_argument("mul_sym_right: composition size");
    HeckeElt y = *this;
    auto off = c.offsets();
    for (size_t b = 0; b < c.size(); ++b) {
        const int o = off[b];
        for (int j = 2; j <= c[b]; ++j) {
            HeckeElt acc = y, z = y;
            for (int k = 1; k <= j - 1; ++k) {
                z = z.mul_Ts_right(o + j - k);
                acc.axpy(1, k, z);
            }
            acc.trim();
            y = std::move(acc);
        }
    }
    return y.shifted(-c.longest_length());
}

HeckeElt HeckeElt::mul_sym_left(const Composition& c) const {
    if (c.total() != n_) throw std::invalid_argument("mul_sym_left: composition size");
    HeckeElt y = *this;
    auto off = c.offsets();
    for (size_t b = 0; b < c.size(); ++b) {
        const int o = off[b];
        for (int j = 2; j <= c[b]; ++j) {
            HeckeElt acc = y, z = y;
            for (int k = 1; k <= j - 1; ++k) {
                z = z.mul_Ts_left(o + j - k);
                acc.axpy(1, k, z);
            }
            acc.trim();
            y = std::move(acc);
        }
    }
    return y.shifted(-c.longest_length());
}

std::optional<HeckeElt> HeckeElt::divide_exact(const LaurentPoly& den) const {
    if (den.is_zero()) throw std::domain_error("division by zero");
    if (den == LaurentPoly(1)) return *this;
    if (K_ == 0) return *this;
    // long division slice by slice from the bottom: this = den * r
    const int N = H_->N;
    const int dlo = den.lo(), dK = den.hi() - den.lo() + 1;
    const int64_t lead = den[dlo];
    HeckeElt rem = *this;
    HeckeElt r(n_);
    const int rK = K_ - dK + 1;
    if (rK <= 0) return std::nullopt;
    r.lo_ = lo_ - dlo;
    r.K_ = rK;
    r.d_.assign(static_cast<size_t>(rK) * N, 0);
    for (int k = 0; k < rK; ++k) {
        int64_t* rs = r.slice(k);
        const int64_t* cur = rem.slice(k);
        for (int w = 0; w < N; ++w) {
            if (!cur[w]) continue;
            if (cur[w] % lead) return std::nullopt;
            rs[w] = cur[w] / lead;
        }
        for (int j = 0; j < dK; ++j) {
            const int64_t dj = den[dlo + j];
            if (!dj) continue;
            int64_t* tgt = rem.slice(k + j);
            for (int w = 0; w < N; ++w)
                if (rs[w]) tgt[w] = add_checked(tgt[w], -mul_checked(dj, rs[w]));
        }
    }
    for (int v : rem.d_)
        if (v) return std::nullopt;
    r.trim();
    return r;
}

HeckeElt HeckeElt::embed(int big, int offset) const {
    if (offset < 0 || offset + n_ > big) throw std::invalid_argument("embed: out of range");
    HeckeElt r(big);
    if (K_ == 0) return r;
    const HeckeAlgebra& B = HeckeAlgebra::get(big);
    r.lo_ = lo_;
    r.K_ = K_;
    r.d_.assign(static_cast<size_t>(K_) * B.N, 0);
    std::vector<int> img(big);
    for (int w = 0; w < H_->N; ++w) {
        const auto& p = H_->perms[w].images();
        for (int i = 0; i < big; ++i) img[i] = i;
        for (int i = 0; i < n_; ++i) img[offset + i] = offset + p[i];
        const int W = HeckeAlgebra::rank(img);
        for (int k = 0; k < K_; ++k) r.slice(k)[W] = slice(k)[w];
    }
    return r;
}

std::optional<LaurentPoly> HeckeElt::as_scalar() const {
    for (int w : support())
        if (w != 0) return std::nullopt;
    return coeff(0);
}

namespace {

std::vector<std::pair<int, int>> sorted_support(const HeckeAlgebra& H, const std::vector<int>& supp) {
    std::vector<std::pair<int, int>> v;
    for (int w : supp) v.push_back({H.length[w], w});
    std::sort(v.begin(), v.end(), [&](auto& x, auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return reduced_word(H.perms[x.second]) < reduced_word(H.perms[y.second]);
    });
    return v;
}

std::string word_str(const std::vector<int>& w) {
    if (w.empty()) return "e";
    std::string s;
    for (int i : w) s += std::to_string(i);
    return s;
}

}  // namespace

std::string HeckeElt::str() const {
    if (K_ == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [len, w] : sorted_support(*H_, support())) {
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff(w).str() << ")*T_" << word_str(reduced_word(H_->perms[w]));
    }
    return os.str();
}

json HeckeElt::to_json() const {
    json j = json::array();
    for (auto& [len, w] : sorted_support(*H_, support()))
        j.push_back({reduced_word(H_->perms[w]), coeff(w).str()});
    return j;
}

// x*y = sum_w y_w x T_w, traversing S_n along the tree w -> parent(w) = w s_max
// (s_max the largest right descent) so every x T_w costs one T_s multiplication;
// subtrees without support in y are pruned.
HeckeElt hecke_mul(const HeckeElt& x, const HeckeElt& y) {
    if (x.n() != y.n()) throw std::invalid_argument("hecke_mul: size mismatch");
    const int n = x.n();
    HeckeElt r(n);
    if (x.is_zero() || y.is_zero()) return r;
    const HeckeAlgebra& H = x.algebra();
    const auto supp = y.support();
    if (supp.size() == 1 && supp[0] == 0) return y.coeff(0) * x;
    std::vector<char> need(H.N, 0);
    for (int w : supp) need[w] = 1;
    // propagate to ancestors, longest elements first
    std::vector<int> order(H.N);
    for (int w = 0; w < H.N; ++w) order[w] = w;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return H.length[a] > H.length[b]; });
    for (int w : order)
        if (need[w] && w != 0) need[H.rmul[H.max_right_descent[w]][w]] = 1;
    std::vector<std::pair<int, HeckeElt>> stack;
    stack.push_back({0, x});
    while (!stack.empty()) {
        auto [u, xu] = std::move(stack.back());
        stack.pop_back();
        LaurentPoly c = y.coeff(u);
        if (!c.is_zero()) r += c * xu;
        for (int s = 1; s < n; ++s) {
            const int w = H.rmul[s][u];
            if (!need[w] || H.length[w] <= H.length[u] || H.max_right_descent[w] != s) continue;
            stack.push_back({w, xu.mul_Ts_right(s)});
        }
    }
    return r;
}

HeckeElt operator*(const HeckeElt& x, const HeckeElt& y) { return hecke_mul(x, y); }

HeckeElt symmetrizer(const Composition& c) { return HeckeElt::one(c.total()).mul_sym_right(c); }

LaurentPoly poincare(const Composition& c) {
    LaurentPoly p(1);
    for (int m : c.parts)
        for (int k = 2; k <= m; ++k) p *= qint_z(k);
    return p;
}

}  // namespace schober

#include <algorithm>
#include <stdexcept>

#include "schober/qalgebra.hpp"

namespace schober {

namespace {
int64_t add_ck(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly coefficient overflow");
    return r;
}
int64_t mul_ck(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly coefficient overflow");
    return r;
}
}  // namespace

LaurentPoly::LaurentPoly(int64_t c) {
    if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(int e, int64_t c) {
    LaurentPoly r(c);
    if (c != 0) r.lo_ = e;
    return r;
}

void LaurentPoly::trim() {
    size_t b = 0;
    while (b < c_.size() && c_[b] == 0) ++b;
    if (b == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    size_t e = c_.size();
    while (c_[e - 1] == 0) --e;
    if (b > 0 || e < c_.size()) {
        c_ = std::vector<int64_t>(c_.begin() + b, c_.begin() + e);
        lo_ += static_cast<int>(b);
    }
}

int64_t LaurentPoly::operator[](int e) const {
    int i = e - lo_;
    return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[i];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int nl = std::min(lo_, o.lo_), nh = std::max(hi(), o.hi());
    if (nl != lo_ || nh != hi()) {
        std::vector<int64_t> v(nh - nl + 1, 0);
        std::copy(c_.begin(), c_.end(), v.begin() + (lo_ - nl));
        c_.swap(v);
        lo_ = nl;
    }
    for (size_t i = 0; i < o.c_.size(); ++i) {
        auto& x = c_[o.lo_ - lo_ + i];
        x = add_ck(x, o.c_[i]);
    }
    trim();
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = add_ck(r.c_[i + j], mul_ck(a.c_[i], b.c_[j]));
    }
    r.trim();
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (lo_ != o.lo_) return lo_ < o.lo_;
    return c_ < o.c_;
}

LaurentPoly LaurentPoly::shifted(int d) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.lo_ += d;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    if (!r.is_zero()) r.lo_ = -hi();
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& den) const {
    if (den.is_zero()) throw std::domain_error("division by zero");
    if (is_zero()) return LaurentPoly();
    if (c_.size() < den.c_.size()) return std::nullopt;
    std::vector<int64_t> r = c_;
    const size_t m = den.c_.size();
    const int64_t lead = den.c_.back();
    std::vector<int64_t> q(c_.size() - m + 1, 0);
    for (size_t k = q.size(); k-- > 0;) {
        int64_t top = r[k + m - 1];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        int64_t c = top / lead;
        q[k] = c;
        for (size_t i = 0; i < m; ++i) r[k + i] = add_ck(r[k + i], -mul_ck(c, den.c_[i]));
    }
    for (auto x : r)
        if (x != 0) return std::nullopt;
    LaurentPoly out;
    out.c_ = std::move(q);
    out.lo_ = lo_ - den.lo_;
    out.trim();
    return out;
}

BiLaurent LaurentPoly::to_bi() const {
    BiLaurent r;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) r += BiLaurent::monomial(lo_ + static_cast<int>(i), 0, Rational(static_cast<long>(c_[i])));
    return r;
}

LaurentPoly LaurentPoly::from_bi(const BiLaurent& x) {
    LaurentPoly r;
    for (auto& [k, c] : x.terms()) {
        if (k.second != 0 || c.get_den() != 1 || !c.get_num().fits_slong_p())
            throw std::domain_error("LaurentPoly::from_bi: not an integral t-free element");
        r += monomial(k.first, c.get_num().get_si());
    }
    return r;
}

}  // namespace schober

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "schober/qalgebra.hpp"

namespace schober {

LaurentPoly qint_z(int n) {
    LaurentPoly r;
    for (int i = 0; i < n; ++i) r += LaurentPoly::monomial(n - 1 - 2 * i);
    return r;
}

LaurentPoly qbinom_z(int n, int k) {
    if (n < 0 || k < 0 || k > n) return LaurentPoly();
    LaurentPoly num(1), den(1);
    for (int i = 0; i < k; ++i) {
        num *= qint_z(n - i);
        den *= qint_z(i + 1);
    }
    auto r = num.divide_exact(den);
    if (!r) throw std::logic_error("qbinom: inexact division");
    return *r;
}

BiLaurent qint(int n) {
    if (n < 0) throw std::invalid_argument("qint: negative argument");
    return qint_z(n).to_bi();
}

BiLaurent qfactorial(int n) {
    BiLaurent r(1);
    for (int i = 2; i <= n; ++i) r *= qint(i);
    return r;
}

BiLaurent qbinom(int n, int k) {
    if (n < 0 || k < 0 || k > n) return BiLaurent();
    auto r = divide_exact(qfactorial(n), qfactorial(k) * qfactorial(n - k));
    if (!r) throw std::logic_error("qbinom: inexact division");
    return *r;
}

BiLaurent grassmannian_poincare(int s, int b) {
    if (s < 0 || s > b) throw std::out_of_range("grassmannian_poincare: need 0 <= s <= b");
    // Schubert cells of Gr(s,b) <-> partitions in an s x (b-s) box, real dimension 2|lambda|
    const int w = b - s;
    std::vector<long> count(s * w + 1, 0);
    std::function<void(int, int, int)> rec = [&](int row, int maxpart, int size) {
        if (row == s) {
            ++count[size];
            return;
        }
        for (int p = 0; p <= maxpart; ++p) rec(row + 1, p, size + p);
    };
    rec(0, w, 0);
    BiLaurent r;
    for (int m = 0; m <= s * w; ++m)
        if (count[m]) r += BiLaurent::monomial(2 * m - s * w, 0, Rational(count[m]));
    return r;
}

BiLaurent euler_char(const BiLaurent& x) { return x.subst_t(-1); }

// ---- Hilbert series ----

static BiLaurent one_minus_q(int d) { return BiLaurent(1) - BiLaurent::q(d); }

HilbertSeries::HilbertSeries(BiLaurent num, std::vector<int> den) : num_(std::move(num)), den_(std::move(den)) {
    if (!num_.t_free()) throw std::invalid_argument("HilbertSeries numerator must be t-free");
    for (int d : den_)
        if (d <= 0 || d % 2) throw std::invalid_argument("HilbertSeries denominator degrees must be positive and even");
    canonicalize();
}

HilbertSeries HilbertSeries::free_poly(const std::vector<int>& gen_degrees) { return HilbertSeries(BiLaurent(1), gen_degrees); }

void HilbertSeries::canonicalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::sort(den_.begin(), den_.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < den_.size(); ++i) {
            auto r = divide_exact(num_, one_minus_q(den_[i]));
            if (r) {
                num_ = *r;
                den_.erase(den_.begin() + i);
                changed = true;
                break;
            }
        }
    }
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
    BiLaurent l = num_, r = o.num_;
    for (int d : o.den_) l *= one_minus_q(d);
    for (int d : den_) r *= one_minus_q(d);
    return l == r;
}

HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b) {
    std::vector<int> den = a.den_;
    den.insert(den.end(), b.den_.begin(), b.den_.end());
    return HilbertSeries(a.num_ * b.num_, den);
}

HilbertSeries operator/(const HilbertSeries& a, const HilbertSeries& b) {
    if (b.num_.is_zero()) throw std::domain_error("HilbertSeries: division by zero series");
    BiLaurent num = a.num_;
    for (int d : b.den_) num *= one_minus_q(d);
    std::vector<int> den = a.den_;
    auto r = divide_exact(num, b.num_);
    // b's numerator must divide a product of cyclotomic-type factors
    const int span = b.num_.max_q() - b.num_.min_q();
    for (int d = 2; !r && d <= 2 * span + 2; d += 2) {
        num *= one_minus_q(d);
        den.push_back(d);
        r = divide_exact(num, b.num_);
    }
    if (!r) throw std::domain_error("HilbertSeries: quotient not representable");
    return HilbertSeries(*r, den);
}

HilbertSeries HilbertSeries::shifted(int dq) const {
    HilbertSeries h = *this;
    h.num_ = h.num_.shifted(dq);
    return h;
}

std::vector<Rational> HilbertSeries::expand(int lo, int hi) const {
    std::vector<Rational> out(hi >= lo ? hi - lo + 1 : 0);
    if (num_.is_zero() || hi < lo) return out;
    int base = std::min(num_.min_q(), lo);
    if (hi < base) return out;
    std::vector<Rational> a(hi - base + 1);
    for (auto& [k, c] : num_.terms())
        if (k.first <= hi) a[k.first - base] += c;
    for (int d : den_)
        for (size_t i = d; i < a.size(); ++i) a[i] += a[i - d];
    for (int e = lo; e <= hi; ++e) out[e - lo] = a[e - base];
    return out;
}

std::string HilbertSeries::str() const {
    std::string s = "(" + num_.str() + ")";
    if (!den_.empty()) {
        s += " / (";
        for (size_t i = 0; i < den_.size(); ++i) s += (i ? ")(1 - q^" : "(1 - q^") + std::to_string(den_[i]);
        s += "))";
    }
    return s;
}

HilbertSeries hilbert_mul(const HilbertSeries& a, const HilbertSeries& b) { return a * b; }
HilbertSeries hilbert_div(const HilbertSeries& a, const HilbertSeries& b) { return a / b; }
std::vector<Rational> hilbert_expand(const HilbertSeries& h, int D) { return h.expand(D); }

}  // namespace schober

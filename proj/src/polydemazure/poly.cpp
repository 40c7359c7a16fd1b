#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "schober/polydemazure.hpp"

namespace schober {

Poly::Poly(int nvars) : n_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("Poly supports at most 8 variables");
}

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(0, c);
    return p;
}

Poly Poly::var(int nvars, int i) {
    std::vector<int> e(nvars, 0);
    e.at(i) = 1;
    return monomial(nvars, e);
}

Poly Poly::monomial(int nvars, const std::vector<int>& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars) throw std::invalid_argument("exponent vector length");
    Poly p(nvars);
    p.add_term(pack(exps), c);
    return p;
}

Poly::Mono Poly::pack(const std::vector<int>& exps) {
    Mono m = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > 255) throw std::overflow_error("exponent out of range");
        m |= static_cast<Mono>(exps[i]) << (8 * (7 - i));
    }
    return m;
}

int Poly::mono_degree(Mono m) {
    int d = 0;
    for (int i = 0; i < 8; ++i) d += exponent(m, i);
    return d;
}

std::vector<int> Poly::unpack(Mono m, int nvars) {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = exponent(m, i);
    return e;
}

Rational Poly::coeff(Mono m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
}

void Poly::add_term(Mono m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.n_ != n_) throw std::invalid_argument("Poly variable count mismatch");
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.n_ != n_) throw std::invalid_argument("Poly variable count mismatch");
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& kv : t_) kv.second *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Poly variable count mismatch");
    Poly r(a.n_);
    if (a.is_zero() || b.is_zero()) return r;
    constexpr Poly::Mono kHigh = 0x8080808080808080ull;
    for (auto& [ma, ca] : a.t_)
        for (auto& [mb, cb] : b.t_) {
            Poly::Mono m = ma + mb;
            // per-byte carry check: exponents stay below 128 in practice
            if (((ma | mb | m) & kHigh) != 0) throw std::overflow_error("Poly exponent overflow");
            r.add_term(m, ca * cb);
        }
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& kv : r.t_) kv.second = -kv.second;
    return r;
}

int Poly::degree() const {
    if (t_.empty()) throw std::domain_error("degree of zero polynomial");
    int d = mono_degree(t_.begin()->first);
    for (auto& kv : t_)
        if (mono_degree(kv.first) != d) throw std::domain_error("degree of inhomogeneous polynomial");
    return 2 * d;
}

bool Poly::is_homogeneous() const {
    if (t_.empty()) return true;
    int d = mono_degree(t_.begin()->first);
    return std::all_of(t_.begin(), t_.end(), [d](auto& kv) { return mono_degree(kv.first) == d; });
}

Poly Poly::homogeneous_part(int qdeg) const {
    Poly r(n_);
    for (auto& [m, c] : t_)
        if (2 * mono_degree(m) == qdeg) r.t_.emplace(m, c);
    return r;
}

Poly Poly::embed(int nvars, int offset) const {
    if (offset < 0 || offset + n_ > nvars) throw std::invalid_argument("embed out of range");
    Poly r(nvars);
    for (auto& [m, c] : t_) r.t_.emplace(m >> (8 * offset), c);
    return r;
}

Poly Poly::swap_vars(int i) const {
    if (i < 1 || i >= n_) throw std::out_of_range("swap_vars index");
    const int s1 = 8 * (7 - (i - 1)), s2 = 8 * (7 - i);
    Poly r(n_);
    for (auto& [m, c] : t_) {
        Mono a = m >> s1 & 0xff, b = m >> s2 & 0xff;
        Mono mm = (m & ~((Mono(0xff) << s1) | (Mono(0xff) << s2))) | (b << s1) | (a << s2);
        r.t_.emplace(mm, c);
    }
    return r;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        Rational c = it->second;
        bool neg = c < 0;
        Rational ac = abs(c);
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            int e = exponent(it->first, i);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        std::string body = mono.empty() ? ac.get_str() : (ac == 1 ? mono : ac.get_str() + "*" + mono);
        if (first) os << (neg ? "-" : "") << body;
        else os << (neg ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

json Poly::to_json() const {
    json j = json::array();
    for (auto it = t_.rbegin(); it != t_.rend(); ++it)
        j.push_back({unpack(it->first, n_), it->second.get_num().get_str(), it->second.get_den().get_str()});
    return j;
}

Poly act(const Permutation& w, const Poly& p) {
    if (w.n() != p.nvars()) throw std::invalid_argument("act: permutation size mismatch");
    Poly r(p.nvars());
    for (auto& [m, c] : p.terms()) {
        std::vector<int> e(p.nvars());
        for (int i = 0; i < p.nvars(); ++i) e[w[i]] = Poly::exponent(m, i);
        r.add_term(Poly::pack(e), c);
    }
    return r;
}

bool is_invariant(const Poly& p, const Composition& c) {
    if (c.total() != p.nvars()) throw std::invalid_argument("is_invariant: composition size mismatch");
    auto off = c.offsets();
    for (size_t b = 0; b < c.size(); ++b)
        for (int i = off[b] + 1; i < off[b + 1]; ++i)
            if (p.swap_vars(i) != p) return false;
    return true;
}

Poly demazure(int i, const Poly& p) {
    if (i < 1 || i >= p.nvars()) throw std::out_of_range("demazure index");
    const int s1 = 8 * (7 - (i - 1)), s2 = 8 * (7 - i);
    const Poly::Mono clear = ~((Poly::Mono(0xff) << s1) | (Poly::Mono(0xff) << s2));
    Poly r(p.nvars());
    for (auto& [m, c] : p.terms()) {
        int a = static_cast<int>(m >> s1 & 0xff), b = static_cast<int>(m >> s2 & 0xff);
        if (a == b) continue;
        Poly::Mono rest = m & clear;
        if (a > b) {
            for (int k = 0; k < a - b; ++k)
                r.add_term(rest | Poly::Mono(a - 1 - k) << s1 | Poly::Mono(b + k) << s2, c);
        } else {
            for (int k = 0; k < b - a; ++k)
                r.add_term(rest | Poly::Mono(b - 1 - k) << s1 | Poly::Mono(a + k) << s2, -c);
        }
    }
    return r;
}

Poly demazure_word(const std::vector<int>& word, const Poly& p) {
    Poly r = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = demazure(*it, r);
    return r;
}

Poly frobenius_trace(const Composition& I, const Composition& J, const Poly& p) {
    if (!I.refines(J)) throw std::invalid_argument("frobenius_trace: I must refine J");
    if (!is_invariant(p, I)) throw std::invalid_argument("frobenius_trace: input not S_I-invariant");
    Permutation w = longest_element(J) * longest_element(I).inverse();
    return demazure_word(reduced_word(w), p);
}

}  // namespace schober

#include "schober/qalgebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schober {

BiLaurent::BiLaurent(long c) {
    if (c != 0) terms_[{0, 0}] = c;
}

BiLaurent::BiLaurent(const Rational& c) { add_term({0, 0}, c); }

BiLaurent BiLaurent::monomial(int qe, int te, const Rational& c) {
    BiLaurent r;
    r.add_term({qe, te}, c);
    return r;
}

void BiLaurent::add_term(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        Rational v = c;
        v.canonicalize();
        terms_.emplace(k, v);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational BiLaurent::coeff(int qe, int te) const {
    auto it = terms_.find({qe, te});
    return it == terms_.end() ? Rational(0) : it->second;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r;
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_)
            r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

BiLaurent& BiLaurent::operator*=(const BiLaurent& o) { return *this = *this * o; }

BiLaurent BiLaurent::operator-() const {
    BiLaurent r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BiLaurent BiLaurent::shifted(int dq, int dt) const {
    BiLaurent r;
    for (auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + dq, k.second + dt}, c);
    return r;
}

BiLaurent BiLaurent::bar() const {
    BiLaurent r;
    for (auto& [k, c] : terms_) r.terms_.emplace(Key{-k.first, k.second}, c);
    return r;
}

BiLaurent BiLaurent::subst_t(int tval) const {
    BiLaurent r;
    for (auto& [k, c] : terms_) {
        Rational p = 1;
        int e = k.second;
        if (e >= 0) {
            for (int i = 0; i < e; ++i) p *= tval;
        } else {
            if (tval == 0) throw std::domain_error("t -> 0 with negative t-power");
            for (int i = 0; i < -e; ++i) p /= tval;
        }
        r.add_term({k.first, 0}, c * p);
    }
    return r;
}

Rational BiLaurent::eval_q1() const {
    Rational s = 0;
    for (auto& [k, c] : terms_) {
        if (k.second != 0) throw std::domain_error("eval_q1 on t-dependent element");
        s += c;
    }
    return s;
}

bool BiLaurent::t_free() const {
    return std::all_of(terms_.begin(), terms_.end(), [](auto& kv) { return kv.first.second == 0; });
}

int BiLaurent::min_q() const {
    if (terms_.empty()) throw std::domain_error("min_q of zero");
    int m = terms_.begin()->first.first;
    for (auto& kv : terms_) m = std::min(m, kv.first.first);
    return m;
}

int BiLaurent::max_q() const {
    if (terms_.empty()) throw std::domain_error("max_q of zero");
    int m = terms_.begin()->first.first;
    for (auto& kv : terms_) m = std::max(m, kv.first.first);
    return m;
}

bool BiLaurent::is_signed_monomial() const {
    return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

static std::string mono_str(int qe, int te) {
    std::string s;
    if (qe != 0) s += qe == 1 ? "q" : "q^" + std::to_string(qe);
    if (te != 0) {
        if (!s.empty()) s += "*";
        s += te == 1 ? "t" : "t^" + std::to_string(te);
    }
    return s;
}

std::string BiLaurent::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [qe, te] = it->first;
        Rational c = it->second;
        bool neg = c < 0;
        Rational ac = abs(c);
        std::string m = mono_str(qe, te);
        std::string body;
        if (m.empty()) body = ac.get_str();
        else if (ac == 1) body = m;
        else body = ac.get_str() + "*" + m;
        if (first) out += (neg ? "-" : "") + body;
        else out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const BiLaurent& x) { return os << x.str(); }

json BiLaurent::to_json() const {
    json j = json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        j.push_back({it->first.first, it->first.second, c.get_num().get_str(), c.get_den().get_str()});
    }
    return j;
}

BiLaurent BiLaurent::from_json(const json& j) {
    if (j.is_number_integer()) return BiLaurent(static_cast<long>(j.get<int64_t>()));
    if (!j.is_array()) throw std::invalid_argument("BiLaurent JSON must be an array or integer");
    BiLaurent r;
    for (auto& e : j) {
        if (!e.is_array() || e.size() != 4) throw std::invalid_argument("BiLaurent term must be [q,t,num,den]");
        auto as_str = [](const json& v) { return v.is_string() ? v.get<std::string>() : std::to_string(v.get<int64_t>()); };
        Rational c(mpz_class(as_str(e[2])), mpz_class(as_str(e[3])));
        c.canonicalize();
        r.add_term({e[0].get<int>(), e[1].get<int>()}, c);
    }
    return r;
}

std::optional<BiLaurent> divide_exact(const BiLaurent& num, const BiLaurent& den) {
    if (den.is_zero()) throw std::domain_error("division by zero");
    if (!num.t_free() || !den.t_free()) throw std::domain_error("divide_exact needs t-free input");
    if (num.is_zero()) return BiLaurent();
    int nl = num.min_q(), nh = num.max_q(), dl = den.min_q(), dh = den.max_q();
    if (nh - nl < dh - dl) return std::nullopt;
    std::vector<Rational> r(nh - nl + 1), d(dh - dl + 1);
    for (auto& [k, c] : num.terms()) r[k.first - nl] = c;
    for (auto& [k, c] : den.terms()) d[k.first - dl] = c;
    int ql = nl - dl, qh = nh - dh;
    BiLaurent quo;
    for (int e = qh; e >= ql; --e) {
        // leading position of remainder corresponding to quotient exponent e
        Rational c = r[e + dh - nl] / d.back();
        if (c == 0) continue;
        quo += BiLaurent::monomial(e, 0, c);
        for (int i = 0; i <= dh - dl; ++i) r[e + dl + i - nl] -= c * d[i];
    }
    for (auto& c : r)
        if (c != 0) return std::nullopt;
    return quo;
}

}  // namespace schober

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace schober {

using Rational = mpq_class;
using json = nlohmann::json;

// Exact Laurent polynomial in q (grading) and t (homological).
class BiLaurent {
public:
    using Key = std::pair<int, int>;  // (q-exponent, t-exponent)

    BiLaurent() = default;
    BiLaurent(long c);  // NOLINT: constants convert implicitly
    BiLaurent(const Rational& c);

    static BiLaurent monomial(int qe, int te = 0, const Rational& c = 1);
    static BiLaurent q(int e = 1) { return monomial(e, 0); }
    static BiLaurent t(int e = 1) { return monomial(0, e); }

    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coeff(int qe, int te = 0) const;
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    BiLaurent& operator+=(const BiLaurent& o);
    BiLaurent& operator-=(const BiLaurent& o);
    BiLaurent& operator*=(const BiLaurent& o);
    friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
    friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
    friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
    BiLaurent operator-() const;
    bool operator==(const BiLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiLaurent& o) const { return !(*this == o); }
    bool operator<(const BiLaurent& o) const { return terms_ < o.terms_; }

    BiLaurent shifted(int dq, int dt = 0) const;
    BiLaurent bar() const;  // q -> q^{-1}
    BiLaurent subst_t(int tval) const;  // t -> tval (e.g. -1)
    Rational eval_q1() const;  // t must be absent
    bool t_free() const;
    int min_q() const;
    int max_q() const;
    // a single term c*q^e*t^f with c = +-1
    bool is_signed_monomial() const;

    std::string str() const;
    json to_json() const;
    static BiLaurent from_json(const json& j);

private:
    std::map<Key, Rational> terms_;
    void add_term(const Key& k, const Rational& c);
};

std::ostream& operator<<(std::ostream& os, const BiLaurent& x);

// Exact quotient num/den for t-free Laurent polynomials, if it exists.
std::optional<BiLaurent> divide_exact(const BiLaurent& num, const BiLaurent& den);

// Dense univariate Laurent polynomial with checked int64 coefficients; the
// workhorse scalar of the Hecke module.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int64_t c);  // NOLINT
    static LaurentPoly monomial(int e, int64_t c = 1);

    bool is_zero() const { return c_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    int64_t operator[](int e) const;
    const std::vector<int64_t>& coeffs() const { return c_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return lo_ == o.lo_ && c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;

    LaurentPoly shifted(int d) const;
    LaurentPoly bar() const;
    // c*q^e with c = +-1
    bool is_unit() const { return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1); }
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& den) const;

    BiLaurent to_bi() const;
    static LaurentPoly from_bi(const BiLaurent& x);  // throws unless integral and t-free
    std::string str() const { return to_bi().str(); }

private:
    int lo_ = 0;
    std::vector<int64_t> c_;  // c_[i] is the coefficient of q^{lo_+i}
    void trim();
};

// balanced quantum numbers
BiLaurent qint(int n);
BiLaurent qfactorial(int n);
BiLaurent qbinom(int n, int k);
BiLaurent grassmannian_poincare(int s, int b);
BiLaurent euler_char(const BiLaurent& x);

LaurentPoly qint_z(int n);
LaurentPoly qbinom_z(int n, int k);

// Rational Hilbert series num / prod (1 - q^d), d even and positive.
class HilbertSeries {
public:
    HilbertSeries() : num_(1) {}
    HilbertSeries(BiLaurent num, std::vector<int> den);
    // Hilbert series of a polynomial ring with generators in the given degrees
    static HilbertSeries free_poly(const std::vector<int>& gen_degrees);

    const BiLaurent& numerator() const { return num_; }
    const std::vector<int>& denominator() const { return den_; }

    friend HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b);
    friend HilbertSeries operator/(const HilbertSeries& a, const HilbertSeries& b);
    HilbertSeries shifted(int dq) const;
    // equality of rational functions (representations are not unique)
    bool operator==(const HilbertSeries& o) const;
    bool operator!=(const HilbertSeries& o) const { return !(*this == o); }

    // coefficients of q^lo .. q^hi
    std::vector<Rational> expand(int lo, int hi) const;
    std::vector<Rational> expand(int D) const { return expand(0, D); }
    std::string str() const;

private:
    BiLaurent num_;
    std::vector<int> den_;
    void canonicalize();
};

HilbertSeries hilbert_mul(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries hilbert_div(const HilbertSeries& a, const HilbertSeries& b);
std::vector<Rational> hilbert_expand(const HilbertSeries& h, int D);

}  // namespace schober

#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "schober/qalgebra.hpp"
#include "schober/symcomb.hpp"

namespace schober {

// Sparse polynomial over Q in at most 8 variables (each of q-degree 2).
// Monomials are packed 8 bits per exponent with x_1 in the top byte, so the
// integer order on packed monomials is the lexicographic order on exponents.
class Poly {
public:
    using Mono = uint64_t;
    static constexpr int kMaxVars = 8;

    explicit Poly(int nvars = 0);
    static Poly constant(int nvars, const Rational& c);
    static Poly var(int nvars, int i);  // x_{i+1}, 0-based index
    static Poly monomial(int nvars, const std::vector<int>& exps, const Rational& c = 1);

    static Mono pack(const std::vector<int>& exps);
    static int exponent(Mono m, int i) { return static_cast<int>(m >> (8 * (7 - i)) & 0xff); }
    static int mono_degree(Mono m);  // total exponent
    static std::vector<int> unpack(Mono m, int nvars);

    int nvars() const { return n_; }
    const std::map<Mono, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rational coeff(Mono m) const;
    void add_term(Mono m, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator-() const;
    bool operator==(const Poly& o) const { return n_ == o.n_ && t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { return t_ < o.t_; }

    // q-degree (twice the total exponent); throws unless homogeneous and nonzero
    int degree() const;
    bool is_homogeneous() const;
    Poly homogeneous_part(int qdeg) const;
    // reinterpret in a ring with more variables, shifting variable indices by offset
    Poly embed(int nvars, int offset) const;
    Poly swap_vars(int i) const;  // s_i, 1-based

    std::string str() const;
    json to_json() const;

private:
    int n_;
    std::map<Mono, Rational> t_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly act(const Permutation& w, const Poly& p);
bool is_invariant(const Poly& p, const Composition& c);
Poly demazure(int i, const Poly& p);
// applies the rightmost index first
Poly demazure_word(const std::vector<int>& word, const Poly& p);
// trace from R_I down to R_J, I refining J
Poly frobenius_trace(const Composition& I, const Composition& J, const Poly& p);

// symmetric functions in the variables listed (0-based indices) of an nvars-variable ring
Poly elementary(int nvars, const std::vector<int>& vars, int k);
Poly complete(int nvars, const std::vector<int>& vars, int k);
Poly schur(int nvars, const std::vector<int>& vars, const std::vector<int>& lambda);

// monomials of total exponent deg/2 whose exponents are weakly decreasing within each block of c;
// an S_c-invariant polynomial is determined by its coefficients on these
std::vector<Poly::Mono> orbit_representatives(const Composition& c, int qdeg);
bool is_orbit_representative(Poly::Mono m, const Composition& c);

class InvariantRing {
public:
    explicit InvariantRing(Composition c);
    const Composition& composition() const { return c_; }
    int nvars() const { return c_.total(); }
    const std::vector<Poly>& generators() const { return gens_; }
    const std::vector<int>& generator_degrees() const { return gen_deg_; }
    // products of the generators of total q-degree d, exponent-lex order
    std::vector<Poly> graded_basis(int qdeg) const;
    HilbertSeries hilbert() const;

private:
    Composition c_;
    std::vector<Poly> gens_;
    std::vector<int> gen_deg_;
    mutable std::mutex mu_;
    mutable std::map<int, std::vector<Poly>> cache_;
};

InvariantRing invariant_ring(const Composition& c);
std::vector<Poly> graded_basis(const InvariantRing& r, int qdeg);
HilbertSeries hilbert(const InvariantRing& r);
HilbertSeries hilbert(const Composition& c);

struct DualBases {
    std::vector<Poly> basis;
    std::vector<Poly> dual;
};

// R_{ab} over R_{a+b} in a+b variables: Schur polynomials of the first block
DualBases dual_bases(int a, int b);
// R_P over R_V, P refining V (n = |P| variables): tower of two-part splits
DualBases frobenius_bases(const Composition& P, const Composition& V);

}  // namespace schober

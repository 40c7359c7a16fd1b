#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schober/qalgebra.hpp"
#include "schober/symcomb.hpp"

namespace schober {

// Multiplication tables for S_n, n <= 8; permutations are indexed by their
// lexicographic rank (the order of all_permutations).
class HeckeAlgebra {
public:
    static const HeckeAlgebra& get(int n);

    int n = 0;
    int N = 0;  // n!
    std::vector<Permutation> perms;
    std::vector<int> length;
    std::vector<std::vector<int>> rmul;  // rmul[s][w] = index of w s_s (s = 1..n-1; row 0 unused)
    std::vector<std::vector<int>> lmul;  // lmul[s][w] = index of s_s w
    std::vector<int> inverse;
    std::vector<int> max_right_descent;  // 0 for the identity

    int index(const Permutation& w) const;
    static int rank(const std::vector<int>& images);
};

// Element of the Hecke algebra in the standard basis {T_w}; coefficients are
// Laurent polynomials in q stored as dense q-slices.
class HeckeElt {
public:
    explicit HeckeElt(int n = 1);
    static HeckeElt T(const Permutation& w);
    static HeckeElt T_word(int n, const std::vector<int>& word);
    static HeckeElt one(int n);
    static HeckeElt scalar(int n, const LaurentPoly& c);

    int n() const { return n_; }
    const HeckeAlgebra& algebra() const { return *H_; }
    LaurentPoly coeff(int w) const;
    LaurentPoly coeff(const Permutation& w) const { return coeff(H_->index(w)); }
    void add_coeff(int w, const LaurentPoly& c);
    bool is_zero() const { return K_ == 0; }
    std::vector<int> support() const;
    int min_q() const { return lo_; }
    int max_q() const { return lo_ + K_ - 1; }

    HeckeElt& operator+=(const HeckeElt& o);
    HeckeElt& operator-=(const HeckeElt& o);
    friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
    friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
    friend HeckeElt operator*(const HeckeElt& x, const HeckeElt& y);
    friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& x);
    HeckeElt operator-() const;
    bool operator==(const HeckeElt& o) const;
    bool operator!=(const HeckeElt& o) const { return !(*this == o); }

    HeckeElt shifted(int d) const;
    HeckeElt mul_Ts_right(int s) const;
    HeckeElt mul_Ts_left(int s) const;
    // y * x_c and x_c * y for the parabolic symmetrizer of c
    HeckeElt mul_sym_right(const Composition& c) const;
    HeckeElt mul_sym_left(const Composition& c) const;
    std::optional<HeckeElt> divide_exact(const LaurentPoly& d) const;
    // parabolic embedding H_n -> H_big on strands offset..offset+n-1
    HeckeElt embed(int big, int offset) const;
    // (scalar part) coefficient of T_e when the element is a multiple of 1
    std::optional<LaurentPoly> as_scalar() const;

    std::string str() const;
    json to_json() const;

private:
    int n_;
    const HeckeAlgebra* H_;
    int lo_ = 0, K_ = 0;
    std::vector<int64_t> d_;  // d_[k*N + w] is the coefficient of q^{lo_+k} T_w

    int64_t* slice(int k) { return d_.data() + static_cast<size_t>(k) * H_->N; }
    const int64_t* slice(int k) const { return d_.data() + static_cast<size_t>(k) * H_->N; }
    void ensure_range(int lo, int hi);
    void trim();
    void axpy(int64_t c, int qshift, const HeckeElt& z);  // this += c q^qshift z
    friend struct HeckeKernels;
};

HeckeElt hecke_mul(const HeckeElt& x, const HeckeElt& y);
HeckeElt symmetrizer(const Composition& c);
LaurentPoly poincare(const Composition& c);

// Morphism c -> c' of the Schur algebroid: element of x_{c'} H x_c, composition f g / pi_mid.
struct SchurMor {
    Composition dom, cod;
    HeckeElt elt;
    LaurentPoly den = LaurentPoly(1);  // != 1 only if a genuine denominator survived

    bool exact() const { return den == LaurentPoly(1); }
    bool operator==(const SchurMor& o) const { return dom == o.dom && cod == o.cod && elt == o.elt && den == o.den; }
    bool operator!=(const SchurMor& o) const { return !(*this == o); }
    SchurMor& operator+=(const SchurMor& o);
    friend SchurMor operator+(SchurMor a, const SchurMor& b) { return a += b; }
    friend SchurMor operator-(SchurMor a, const SchurMor& b);
    friend SchurMor operator*(const LaurentPoly& c, SchurMor a);
    bool is_zero() const { return elt.is_zero(); }
    // membership test via T_s x = q x absorption on both sides
    bool in_hom_space() const;
    std::string str() const;
    json to_json() const;
};

SchurMor schur_zero(const Composition& dom, const Composition& cod);
SchurMor schur_id(const Composition& c);
SchurMor schur_compose(const SchurMor& f, const SchurMor& g);  // f after g
SchurMor schur_tensor(const SchurMor& f, const SchurMor& g);
// whiskering by identities on the left/right: id_left (x) f (x) id_right
SchurMor whisker(const Composition& left, const SchurMor& f, const Composition& right);
// is f = unit * id for a signed monomial unit? returns the unit
std::optional<LaurentPoly> unit_multiple_of_id(const SchurMor& f);

// Classes of elementary functors.  Every step of a web has class x_{coarser};
// unshifted restriction carries the extra factor q^{l(w_c) - l(w_c')}.
SchurMor split_class(int a, int b);
SchurMor merge_class(int a, int b);
SchurMor ind_class(const Composition& c, const Composition& finer);
SchurMor res_class(const Composition& finer, const Composition& c);  // unshifted right adjoint
// path through comparable compositions (zero parts dropped); merge_shifted selects
// web conventions (merge = q^{-ab} Res) versus plain Ind/Res composites
SchurMor path_class(const std::vector<std::vector<int>>& path, bool merge_shifted);

// ladder web W_k for (a,b) -> (c,d)
std::vector<std::vector<int>> ladder_path(int a, int b, int c, int d, int k);
int ladder_kmin(int a, int b, int c, int d);
SchurMor ladder_class(int a, int b, int c, int d, int k);
SchurMor crossing_class(int a, int b, int c, int d);
// reversed orientation: shift q^{+(a-d+1)} per step
SchurMor crossing_class_inv(int a, int b, int c, int d);
// crossing of strands i, i+1 of a colour vector (zeros allowed)
SchurMor strand_crossing(const std::vector<int>& colours, int i, bool positive = true);

// graded character of the bimodule with class h: phi(h) Hilb(R) / (pi_dom pi_cod q^{l(w_cod)})
HilbertSeries character(const SchurMor& h);

// ---- verification suites ----

struct CaseResult {
    json inputs;
    bool pass = false;
    std::string lhs, rhs;
    json extra;
};

struct SuiteReport {
    std::string suite;
    int n = 0;
    std::vector<CaseResult> cases;
    bool passed() const;
    size_t failures() const;
    json to_json() const;
};

void set_worker_threads(int t);
int worker_threads();
// runs f(i) for i in [0,count) on the worker pool; results are placed by index
void parallel_for(size_t count, const std::function<void(size_t)>& f);

SuiteReport suite_digon(int n);
SuiteReport suite_braid(int n);
SuiteReport suite_bialgebra(int n);
SuiteReport suite_squareswitch(int n);
SuiteReport suite_defect(int n);
SuiteReport run_hecke_suite(const std::string& name, int n);

// square-switch webs: L moves s from b to a then r back; R moves s from a to b then r back
SchurMor square_L(int a, int b, int s, int r);
SchurMor square_R(int a, int b, int s, int r);
CaseResult squareswitch_case(int a, int b, int s, int r, bool left_form);

// Beck-Chevalley alternating sum over the BC cube of Q(ab,cd)
SchurMor bc_defect_class(const Composition& ab, const Composition& cd);
// IMCS^s class for the bialgebra relation
SchurMor imcs_class(int a, int b, int c, int d, int s);
// skein normalisation: alpha = +-q^k with alpha C - (alpha C)^{-1} = (q - q^{-1}) id
std::optional<LaurentPoly> skein_normalisation(int kmin = -4, int kmax = 4);

// ---- perverse-sheaf data ----

// dense matrix over Z[q, q^-1] with an explicit shape (rank-0 groups allowed)
struct LaurentMatrix {
    size_t rows = 0, cols = 0;
    std::vector<LaurentPoly> a;

    LaurentMatrix() = default;
    LaurentMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    static LaurentMatrix identity(size_t n);
    LaurentPoly& operator()(size_t i, size_t j) { return a[i * cols + j]; }
    const LaurentPoly& operator()(size_t i, size_t j) const { return a[i * cols + j]; }
    bool operator==(const LaurentMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const LaurentMatrix& o) const { return !(*this == o); }
    friend LaurentMatrix operator*(const LaurentMatrix& x, const LaurentMatrix& y);
    friend LaurentMatrix operator+(const LaurentMatrix& x, const LaurentMatrix& y);
    friend LaurentMatrix operator-(const LaurentMatrix& x, const LaurentMatrix& y);
    std::string str() const;
    json to_json() const;
    // entries are integers or serialized Laurent polynomials
    static LaurentMatrix from_json(const json& j, size_t rows, size_t cols);
};

struct PerverseData {
    std::string shape;  // "a1", "a1a1", "a2"
    std::map<std::string, int> ranks;  // A, B, C, D
    std::map<std::string, LaurentMatrix> maps;  // i, i*, h, h*, f, f*, g, g*
    // (domain, codomain) group names of each map for the shape
    static std::map<std::string, std::pair<std::string, std::string>> signature(const std::string& shape);
    json to_json() const;
    static PerverseData from_json(const json& j);
};

struct RelationResult {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<RelationResult> check_a1(const PerverseData& d);
std::vector<RelationResult> check_a1a1(const PerverseData& d);
std::vector<RelationResult> check_a2(const PerverseData& d);
std::vector<RelationResult> check_perverse(const PerverseData& d);
// n = 2 (A1), 3 (A2) or 4 (A1 x A1 from the (22)-face)
PerverseData extract_perverse_data(int n);

std::optional<LaurentPoly> lm_det(const LaurentMatrix& m);  // fraction-free elimination
std::optional<LaurentMatrix> lm_inverse(const LaurentMatrix& m);  // over Z[q,q^-1], nullopt if det is not a unit

// matrix of post-composition with h: Hom(1^n, dom) -> Hom(1^n, cod) in the coset bases
LaurentMatrix hom_action_matrix(const SchurMor& h);
// every single-entry +1 perturbation, with the relations it breaks
struct Mutation {
    std::string map;
    size_t row, col;
    std::vector<std::string> failed;
};
std::vector<Mutation> mutation_scan(const PerverseData& d);

}  // namespace schober

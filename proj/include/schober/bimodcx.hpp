#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schober/hecke.hpp"
#include "schober/polydemazure.hpp"
#include "schober/ratmat.hpp"

namespace schober {

// ---------------------------------------------------------------------------
// Coefficient ring R_c, stored as a free polynomial ring on its elementary
// symmetric generators y_1..y_g (generator i has q-degree gen_degree(i)).

class CoeffRing {
public:
    static const CoeffRing& get(const Composition& c);

    const Composition& composition() const { return c_; }
    int ngens() const { return static_cast<int>(gdeg_.size()); }
    int gen_degree(int i) const { return gdeg_[i]; }
    int degree(Poly::Mono m) const;  // weighted q-degree of a y-monomial
    // y-monomials of q-degree qdeg in increasing packed order
    const std::vector<Poly::Mono>& basis(int qdeg) const;
    size_t dim(int qdeg) const { return qdeg < 0 ? 0 : basis(qdeg).size(); }
    // S_c-invariant polynomial in x_1..x_n  <->  polynomial in the generators
    Poly from_x(const Poly& p) const;
    Poly to_x(const Poly& y) const;
    HilbertSeries hilbert() const;
    Poly zero() const { return Poly(ngens()); }
    Poly one() const { return Poly::constant(ngens(), 1); }

private:
    explicit CoeffRing(Composition c);
    Composition c_;
    InvariantRing inv_;
    std::vector<int> gdeg_;
    struct Cache;
    std::unique_ptr<Cache> cache_;

public:
    ~CoeffRing();
};

// Dense matrix of y-polynomials.
class PolyMat {
public:
    PolyMat() = default;
    PolyMat(size_t rows, size_t cols, int nvars);
    static PolyMat identity(size_t n, int nvars);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    int nvars() const { return nv_; }
    Poly& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Poly& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    friend PolyMat operator*(const PolyMat& x, const PolyMat& y);
    friend PolyMat operator+(PolyMat x, const PolyMat& y) { return x += y; }
    friend PolyMat operator-(PolyMat x, const PolyMat& y) { return x -= y; }
    PolyMat& operator+=(const PolyMat& y);
    PolyMat& operator-=(const PolyMat& y);
    PolyMat& operator*=(const Rational& c);
    friend PolyMat operator*(const Rational& c, PolyMat x) { return x *= c; }
    bool operator==(const PolyMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const PolyMat& o) const { return !(*this == o); }
    bool is_zero() const;
    PolyMat submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;
    // constant terms
    RatMatrix constant_part() const;
    json to_json() const;

private:
    size_t r_ = 0, c_ = 0;
    int nv_ = 0;
    std::vector<Poly> a_;
};

// If mat*rhs is a scalar multiple lambda*mat' of another matrix; used for proportionality reports.
std::optional<Rational> proportionality(const PolyMat& a, const PolyMat& b);

// ---------------------------------------------------------------------------
// Webs and their bimodules.

// A web as a path of compositions (read from the domain at index 0) with the
// merge shifts accumulated into qshift.
struct WebWord {
    std::vector<Composition> path;  // consecutive entries comparable and distinct
    int qshift = 0;

    static WebWord from_path(const std::vector<std::vector<int>>& path, bool merge_shifted = true);
    static WebWord from_comps(const std::vector<Composition>& path, bool merge_shifted = true);
    const Composition& dom() const { return path.front(); }
    const Composition& cod() const { return path.back(); }
    std::string str() const;
    json to_json() const;
};

// consecutive duplicates removed; throws unless consecutive entries are comparable
std::vector<Composition> reduce_path(const std::vector<Composition>& path);
// q^{-(l_coarse - l_fine)} for every restriction step
int merge_shift(const std::vector<Composition>& path);

// Singular Bott-Samelson bimodule of a (reduced) path, realized as a free right
// R_dom-module: basis = tuples of Frobenius bases along the peaks, computed by
// normal forms (dual bases and Demazure traces).  Unshifted.
class Realization {
public:
    static std::shared_ptr<const Realization> get(const std::vector<Composition>& path);

    const std::vector<Composition>& path() const { return path_; }
    const Composition& dom() const { return path_.front(); }
    const Composition& cod() const { return path_.back(); }
    int n() const { return dom().total(); }
    const std::vector<size_t>& peaks() const { return peaks_; }
    const std::vector<size_t>& valleys() const { return valleys_; }
    const CoeffRing& ring() const { return ring_; }
    size_t rank() const { return deg_.size(); }
    int basis_degree(size_t i) const { return deg_[i]; }
    const std::vector<int>& basis_degrees() const { return deg_; }

    // normal form of the pure tensor with one polynomial per vertex of path()
    std::vector<Poly> normal_form(const std::vector<Poly>& vertex_polys) const;
    // the i-th basis element as vertex polynomials
    std::vector<Poly> basis_element(size_t i) const;
    // left action of the generators of R_cod (in the order of InvariantRing)
    const std::vector<PolyMat>& left_action() const { return left_; }

    // closed form: prod Hilb(R_peak) / prod Hilb(R_valley)
    HilbertSeries hilbert() const;
    // from the basis: sum q^deg * Hilb(R_dom)
    HilbertSeries basis_hilbert() const;
    // graded dimensions in degrees lo..hi counted from the basis
    std::vector<long> dims(int lo, int hi) const;
    // per-degree dimension check against the closed form, degrees 0..D
    bool check_dimensions(int D) const;
    std::string str() const;

private:
    explicit Realization(std::vector<Composition> path);
    std::vector<Composition> path_;
    std::vector<size_t> peaks_, valleys_;
    const CoeffRing& ring_;
    std::vector<std::vector<Poly>> fb_basis_, fb_dual_;  // per peak j: R_{P_j} over R_{V_{j-1}} (or R_dom)
    std::vector<int> deg_;
    std::vector<std::vector<size_t>> tuples_;
    std::vector<PolyMat> left_;
    std::vector<size_t> run_of_;  // vertex -> peak index
};

using RealPtr = std::shared_ptr<const Realization>;

// Bimodule homomorphism between realizations, as a matrix over R_dom with
// respect to the right bases.  delta is the intrinsic degree
// deg(f(x)) - deg(x) on the unshifted realizations.
struct BimodMap {
    RealPtr src, tgt;
    int delta = 0;
    PolyMat m;

    bool is_zero() const { return m.is_zero(); }
    bool intertwines() const;
    // entries have the degrees forced by delta
    bool homogeneous() const;
    json to_json() const;
};

BimodMap compose(const BimodMap& f, const BimodMap& g);  // f after g
BimodMap operator+(const BimodMap& f, const BimodMap& g);
BimodMap operator*(const Rational& c, const BimodMap& f);
BimodMap identity_map(const RealPtr& r);
// q-degree k such that f: q^{src_shift} src -> q^{k + tgt_shift} tgt is degree preserving
int map_qdegree(const BimodMap& f, int src_shift, int tgt_shift);

// pure tensors in vertex form, one polynomial per vertex of an aligned path
using VertexTensor = std::vector<Poly>;
using VertexFn = std::function<std::vector<VertexTensor>(const VertexTensor&)>;

// Realizes a map given on vertex forms of aligned paths (consecutive repeats allowed).
BimodMap vertex_map(const std::vector<Composition>& src_aligned, const std::vector<Composition>& tgt_aligned,
                    const VertexFn& fn, int delta);
// the canonical map for vertexwise refinements (units, Beck-Chevalley maps, associativity)
BimodMap refinement_map(const std::vector<Composition>& src_aligned, const std::vector<Composition>& tgt_aligned);
// multiplication by g at vertex v of the reduced path
BimodMap decoration(const RealPtr& r, size_t v, const Poly& g);

// adjunction data for split/merge between (a+b) and (a,b)
BimodMap foam_unit(int a, int b);     // id_{a+b} -> merge.split      (inclusion)
BimodMap foam_counit(int a, int b);   // split.merge -> id_{ab}       (multiplication)
BimodMap foam_coev(int a, int b);     // id_{ab} -> split.merge       (coproduct)
BimodMap foam_trace(int a, int b);    // merge.split -> id_{a+b}      (Demazure trace)
struct SnakeResult {
    std::string name;
    bool pass;
};
std::vector<SnakeResult> snake_identities(int a, int b);

// all bimodule maps src -> tgt of intrinsic degree delta (basis over Q)
std::vector<BimodMap> hom_basis(const RealPtr& src, const RealPtr& tgt, int delta);

// ---------------------------------------------------------------------------
// Rickard differentials.

std::vector<Composition> ladder_comps(int a, int b, int c, int d, int k);
// the rung-k ladder web W_k with its merge shifts
WebWord ladder_web(int a, int b, int c, int d, int k);
// chi_m^+: W_k -> W_{k-1}, the composite (refinement through the web with one
// strand held back) followed by traces, with the held-back strand decorated by x^m.
BimodMap chi_plus(int m, int k, int a, int b, int c, int d);
// the same foam whiskered by I^(s) (an s-strand split off b and merged into d)
BimodMap chi_plus_whiskered(int m, int k, int a, int b, int c, int d, int s);
std::vector<Composition> whisker_I(const std::vector<Composition>& path, int s, int a, int b, int c, int d);
// symmetric polynomials in the alphabet of the (d-b+k)-labelled rung of W_k act at this vertex
size_t ladder_M_vertex();
std::vector<int> ladder_M_vars(int a, int b, int c, int d, int k);

// ---------------------------------------------------------------------------
// Complexes.

struct Summand {
    RealPtr r;
    int q = 0;  // total q-shift (including the web's merge shifts)
    std::string label;
};

struct WebComplex {
    int lo = 0;  // homological degree of obj[0]
    std::vector<std::vector<Summand>> obj;
    // d[i][{t,s}]: obj[i][s] -> obj[i+1][t]
    std::vector<std::map<std::pair<size_t, size_t>, PolyMat>> d;

    int hi() const { return lo + static_cast<int>(obj.size()) - 1; }
    size_t count(int i) const;
    void resize(int lo_, int hi_);
    void add_summand(int hdeg, Summand s);
    void add_component(int hdeg, size_t t, size_t s, const PolyMat& m);
    const Composition& dom() const;
    const Composition& cod() const;
    const CoeffRing& ring() const;
    WebComplex shifted(int q, int t) const;
    bool empty() const;
    bool d_squared_zero() const;
    // every component entry has the degree forced by the shifts, and intertwines left actions
    bool well_formed(std::string* why = nullptr) const;
    // sum_i t^i sum_basis q^{deg}
    BiLaurent graded_rank() const;
    // Euler characteristic (t -> -1) as a Hilbert series
    HilbertSeries euler_series() const;
    json to_json(int D = -1) const;
};

// concatenation of right bases per homological degree
struct FreeComplex {
    int lo = 0;
    int nvars = 0;
    const CoeffRing* ring = nullptr;
    std::vector<std::vector<int>> deg;
    std::vector<PolyMat> d;  // d[i]: deg[i+1].size() x deg[i].size()
    int hi() const { return lo + static_cast<int>(deg.size()) - 1; }
    BiLaurent graded_rank() const;
    bool d_squared_zero() const;
    int min_degree() const;
};
FreeComplex flatten(const WebComplex& c);

// degree-q part of d[i] as a matrix over Q (rows: basis of degree q in i+1)
RatMatrix degree_matrix(const FreeComplex& c, size_t i, int q, size_t* rows_out = nullptr, size_t* cols_out = nullptr);

struct HomologyReport {
    bool exact = true;  // all homology vanishes in the checked range
    int qmin = 0, qmax = 0;
    std::map<std::pair<int, int>, long> homology;  // (hdeg, qdeg) -> dim, nonzero entries only
    bool used_rational_fallback = false;
    json to_json() const;
};
HomologyReport homology(const FreeComplex& c, int D);
HomologyReport check_exact(const WebComplex& c, int D);

// cancels constant entries of the flattened differential (right-module level)
FreeComplex reduce_free(const FreeComplex& c);
// cancels components that are bimodule isomorphisms between summands
WebComplex gaussian_eliminate(const WebComplex& c, int D = 16);
// bimodule-level: elimination of isomorphism components, then a solved contracting homotopy
bool is_contractible(const WebComplex& c, int D = 16);
bool has_contracting_homotopy(const WebComplex& c);

// graded inverse of a matrix whose constant part is invertible
std::optional<PolyMat> graded_inverse(const PolyMat& c);

// chain maps between complexes with the same ends, degree 0 after shifts
struct ChainMap {
    const WebComplex* src = nullptr;
    const WebComplex* tgt = nullptr;
    std::vector<std::map<std::pair<size_t, size_t>, PolyMat>> f;  // indexed by src homological degree
};
std::vector<ChainMap> chain_map_basis(const WebComplex& a, const WebComplex& b);
WebComplex cone(const ChainMap& f);

struct EquivalenceReport {
    bool found = false;              // a chain map whose cone is exact and contractible was found
    bool cone_contractible = false;  // the cone admits a bimodule contracting homotopy
    bool iso = false;                // that chain map is an isomorphism in every homological degree
    size_t chain_maps = 0;           // dimension of the degree-0 chain-map space
    bool ranks_match = false;        // graded ranks of the right-module minimal models agree
    BiLaurent lhs_rank, rhs_rank;
    HomologyReport cone_homology;
    json to_json() const;
};
// certifies a ≃ b by a generic degree-0 chain map a -> b whose cone is exact up to D and contractible
EquivalenceReport certify_equivalence(const WebComplex& a, const WebComplex& b, int D, unsigned seed = 1);

// complexes literally equal: same realizations and shifts in each degree, differentials
// equal up to one nonzero scalar per component
struct NoseReport {
    bool objects_equal = false;
    bool proportional = false;
    std::vector<std::string> ratios;
    json to_json() const;
};
NoseReport compare_on_the_nose(const WebComplex& a, const WebComplex& b);

// ---------------------------------------------------------------------------
// Constructions.

WebComplex rickard(int a, int b, int c, int d);
// complex with a single object
WebComplex single(const WebWord& w, int qshift = 0, int hdeg = 0);
WebComplex identity_complex(const Composition& c, int qshift = 0, int hdeg = 0);

// Beck-Chevalley cube of Q(ab,cd) evaluated on unshifted zigzag words, as a total complex
WebComplex bc_total(const Composition& ab, const Composition& cd);
// cofibre of the unit: the A_1 cotwist (id_n -> unshifted Res.Ind through (a,b))
WebComplex cotwist_complex(int a, int b);
// total cofibre of the exploded-web cube for n
WebComplex expl_complex(int n);
// positive 1-colored braid word on n strands (generators 1..n-1) as a cube of counits
WebComplex braid_complex(int n, const std::vector<int>& word);

// Koszul data: zeta_j = sum_i (-1)^{j-i} e_{j-i}(M) xi_i, xi_i = sum_j h_{i-j}(M) zeta_j
struct KoszulData {
    int b = 0;
    int nvars = 0;
    std::vector<int> alphabet;          // variable indices of M
    std::vector<std::vector<Poly>> to_xi;    // to_xi[j][i]: coefficient of xi_i in zeta_j (1-based stored 0-based)
    std::vector<std::vector<Poly>> from_xi;  // from_xi[i][j]: coefficient of zeta_j in xi_i
    bool unitriangular() const;
    bool inverse_ok() const;
};
KoszulData zeta_basis(int b, int nvars, const std::vector<int>& alphabet);
// d(zeta_j) = delta_{j,b} for the derivation d(xi_i) = delta_{i,b}, checked symbolically on all
// exterior monomials (d is the contraction zeta_b^* in the zeta basis)
struct ZetaLemmaReport {
    bool pass = false;
    bool displayed_sign_convention = false;  // d(zeta_b) = (-1)^{b-1} for the displayed formula
    std::vector<std::string> detail;
};
ZetaLemmaReport check_zeta_lemma(int b, int alphabet_size);

// K(X) = tw_{1 (x) xi_b^*}(X (x) wedge[xi_1..xi_b])
WebComplex koszul(const WebComplex& x, int b);

struct PklsReport {
    int a = 0, b = 0, c = 0, d = 0;
    bool d_squared_zero = false;
    bool pieces_anticommute = false;            // literal pairwise check of d^v, d^h, d^c
    bool pieces_anticommute_below_top = false;  // same with the k=b vertical part as its own piece
    bool only_allowed_components = false;
    bool dH_matches_chi = false;       // zeta-basis components equal chi_m^+ up to sign
    bool l0_subcomplex = false;
    bool l0_retracts_to_Wb = false;
    std::vector<int> s_values;
    std::vector<bool> s_iso;           // subquotient s isomorphic to IMCS^s
    std::vector<int> s_columns;        // number of summands in each s-subquotient
    std::vector<std::string> notes;
    bool pass() const;
    json to_json() const;
};
PklsReport pkls_decompose(int a, int b, int c, int d, int D);

// whiskered shifted Rickard complex q^{-s(s+a-d)} I^(s)(Rick(a, b-s, c, d-s))
WebComplex imcs(int a, int b, int c, int d, int s);

// ---------------------------------------------------------------------------
// Exact rank kernel over F_p, p = 2^31 - 1.

namespace modp {
constexpr uint32_t P = 2147483647u;
enum class Kernel { Auto, Scalar, Avx2 };
bool avx2_available();
// row reduction in place; returns the rank
size_t rank(std::vector<uint32_t>& a, size_t rows, size_t cols, Kernel k = Kernel::Auto);
// a[j] = (a[j] + f * b[j]) mod P for j < n
void axpy(uint32_t* a, const uint32_t* b, uint32_t f, size_t n, Kernel k = Kernel::Auto);
std::optional<uint32_t> reduce(const Rational& x);
}  // namespace modp

// rank over Q, using the F_p rank when it already equals min(rows, cols)
size_t exact_rank(const RatMatrix& m, bool* used_fallback = nullptr);

// ---------------------------------------------------------------------------
// Suites (bimod verify).

SuiteReport bimod_suite(const std::string& name, int D);

}  // namespace schober

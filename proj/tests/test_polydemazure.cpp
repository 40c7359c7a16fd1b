#include <functional>
#include <random>

#include "doctest.h"
#include "schober/polydemazure.hpp"

using namespace schober;

namespace {

Poly random_poly(std::mt19937& rng, int n, int maxdeg, int terms = 6) {
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, maxdeg), var(0, n - 1);
    Poly p(n);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(n, 0);
        int d = deg(rng);
        for (int k = 0; k < d; ++k) ++e[var(rng)];
        p += Poly::monomial(n, e, coef(rng));
    }
    return p;
}

Poly x(int n, int i) { return Poly::var(n, i - 1); }

// semistandard tableaux of shape lambda with entries among vars
Poly tableau_schur(int n, const std::vector<int>& vars, const std::vector<int>& lam) {
    std::vector<std::vector<int>> T;
    for (int r : lam) T.push_back(std::vector<int>(r, -1));
    Poly out(n);
    const int m = static_cast<int>(vars.size());
    std::vector<std::pair<int, int>> cells;
    for (size_t r = 0; r < lam.size(); ++r)
        for (int c = 0; c < lam[r]; ++c) cells.push_back({static_cast<int>(r), c});
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            std::vector<int> e(n, 0);
            for (auto& row : T)
                for (int v : row) ++e[vars[v]];
            out += Poly::monomial(n, e);
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 0; v < m; ++v) {
            if (c > 0 && T[r][c - 1] > v) continue;
            if (r > 0 && T[r - 1][c] >= v) continue;
            T[r][c] = v;
            rec(k + 1);
            T[r][c] = -1;
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("permutation action and invariance") {
    CHECK(act(Permutation::simple(2, 1), x(2, 1)) == x(2, 2));
    CHECK(is_invariant(x(2, 1) * x(2, 2), {2}));
    CHECK_FALSE(is_invariant(x(2, 1), {2}));
    std::mt19937 rng(3);
    for (int it = 0; it < 50; ++it) {
        auto p = random_poly(rng, 4, 4), q = random_poly(rng, 4, 4);
        for (auto& w : all_permutations(4)) {
            CHECK(act(w, p * q) == act(w, p) * act(w, q));
            CHECK(act(w, p + q) == act(w, p) + act(w, q));
        }
    }
}

TEST_CASE("Demazure operators") {
    CHECK(demazure(1, x(2, 1)) == Poly::constant(2, 1));
    CHECK(demazure(1, x(2, 1) * x(2, 2)).is_zero());
    CHECK(demazure(1, x(2, 1) * x(2, 1)) == x(2, 1) + x(2, 2));
    std::mt19937 rng(5);
    for (int n = 2; n <= 5; ++n)
        for (int it = 0; it < 30; ++it) {
            auto p = random_poly(rng, n, 8);
            for (int i = 1; i < n; ++i) {
                auto d = demazure(i, p);
                // defining property in the domain R
                CHECK((x(n, i) - x(n, i + 1)) * d == p - p.swap_vars(i));
                CHECK(demazure(i, d).is_zero());
                if (i + 1 < n) CHECK(demazure_word({i, i + 1, i}, p) == demazure_word({i + 1, i, i + 1}, p));
                for (int j = i + 2; j < n; ++j) CHECK(demazure_word({i, j}, p) == demazure_word({j, i}, p));
                // linearity over invariants
                auto inv = p + p.swap_vars(i);
                auto q = random_poly(rng, n, 4);
                CHECK(demazure(i, inv * q) == inv * demazure(i, q));
            }
            auto h = random_poly(rng, n, 6).homogeneous_part(8);
            if (!h.is_zero() && !demazure(1, h).is_zero()) CHECK(demazure(1, h).degree() == 6);
        }
}

TEST_CASE("Frobenius traces") {
    CHECK(frobenius_trace({1, 1}, {2}, x(2, 1)) == Poly::constant(2, 1));
    auto p = x(3, 1) * x(3, 1) * x(3, 2);
    CHECK(demazure_word({1, 2, 1}, p) == demazure_word({2, 1, 2}, p));
    CHECK(frobenius_trace({1, 1, 1}, {3}, p) == demazure_word({2, 1, 2}, p));
    CHECK(frobenius_trace({1, 1, 1}, {3}, Poly::constant(3, 1)).is_zero());
    CHECK_THROWS(frobenius_trace({3}, {1, 1, 1}, Poly::constant(3, 1)));
    CHECK_THROWS(frobenius_trace({2, 1}, {3}, x(3, 1)));
    // composition law along chains, random S_A-invariants
    std::mt19937 rng(9);
    for (int n = 3; n <= 5; ++n)
        for (auto& A : all_compositions(n))
            for (auto& B : all_compositions(n)) {
                if (!A.refines(B) || A == B) continue;
                for (auto& C : all_compositions(n)) {
                    if (!B.refines(C) || B == C) continue;
                    Poly f(n);
                    for (int t = 0; t < 3; ++t) {
                        auto g = random_poly(rng, n, 5, 2);
                        Poly sym(n);
                        for (auto& w : all_permutations(n)) {
                            bool in = true;
                            auto off = A.offsets();
                            for (size_t b = 0; b < A.size(); ++b)
                                for (int i = off[b]; i < off[b + 1]; ++i) in = in && w[i] >= off[b] && w[i] < off[b + 1];
                            if (in) sym += act(w, g);
                        }
                        f += sym;
                    }
                    auto via = frobenius_trace(B, C, frobenius_trace(A, B, f));
                    CHECK(frobenius_trace(A, C, f) == via);
                    CHECK(is_invariant(frobenius_trace(A, C, f), C));
                }
            }
}

TEST_CASE("symmetric functions") {
    CHECK(elementary(2, {0, 1}, 1) == x(2, 1) + x(2, 2));
    CHECK(complete(1, {0}, 2) == x(1, 1) * x(1, 1));
    for (auto lam : std::vector<std::vector<int>>{{2, 1}, {3}, {1, 1, 1}, {2, 2}, {3, 1}, {2, 1, 1}})
        CHECK(schur(3, {0, 1, 2}, lam) == tableau_schur(3, {0, 1, 2}, lam));
    CHECK(schur(4, {1, 2}, {2, 1}) == tableau_schur(4, {1, 2}, {2, 1}));
    CHECK(schur(3, {0, 1}, {1, 1, 1}).is_zero());
}

TEST_CASE("invariant rings and graded bases") {
    InvariantRing r2(Composition{2});
    CHECK(r2.graded_basis(2).size() == 1);
    CHECK(r2.graded_basis(2)[0] == x(2, 1) + x(2, 2));
    InvariantRing r11(Composition{1, 1});
    CHECK(r11.graded_basis(2).size() == 2);
    InvariantRing r21(Composition{2, 1});
    auto hs = r21.hilbert().expand(16);
    CHECK(r21.graded_basis(8).size() == hs[8]);
    for (auto& c : all_compositions(4)) {
        InvariantRing R(c);
        auto h = R.hilbert().expand(12);
        for (int d = 0; d <= 12; d += 2) {
            auto B = R.graded_basis(d);
            CHECK(B.size() == h[d]);
            // monomial-count oracle: orbit sums of monomials span the invariants
            CHECK(orbit_representatives(c, d).size() == B.size());
            for (auto& b : B) CHECK(is_invariant(b, c));
        }
    }
}

TEST_CASE("dual bases of Frobenius extensions") {
    auto d11 = dual_bases(1, 1);
    CHECK(d11.basis.size() == 2);
    CHECK(d11.basis[0] == Poly::constant(2, 1));
    CHECK(d11.basis[1] == x(2, 1));
    CHECK(frobenius_trace({1, 1}, {2}, d11.basis[0] * d11.dual[1]).is_zero());
    CHECK(dual_bases(2, 1).basis.size() == 3);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}}) {
        auto db = dual_bases(a, b);
        Composition I{a, b}, J{a + b};
        for (size_t i = 0; i < db.basis.size(); ++i) {
            CHECK(is_invariant(db.dual[i], I));
            for (size_t j = 0; j < db.basis.size(); ++j)
                CHECK(frobenius_trace(I, J, db.basis[i] * db.dual[j]) == Poly::constant(a + b, i == j));
        }
    }
    for (auto [P, V] : std::vector<std::pair<Composition, Composition>>{
             {{1, 1, 1}, {3}}, {{1, 2, 1}, {4}}, {{1, 1, 1, 1}, {2, 2}}, {{2, 1, 1}, {2, 2}}, {{1, 1, 2}, {2, 2}}}) {
        auto fb = frobenius_bases(P, V);
        size_t rank = 1;
        {
            // |W_V| / |W_P|
            auto fact = [](int m) { size_t f = 1; for (int i = 2; i <= m; ++i) f *= i; return f; };
            for (int p : V.parts) rank *= fact(p);
            for (int p : P.parts) rank /= fact(p);
        }
        CHECK(fb.basis.size() == rank);
        for (size_t i = 0; i < fb.basis.size(); ++i)
            for (size_t j = 0; j < fb.basis.size(); ++j)
                CHECK(frobenius_trace(P, V, fb.basis[i] * fb.dual[j]) == Poly::constant(P.total(), i == j));
    }
}

#include <set>

#include "doctest.h"
#include "schober/symcomb.hpp"

using namespace schober;

TEST_CASE("cubical coordinates") {
    CHECK(comp_to_cube({3}) == CubeCoord{0, 0});
    CHECK(comp_to_cube({2, 1}) == CubeCoord{0, 1});
    CHECK(comp_to_cube({1, 1, 1}) == CubeCoord{1, 1});
    CHECK(comp_to_cube({4}) == CubeCoord{0, 0, 0});
    CHECK(comp_to_cube({2, 2}) == CubeCoord{0, 1, 0});
    CHECK(comp_to_cube({1, 2, 1}) == CubeCoord{1, 0, 1});
    CHECK(comp_to_cube(Composition()).empty());
    CHECK(cube_to_comp({}, 0) == Composition());
    CHECK_THROWS(cube_to_comp({0, 1}, 4));
    // poset isomorphism onto the Boolean lattice, n <= 7
    for (int n = 1; n <= 7; ++n) {
        auto all = all_compositions(n);
        CHECK(all.size() == (1u << (n - 1)));
        for (auto& c : all) {
            CHECK(cube_to_comp(comp_to_cube(c), n) == c);
            CHECK(c.total() == n);
            for (auto& d : all) {
                auto bc = comp_to_cube(c), bd = comp_to_cube(d);
                bool le = true;
                for (size_t i = 0; i < bc.size(); ++i) le = le && bd[i] <= bc[i];
                CHECK(c.refines(d) == le);
            }
        }
    }
}

TEST_CASE("covers and concatenation") {
    CHECK(refinement_splits({2}) == std::vector<Composition>{{1, 1}});
    auto m = refinement_merges({1, 1, 1});
    CHECK(std::set<Composition>(m.begin(), m.end()) == std::set<Composition>{{2, 1}, {1, 2}});
    auto s = refinement_splits({3});
    CHECK(std::set<Composition>(s.begin(), s.end()) == std::set<Composition>{{2, 1}, {1, 2}});
    CHECK(concat({2, 1}, {3}) == Composition{2, 1, 3});
    CHECK(concat(Composition(), {2, 2}) == Composition{2, 2});
    for (auto& a : all_compositions(3))
        for (auto& b : all_compositions(2))
            for (auto& c : all_compositions(3)) CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    // covers are exactly the mask differences of size one
    for (int n = 1; n <= 6; ++n)
        for (auto& c : all_compositions(n)) {
            for (auto& d : refinement_splits(c)) CHECK(__builtin_popcount(d.mask() ^ c.mask()) == 1);
            for (auto& d : refinement_merges(c)) CHECK(__builtin_popcount(d.mask() ^ c.mask()) == 1);
            CHECK(refinement_splits(c).size() + refinement_merges(c).size() == static_cast<size_t>(n - 1));
        }
}

TEST_CASE("permutations and reduced words") {
    auto s1 = longest_element({2});
    CHECK(s1.length() == 1);
    CHECK(longest_element({1, 1}).length() == 0);
    auto w0 = longest_element({3});
    CHECK(w0.length() == 3);
    auto words = all_reduced_words(w0);
    CHECK(std::set<std::vector<int>>(words.begin(), words.end()) == std::set<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});
    CHECK(reduced_word(w0) == std::vector<int>{1, 2, 1});
    CHECK(all_reduced_words(longest_element({4})).size() == 16);
    CHECK(all_reduced_words(longest_element({5})).size() == 768);
    CHECK_THROWS_AS(all_reduced_words(longest_element({5}), 100), std::length_error);
    for (auto& c : all_compositions(5)) CHECK(longest_element(c).length() == c.longest_length());
    // exhaustive oracle: every word of length l(w) evaluating to w
    for (auto& w : all_permutations(4)) {
        int l = w.length();
        std::set<std::vector<int>> brute;
        std::vector<int> word(l, 1);
        while (true) {
            if (Permutation::from_word(4, word) == w) brute.insert(word);
            int i = 0;
            while (i < l && word[i] == 3) word[i++] = 1;
            if (i == l) break;
            ++word[i];
        }
        auto rw = all_reduced_words(w);
        CHECK(std::set<std::vector<int>>(rw.begin(), rw.end()) == brute);
        CHECK(Permutation::from_word(4, reduced_word(w)) == w);
        CHECK((w * w.inverse()) == Permutation::identity(4));
    }
}

namespace {
int expected_dim(int a, int b, int c, int d) {
    int m = std::min(std::min(a, b), std::min(c, d));
    return a == d ? m + 1 : m + 2;
}
}  // namespace

TEST_CASE("bifactorization cubes") {
    auto q11 = bifact_cube({1, 1}, {1, 1});
    CHECK(q11.dim() == 2);
    CHECK(q11.vertex(0) == Composition{2});
    CHECK(q11.vertex(1) == Composition{1, 1});
    CHECK(q11.vertex(2) == Composition{1, 1});
    CHECK(q11.vertex(3) == Composition{1, 1});

    auto q = bifact_cube({2, 1}, {1, 2});
    std::set<Composition> corners;
    for (uint32_t v = 0; v < 4; ++v) corners.insert(q.vertex(v));
    CHECK(corners == std::set<Composition>{{3}, {2, 1}, {1, 2}, {1, 1, 1}});
    CHECK(q.domain() == Composition{2, 1});
    CHECK(q.codomain() == Composition{1, 2});

    auto q43 = bifact_cube({4, 3}, {2, 5});
    CHECK(q43.dim() == 4);
    std::set<Composition> back;
    for (uint32_t v = 0; v < 8; ++v) back.insert(q43.vertex(v));
    CHECK(back == std::set<Composition>{{7}, {4, 3}, {1, 4, 2}, {1, 3, 1, 2}, {2, 5}, {2, 2, 3}, {1, 1, 3, 2}, {1, 1, 2, 1, 2}});

    // completeness: each pair reached by exactly one clause chain; corners and dimension as predicted
    for (int n = 2; n <= 12; ++n)
        for (int a = 1; a < n; ++a)
            for (int c = 1; c < n; ++c) {
                int b = n - a, d = n - c;
                BifactCube Q;
                REQUIRE_NOTHROW(Q = bifact_cube({a, b}, {c, d}));
                CHECK(Q.domain() == Composition{a, b});
                CHECK(Q.codomain() == Composition{c, d});
                CHECK(Q.dim() == expected_dim(a, b, c, d));
                if (a == d) CHECK(Q.dim() == std::min(a, b) + 1);
                for (auto& cl : Q.clause_chain) CHECK(!cl.empty());
                for (uint32_t v = 0; v < (1u << Q.dim()); ++v) {
                    CHECK(Q.vertex(v).total() == n);
                    for (uint32_t w = v; w < (1u << Q.dim()); ++w)
                        if ((v & w) == v) CHECK(Q.vertex(w).refines(Q.vertex(v)));
                }
                auto T = bifact_cube({c, d}, {a, b});
                for (uint32_t v = 0; v < (1u << Q.dim()); ++v) {
                    uint32_t sw = (v & ~3u) | (v >> 1 & 1) | (v & 1) << 1;
                    CHECK(T.vertex(sw) == Q.vertex(v));
                }
            }
}

TEST_CASE("bialgebra quadruples") {
    auto q = bialg_quadruples({4, 3}, {2, 5});
    CHECK(q == std::vector<BialgQuad>{{2, 2, 0, 3}, {1, 3, 1, 2}, {0, 4, 2, 1}});
    CHECK(bialg_quadruples({1, 1}, {1, 1}) == std::vector<BialgQuad>{{1, 0, 0, 1}, {0, 1, 1, 0}});
    for (int n = 2; n <= 8; ++n)
        for (int a = 1; a < n; ++a)
            for (int c = 1; c < n; ++c) {
                int b = n - a, d = n - c;
                std::vector<BialgQuad> brute;
                for (int j = 0; j <= n; ++j)
                    for (int i = 0; i <= n; ++i)
                        for (int k = 0; k <= n; ++k)
                            for (int l = 0; l <= n; ++l)
                                if (i + j == a && k + l == b && i + k == c && j + l == d) brute.push_back({i, j, k, l});
                CHECK(bialg_quadruples({a, b}, {c, d}) == brute);
                CHECK(brute.size() == static_cast<size_t>(std::min(std::min(a, b), std::min(c, d)) + 1));
            }
    auto ab = bialg_quadruples({3, 2}, {2, 3});
    CHECK(ab.front() == BialgQuad{2, 1, 0, 2});
    bool has = false;
    for (auto& x : bialg_quadruples({3, 2}, {2, 3})) has = has || x == BialgQuad{0, 3, 2, 0};
    CHECK(has);
}

TEST_CASE("zigzag words of Beck-Chevalley cubes") {
    auto z = zigzag_vertices(bifact_cube({2, 2}, {2, 2}));
    REQUIRE(z.size() == 4);
    auto comps = [](const ZigzagWord& w) {
        std::vector<std::string> s;
        for (auto& c : w.comps) s.push_back(c.str());
        return s;
    };
    CHECK(comps(z[0]) == std::vector<std::string>{"22", "4", "22"});
    CHECK(comps(z[2]) == std::vector<std::string>{"22", "1111", "121", "1111", "22"});
    CHECK(comps(z[1]) == std::vector<std::string>{"22"});
    CHECK(comps(z[3]) == std::vector<std::string>{"22", "1111", "22"});
    CHECK(z[2].up == std::vector<bool>{true, false, true, false});

    auto u = zigzag_vertices(bifact_cube({1, 1}, {1, 1}));
    CHECK(comps(u[0]) == std::vector<std::string>{"11", "2", "11"});
    CHECK(u[0].up == std::vector<bool>{false, true});
    CHECK(comps(u[1]) == std::vector<std::string>{"11"});

    auto q = bifact_cube({4, 3}, {2, 5});
    auto zz = zigzag_vertices(q);
    CHECK(zz.size() == 8);
    for (auto& [v, w] : zz) {
        CHECK(w.comps.front() == Composition{4, 3});
        CHECK(w.comps.back() == Composition{2, 5});
        for (size_t i = 0; i + 1 < w.comps.size(); ++i)
            CHECK((w.comps[i + 1].refines(w.comps[i]) || w.comps[i].refines(w.comps[i + 1])));
    }
    auto j = bifact_json(q);
    CHECK(j["vertices"].size() == 16);
    CHECK(comp_cube_json(4)["vertices"].size() == 8);
    CHECK(comp_cube_dot(4).find("\"22\" -> \"211\"") != std::string::npos);
}

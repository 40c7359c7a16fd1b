#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace schober {

using json = nlohmann::json;

struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p);
    explicit Composition(std::vector<int> p);

    int total() const;
    size_t size() const { return parts.size(); }
    int operator[](size_t i) const { return parts[i]; }
    // sum of n_j(n_j-1)/2, the length of the longest element of the parabolic
    int longest_length() const;
    // first variable index of each block, plus total at the end
    std::vector<int> offsets() const;
    // bit i set iff there is a part boundary after position i+1
    uint32_t mask() const;
    static Composition from_mask(uint32_t mask, int n);
    // finer (more parts) is larger; true iff this refines d
    bool refines(const Composition& d) const;
    bool operator==(const Composition& o) const { return parts == o.parts; }
    bool operator!=(const Composition& o) const { return parts != o.parts; }
    bool operator<(const Composition& o) const { return parts < o.parts; }
    std::string str() const;
};

using CubeCoord = std::vector<int>;

CubeCoord comp_to_cube(const Composition& c);
Composition cube_to_comp(const CubeCoord& bits, int n);
std::vector<Composition> all_compositions(int n);
std::vector<Composition> refinement_splits(const Composition& c);
std::vector<Composition> refinement_merges(const Composition& c);
Composition concat(const Composition& c, const Composition& d);
Composition drop_zeros(const std::vector<int>& parts);

// one-line notation, stored 0-based: w[i] = image of i
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation simple(int n, int i);  // s_i, 1 <= i <= n-1
    static Permutation from_word(int n, const std::vector<int>& word);

    int n() const { return static_cast<int>(w_.size()); }
    int operator[](int i) const { return w_[i]; }
    const std::vector<int>& images() const { return w_; }
    int length() const;
    Permutation inverse() const;
    friend Permutation operator*(const Permutation& u, const Permutation& v);  // (uv)(i) = u(v(i))
    bool operator==(const Permutation& o) const { return w_ == o.w_; }
    bool operator<(const Permutation& o) const { return w_ < o.w_; }
    bool left_descent(int i) const;   // l(s_i w) < l(w)
    bool right_descent(int i) const;  // l(w s_i) < l(w)
    std::string str() const;  // 1-based one-line notation

private:
    std::vector<int> w_;
};

Permutation longest_element(const Composition& c);
std::vector<int> reduced_word(const Permutation& w);  // lexicographically smallest
std::vector<std::vector<int>> all_reduced_words(const Permutation& w, size_t cap = 10000);
std::vector<Permutation> all_permutations(int n);

// Sub-cube of Comp(n): cube coordinate j contributes the boundary mask masks[j];
// a vertex v maps to fixed_one | OR_{v_j = 1} masks[j].  Coordinate 0 carries
// the codomain composition, coordinate 1 the domain composition.
struct BifactCube {
    int n = 0;
    std::vector<uint32_t> masks;
    uint32_t fixed_one = 0;
    bool transposed = false;
    std::vector<std::string> clause_chain;

    int dim() const { return static_cast<int>(masks.size()); }
    uint32_t vertex_mask(uint32_t v) const;
    Composition vertex(uint32_t v) const { return Composition::from_mask(vertex_mask(v), n); }
    Composition domain() const { return vertex(2); }
    Composition codomain() const { return vertex(1); }
    // per boundary position: "0", "1", or the list of cube coordinates touching it
    std::vector<std::string> position_classes() const;
};

BifactCube bifact_cube(const Composition& ab, const Composition& cd);
// clause labels whose pattern matches (A,B,C,D) with A >= C (used by the completeness check)
std::vector<std::string> matching_clauses(int a, int b, int c, int d);

struct BialgQuad {
    int i, j, k, l;
    bool operator==(const BialgQuad& o) const { return i == o.i && j == o.j && k == o.k && l == o.l; }
};
std::vector<BialgQuad> bialg_quadruples(const Composition& ab, const Composition& cd);

struct ZigzagWord {
    std::vector<Composition> comps;
    std::vector<bool> up;  // up[i]: comps[i] -> comps[i+1] refines (coCartesian leg)
    std::vector<uint32_t> qvertices;  // path in the bifactorization cube
    std::string str() const;
};

// BC-cube vertex bits (eps, u_1..u_{dim-2}) packed with eps at bit 0
std::map<uint32_t, ZigzagWord> zigzag_vertices(const BifactCube& q);

std::string comp_cube_dot(int n);
json comp_cube_json(int n);
std::string bifact_dot(const BifactCube& q);
json bifact_json(const BifactCube& q);

}  // namespace schober

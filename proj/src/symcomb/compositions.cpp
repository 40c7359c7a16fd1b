#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "schober/symcomb.hpp"

namespace schober {

Composition::Composition(std::initializer_list<int> p) : Composition(std::vector<int>(p)) {}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Composition::longest_length() const {
    int s = 0;
    for (int x : parts) s += x * (x - 1) / 2;
    return s;
}

std::vector<int> Composition::offsets() const {
    std::vector<int> o{0};
    for (int x : parts) o.push_back(o.back() + x);
    return o;
}

uint32_t Composition::mask() const {
    uint32_t m = 0;
    int pos = 0;
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        pos += parts[i];
        m |= 1u << (pos - 1);
    }
    return m;
}

Composition Composition::from_mask(uint32_t mask, int n) {
    if (n == 0) return Composition();
    std::vector<int> p;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
        if (mask >> i & 1) {
            p.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    p.push_back(run);
    return Composition(p);
}

bool Composition::refines(const Composition& d) const {
    if (total() != d.total()) return false;
    return (mask() & d.mask()) == d.mask();
}

std::string Composition::str() const {
    if (parts.empty()) return "()";
    bool small = std::all_of(parts.begin(), parts.end(), [](int x) { return x < 10; });
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (!small && i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

CubeCoord comp_to_cube(const Composition& c) {
    int n = c.total();
    CubeCoord b(n > 0 ? n - 1 : 0, 0);
    uint32_t m = c.mask();
    for (int i = 0; i + 1 < n; ++i) b[i] = m >> i & 1;
    return b;
}

Composition cube_to_comp(const CubeCoord& bits, int n) {
    if (n < 0 || static_cast<int>(bits.size()) != std::max(0, n - 1))
        throw std::invalid_argument("cube coordinate length does not match n-1");
    uint32_t m = 0;
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("cube coordinates must be 0/1");
        m |= static_cast<uint32_t>(bits[i]) << i;
    }
    return Composition::from_mask(m, n);
}

std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) return {Composition()};
    for (uint32_t m = 0; m < (1u << (n - 1)); ++m) out.push_back(Composition::from_mask(m, n));
    return out;
}

std::vector<Composition> refinement_splits(const Composition& c) {
    std::vector<Composition> out;
    for (size_t i = 0; i < c.size(); ++i)
        for (int x = 1; x < c[i]; ++x) {
            auto p = c.parts;
            p[i] = x;
            p.insert(p.begin() + i + 1, c[i] - x);
            out.emplace_back(p);
        }
    return out;
}

std::vector<Composition> refinement_merges(const Composition& c) {
    std::vector<Composition> out;
    for (size_t i = 0; i + 1 < c.size(); ++i) {
        auto p = c.parts;
        p[i] += p[i + 1];
        p.erase(p.begin() + i + 1);
        out.emplace_back(p);
    }
    return out;
}

Composition concat(const Composition& c, const Composition& d) {
    auto p = c.parts;
    p.insert(p.end(), d.parts.begin(), d.parts.end());
    return Composition(p);
}

Composition drop_zeros(const std::vector<int>& parts) {
    std::vector<int> p;
    for (int x : parts) {
        if (x < 0) throw std::invalid_argument("negative part");
        if (x > 0) p.push_back(x);
    }
    return Composition(p);
}

}  // namespace schober

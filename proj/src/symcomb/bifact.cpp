#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "schober/symcomb.hpp"

namespace schober {

uint32_t BifactCube::vertex_mask(uint32_t v) const {
    uint32_t m = fixed_one;
    for (int j = 0; j < dim(); ++j)
        if (v >> j & 1) m |= masks[j];
    return m;
}

std::vector<std::string> BifactCube::position_classes() const {
    std::vector<std::string> out;
    for (int p = 0; p + 1 < n; ++p) {
        std::string s;
        if (fixed_one >> p & 1) s = "1";
        for (int j = 0; j < dim(); ++j)
            if (masks[j] >> p & 1) s += (s.empty() ? "c" : ",c") + std::to_string(j);
        out.push_back(s.empty() ? "0" : s);
    }
    return out;
}

std::vector<std::string> matching_clauses(int a, int b, int c, int d) {
    std::vector<std::string> m;
    if (a < c) return m;
    if (a == 1 && b == 1 && c == 1 && d == 1) m.push_back("(1)");
    if (a > 1 && b == 1 && c == 1 && d == a) m.push_back("(2)");
    if (b == c && d == a && b >= 2 && a >= b) m.push_back("(3)");
    // (4)/(5) with the base pair (xy,yx), x >= y >= 1
    if (d == a + 1 && b == c + 1 && c >= 1) m.push_back("(4a)");
    if (d == a - 1 && c == b + 1 && d >= b && b >= 1) m.push_back("(4b)");
    if (d >= a + 2 && b - c == d - a && c >= 1) m.push_back("(5a)");
    if (a >= d + 2 && c - b == a - d && d >= b && b >= 1) m.push_back("(5b)");
    return m;
}

namespace {

BifactCube shift_up(BifactCube q) {
    for (auto& m : q.masks) m <<= 1;
    q.fixed_one <<= 1;
    q.n += 1;
    return q;
}

BifactCube build(int a, int b, int c, int d) {
    auto cl = matching_clauses(a, b, c, d);
    if (cl.size() != 1) {
        std::ostringstream os;
        os << "Q(" << a << b << "," << c << d << "): " << cl.size() << " matching clauses";
        throw std::domain_error(os.str());
    }
    const std::string& k = cl[0];
    BifactCube q;
    if (k == "(1)") {
        q.n = 2;
        q.masks = {1u, 1u};
    } else if (k == "(2)") {
        q.n = a + 1;
        q.masks = {1u, 1u << (a - 1)};
    } else if (k == "(3)") {
        q = shift_up(build(a - 1, b - 1, c - 1, d - 1));
        q.n += 1;
        q.masks.push_back(1u | 1u << (q.n - 2));
    } else if (k == "(4a)") {
        q = build(a, c, c, a);
        q.n += 1;
        q.masks.push_back(1u << (q.n - 2));
    } else if (k == "(4b)") {
        q = shift_up(build(d, b, b, d));
        q.masks.push_back(1u);
    } else if (k == "(5a)") {
        q = build(a, b - 1, c, d - 1);
        q.n += 1;
    } else {  // (5b)
        q = shift_up(build(a - 1, b, c - 1, d));
    }
    q.clause_chain.insert(q.clause_chain.begin(), k);
    return q;
}

}  // namespace

BifactCube bifact_cube(const Composition& ab, const Composition& cd) {
    if (ab.size() != 2 || cd.size() != 2) throw std::invalid_argument("bifact_cube needs two-part compositions");
    if (ab.total() != cd.total()) throw std::invalid_argument("bifact_cube: mismatched totals");
    int a = ab[0], b = ab[1], c = cd[0], d = cd[1];
    if (a >= c) return build(a, b, c, d);
    // transpose: domain and codomain coordinates trade places
    BifactCube q = build(c, d, a, b);
    std::swap(q.masks[0], q.masks[1]);
    q.transposed = true;
    q.clause_chain.insert(q.clause_chain.begin(), "(6)");
    return q;
}

std::vector<BialgQuad> bialg_quadruples(const Composition& ab, const Composition& cd) {
    if (ab.size() != 2 || cd.size() != 2 || ab.total() != cd.total())
        throw std::invalid_argument("bialg_quadruples needs two-part compositions of equal total");
    int a = ab[0], b = ab[1], c = cd[0], d = cd[1];
    std::vector<BialgQuad> out;
    for (int j = 0; j <= a; ++j) {
        int i = a - j, k = c - i, l = b - k;
        if (i >= 0 && k >= 0 && l >= 0 && j + l == d) out.push_back({i, j, k, l});
    }
    return out;
}

std::string ZigzagWord::str() const {
    std::string s;
    for (size_t i = 0; i < comps.size(); ++i) {
        if (i) s += up[i - 1] ? " -> " : " <- ";
        s += comps[i].str();
    }
    return s;
}

std::map<uint32_t, ZigzagWord> zigzag_vertices(const BifactCube& q) {
    if (q.dim() < 2) throw std::invalid_argument("zigzag_vertices needs a cube of dimension >= 2");
    std::map<uint32_t, ZigzagWord> out;
    const int extra = q.dim() - 2;
    for (uint32_t eps = 0; eps < 2; ++eps)
        for (uint32_t u = 0; u < (1u << extra); ++u) {
            std::vector<uint32_t> path;
            uint32_t uu = u << 2;
            if (eps == 0) path = {2, 2 | uu, uu, 1 | uu, 1};
            else path = {2, 3 | uu, 1};
            ZigzagWord w;
            w.qvertices = path;
            for (uint32_t v : path) {
                Composition c = q.vertex(v);
                if (!w.comps.empty() && w.comps.back() == c) continue;
                if (!w.comps.empty()) w.up.push_back(c.refines(w.comps.back()));
                w.comps.push_back(c);
            }
            out[eps | u << 1] = w;
        }
    return out;
}

std::string comp_cube_dot(int n) {
    std::ostringstream os;
    os << "digraph Comp" << n << " {\n";
    for (auto& c : all_compositions(n)) os << "  \"" << c.str() << "\";\n";
    for (auto& c : all_compositions(n))
        for (auto& s : refinement_splits(c)) os << "  \"" << c.str() << "\" -> \"" << s.str() << "\";\n";
    os << "}\n";
    return os.str();
}

json comp_cube_json(int n) {
    json j;
    j["schema"] = 1;
    j["n"] = n;
    j["vertices"] = json::array();
    j["edges"] = json::array();
    for (auto& c : all_compositions(n)) {
        j["vertices"].push_back({{"composition", c.parts}, {"label", c.str()}, {"cube", comp_to_cube(c)}});
        for (auto& s : refinement_splits(c)) j["edges"].push_back({c.str(), s.str()});
    }
    return j;
}

std::string bifact_dot(const BifactCube& q) {
    std::ostringstream os;
    os << "digraph Q {\n";
    const uint32_t nv = 1u << q.dim();
    auto name = [&](uint32_t v) {
        std::string s;
        for (int j = 0; j < q.dim(); ++j) s += (v >> j & 1) ? '1' : '0';
        return s;
    };
    for (uint32_t v = 0; v < nv; ++v) os << "  \"" << name(v) << "\" [label=\"" << q.vertex(v).str() << "\"];\n";
    for (uint32_t v = 0; v < nv; ++v)
        for (int j = 0; j < q.dim(); ++j)
            if (!(v >> j & 1)) os << "  \"" << name(v) << "\" -> \"" << name(v | 1u << j) << "\";\n";
    os << "}\n";
    return os.str();
}

json bifact_json(const BifactCube& q) {
    json j;
    j["schema"] = 1;
    j["n"] = q.n;
    j["dim"] = q.dim();
    j["domain"] = q.domain().str();
    j["codomain"] = q.codomain().str();
    j["clauses"] = q.clause_chain;
    j["position_classes"] = q.position_classes();
    j["vertices"] = json::array();
    j["edges"] = json::array();
    for (uint32_t v = 0; v < (1u << q.dim()); ++v) {
        std::vector<int> bits;
        for (int k = 0; k < q.dim(); ++k) bits.push_back(v >> k & 1);
        j["vertices"].push_back({{"coords", bits}, {"composition", q.vertex(v).str()}});
        for (int k = 0; k < q.dim(); ++k)
            if (!(v >> k & 1)) j["edges"].push_back({v, v | 1u << k});
    }
    j["bc_cube"] = json::array();
    if (q.dim() >= 2)
        for (auto& [bv, w] : zigzag_vertices(q)) {
            std::vector<std::string> comps;
            for (auto& c : w.comps) comps.push_back(c.str());
            j["bc_cube"].push_back({{"vertex", bv}, {"weight", __builtin_popcount(bv)}, {"word", comps}, {"zigzag", w.str()}});
        }
    return j;
}

}  // namespace schober

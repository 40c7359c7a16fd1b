#include <sstream>
#include <stdexcept>

#include "schober/hecke.hpp"

namespace schober {

// ---- Laurent matrices ----

LaurentMatrix LaurentMatrix::identity(size_t n) {
    LaurentMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
    return m;
}

LaurentMatrix operator*(const LaurentMatrix& x, const LaurentMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shapes do not compose");
    LaurentMatrix r(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            const LaurentPoly& a = x(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < y.cols; ++j)
                if (!y(k, j).is_zero()) r(i, j) += a * y(k, j);
        }
    return r;
}

LaurentMatrix operator+(const LaurentMatrix& x, const LaurentMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shapes differ");
    LaurentMatrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

LaurentMatrix operator-(const LaurentMatrix& x, const LaurentMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shapes differ");
    LaurentMatrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

std::string LaurentMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows; ++i) {
        os << (i ? "; " : "");
        for (size_t j = 0; j < cols; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    }
    os << "]";
    return os.str();
}

json LaurentMatrix::to_json() const {
    json j = json::array();
    for (size_t i = 0; i < rows; ++i) {
        json row = json::array();
        for (size_t k = 0; k < cols; ++k) {
            const LaurentPoly& e = (*this)(i, k);
            if (e.is_zero()) row.push_back(0);
            else if (e.lo() == 0 && e.hi() == 0) row.push_back(e[0]);
            else row.push_back(e.to_bi().to_json());
        }
        j.push_back(row);
    }
    return j;
}

LaurentMatrix LaurentMatrix::from_json(const json& j, size_t rows, size_t cols) {
    if (!j.is_array() || j.size() != rows) throw std::invalid_argument("matrix row count does not match the ranks");
    LaurentMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix column count does not match the ranks");
        for (size_t k = 0; k < cols; ++k) m(i, k) = LaurentPoly::from_bi(BiLaurent::from_json(j[i][k]));
    }
    return m;
}

std::optional<LaurentPoly> lm_det(const LaurentMatrix& m0) {
    if (m0.rows != m0.cols) throw std::invalid_argument("determinant of a non-square matrix");
    const size_t n = m0.rows;
    if (n == 0) return LaurentPoly(1);
    LaurentMatrix m = m0;
    LaurentPoly prev(1);
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return LaurentPoly();
        if (p != k) {
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                auto v = (m(i, j) * m(k, k) - m(i, k) * m(k, j)).divide_exact(prev);
                if (!v) return std::nullopt;
                m(i, j) = *v;
            }
            m(i, k) = LaurentPoly();
        }
        prev = m(k, k);
    }
    return sign == 1 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

std::optional<LaurentMatrix> lm_inverse(const LaurentMatrix& m) {
    auto det = lm_det(m);
    if (!det || !det->is_unit()) return std::nullopt;
    const size_t n = m.rows;
    const LaurentPoly dinv = LaurentPoly::monomial(-det->lo(), (*det)[det->lo()]);
    LaurentMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            LaurentMatrix minor(n - 1, n - 1);
            for (size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            auto md = lm_det(minor);
            if (!md) return std::nullopt;
            inv(j, i) = ((i + j) % 2 ? -*md : *md) * dinv;
        }
    if (inv * m != LaurentMatrix::identity(n)) throw std::logic_error("lm_inverse: adjugate check failed");
    return inv;
}

// ---- perverse data ----

std::map<std::string, std::pair<std::string, std::string>> PerverseData::signature(const std::string& shape) {
    if (shape == "a1") return {{"f", {"A", "B"}}, {"f*", {"B", "A"}}};
    if (shape == "a1a1" || shape == "a2")
        return {{"i", {"A", "B"}}, {"i*", {"B", "A"}}, {"h", {"A", "C"}}, {"h*", {"C", "A"}},
                {"f", {"B", "D"}}, {"f*", {"D", "B"}}, {"g", {"C", "D"}}, {"g*", {"D", "C"}}};
    throw std::invalid_argument("unknown perverse shape: " + shape);
}

json PerverseData::to_json() const {
    json j{{"schema", 1}, {"shape", shape}, {"ranks", ranks}};
    j["maps"] = json::object();
    for (auto& [k, m] : maps) j["maps"][k] = m.to_json();
    return j;
}

PerverseData PerverseData::from_json(const json& j) {
    if (j.value("schema", 0) != 1) throw std::invalid_argument("perverse data: schema must be 1");
    PerverseData d;
    d.shape = j.at("shape").get<std::string>();
    auto sig = signature(d.shape);
    for (auto& [k, v] : j.at("ranks").items()) {
        int r = v.get<int>();
        if (r < 0) throw std::invalid_argument("perverse data: negative rank");
        d.ranks[k] = r;
    }
    for (auto& [name, dc] : sig) {
        for (auto* g : {&dc.first, &dc.second})
            if (!d.ranks.count(*g)) throw std::invalid_argument("perverse data: missing rank " + *g);
        if (!j.at("maps").contains(name)) throw std::invalid_argument("perverse data: missing map " + name);
        d.maps[name] = LaurentMatrix::from_json(j["maps"][name], d.ranks[dc.second], d.ranks[dc.first]);
    }
    return d;
}

namespace {

void check_shapes(const PerverseData& d) {
    for (auto& [name, dc] : PerverseData::signature(d.shape)) {
        auto it = d.maps.find(name);
        if (it == d.maps.end()) throw std::invalid_argument("missing map " + name);
        const size_t r = d.ranks.at(dc.second), c = d.ranks.at(dc.first);
        if (it->second.rows != r || it->second.cols != c) {
            std::ostringstream os;
            os << "map " << name << " has shape " << it->second.rows << "x" << it->second.cols << ", expected " << r << "x" << c;
            throw std::invalid_argument(os.str());
        }
    }
}

RelationResult equal_rel(std::string name, const LaurentMatrix& l, const LaurentMatrix& r) {
    bool ok = l == r;
    return {std::move(name), ok, ok ? "" : "lhs " + l.str() + " != rhs " + r.str()};
}

RelationResult invertible_rel(std::string name, const LaurentMatrix& m) {
    auto det = lm_det(m);
    bool ok = det && det->is_unit();
    return {std::move(name), ok, "det = " + (det ? det->str() : std::string("?"))};
}

}  // namespace

std::vector<RelationResult> check_a1(const PerverseData& d) {
    check_shapes(d);
    const auto& f = d.maps.at("f");
    const auto& fs = d.maps.at("f*");
    return {invertible_rel("t = ff* - id invertible", f * fs - LaurentMatrix::identity(d.ranks.at("B")))};
}

std::vector<RelationResult> check_a1a1(const PerverseData& d) {
    check_shapes(d);
    auto& M = d.maps;
    const auto I = LaurentMatrix::identity(d.ranks.at("D"));
    const auto t = M.at("f") * M.at("f*") - I, s = M.at("g") * M.at("g*") - I;
    return {equal_rel("(1) fi = gh", M.at("f") * M.at("i"), M.at("g") * M.at("h")),
            equal_rel("(1) i*f* = h*g*", M.at("i*") * M.at("f*"), M.at("h*") * M.at("g*")),
            invertible_rel("(2) t = ff* - id invertible", t),
            invertible_rel("(3) s = gg* - id invertible", s),
            equal_rel("(4) hi* = g*f", M.at("h") * M.at("i*"), M.at("g*") * M.at("f")),
            equal_rel("(5) ih* = f*g", M.at("i") * M.at("h*"), M.at("f*") * M.at("g")),
            equal_rel("ts = st", t * s, s * t)};
}

std::vector<RelationResult> check_a2(const PerverseData& d) {
    check_shapes(d);
    auto& M = d.maps;
    const auto& f = M.at("f"), &fs = M.at("f*"), &g = M.at("g"), &gs = M.at("g*");
    const auto& i = M.at("i"), &is = M.at("i*"), &h = M.at("h"), &hs = M.at("h*");
    const auto ID = LaurentMatrix::identity(d.ranks.at("D"));
    const auto IB = LaurentMatrix::identity(d.ranks.at("B")), IC = LaurentMatrix::identity(d.ranks.at("C"));
    const auto t = f * fs - ID, s = g * gs - ID;
    const auto a = h * is - gs * f, b = i * hs - fs * g;
    std::vector<RelationResult> out{
        equal_rel("(1) fi = gh", f * i, g * h),
        equal_rel("(1) i*f* = h*g*", is * fs, hs * gs),
        invertible_rel("(2) t = ff* - id invertible", t),
        invertible_rel("(3) s = gg* - id invertible", s),
        invertible_rel("(4) a = hi* - g*f invertible", a),
        invertible_rel("(5) b = ih* - f*g invertible", b),
        equal_rel("(6) hh* - g*ff*g - id + g*g = 0", h * hs - gs * f * fs * g - IC + gs * g, LaurentMatrix(IC.rows, IC.cols)),
        equal_rel("(7) ii* - f*gg*f - id + f*f = 0", i * is - fs * g * gs * f - IB + fs * f, LaurentMatrix(IB.rows, IB.cols)),
        equal_rel("tsf = ga", t * s * f, g * a),
        equal_rel("af* = g*ts", a * fs, gs * t * s),
        equal_rel("fb = stg", f * b, s * t * g),
        equal_rel("bg* = f*st", b * gs, fs * s * t),
        equal_rel("tst = sts", t * s * t, s * t * s),
    };
    auto sinv = lm_inverse(s), tinv = lm_inverse(t);
    if (sinv) out.push_back(equal_rel("hh* = id + af*s^-1g", h * hs, IC + a * fs * *sinv * g));
    else out.push_back({"hh* = id + af*s^-1g", false, "s is not invertible"});
    if (tinv) out.push_back(equal_rel("ii* = id + bg*t^-1f", i * is, IB + b * gs * *tinv * f));
    else out.push_back({"ii* = id + bg*t^-1f", false, "t is not invertible"});
    return out;
}

std::vector<RelationResult> check_perverse(const PerverseData& d) {
    if (d.shape == "a1") return check_a1(d);
    if (d.shape == "a1a1") return check_a1a1(d);
    if (d.shape == "a2") return check_a2(d);
    throw std::invalid_argument("unknown perverse shape: " + d.shape);
}

LaurentMatrix hom_action_matrix(const SchurMor& h) {
    if (!h.exact()) throw std::domain_error("hom_action_matrix: morphism has a denominator");
    const HeckeAlgebra& H = h.elt.algebra();
    auto reps = [&](const Composition& c) {
        // minimal length representatives of W_c \ S_n and the longest element of each coset
        std::vector<std::pair<int, int>> out;
        const int wc = H.index(longest_element(c));
        auto off = c.offsets();
        for (int w = 0; w < H.N; ++w) {
            bool minimal = true;
            for (size_t b = 0; b < c.size() && minimal; ++b)
                for (int i = off[b] + 1; i < off[b + 1]; ++i)
                    if (H.length[H.lmul[i][w]] < H.length[w]) {
                        minimal = false;
                        break;
                    }
            if (minimal) out.push_back({w, H.index(H.perms[wc] * H.perms[w])});
        }
        return out;
    };
    auto src = reps(h.dom), dst = reps(h.cod);
    LaurentMatrix m(dst.size(), src.size());
    for (size_t j = 0; j < src.size(); ++j) {
        HeckeElt y = h.elt;
        for (int s : reduced_word(H.perms[src[j].first])) y = y.mul_Ts_right(s);
        for (size_t i = 0; i < dst.size(); ++i) m(i, j) = y.coeff(dst[i].second);
    }
    return m;
}

PerverseData extract_perverse_data(int n) {
    PerverseData d;
    std::map<std::string, Composition> obj;
    if (n == 2) {
        d.shape = "a1";
        obj = {{"A", {2}}, {"B", {1, 1}}};
    } else if (n == 3) {
        d.shape = "a2";
        obj = {{"A", {3}}, {"B", {2, 1}}, {"C", {1, 2}}, {"D", {1, 1, 1}}};
    } else if (n == 4) {
        d.shape = "a1a1";
        obj = {{"A", {2, 2}}, {"B", {1, 1, 2}}, {"C", {2, 1, 1}}, {"D", {1, 1, 1, 1}}};
    } else {
        throw std::invalid_argument("extract_perverse_data: n must be 2, 3 or 4");
    }
    for (auto& [name, dc] : PerverseData::signature(d.shape)) {
        const Composition& from = obj.at(dc.first);
        const Composition& to = obj.at(dc.second);
        SchurMor cls = name.back() == '*' ? res_class(from, to) : ind_class(from, to);
        d.maps[name] = hom_action_matrix(cls);
    }
    for (auto& [name, dc] : PerverseData::signature(d.shape)) {
        d.ranks[dc.first] = static_cast<int>(d.maps[name].cols);
        d.ranks[dc.second] = static_cast<int>(d.maps[name].rows);
    }
    return d;
}

std::vector<Mutation> mutation_scan(const PerverseData& d) {
    std::vector<Mutation> out;
    for (auto& [name, m] : d.maps)
        for (size_t r = 0; r < m.rows; ++r)
            for (size_t c = 0; c < m.cols; ++c) {
                PerverseData e = d;
                e.maps[name](r, c) += LaurentPoly(1);
                Mutation mu{name, r, c, {}};
                for (auto& rel : check_perverse(e))
                    if (!rel.pass) mu.failed.push_back(rel.name);
                out.push_back(std::move(mu));
            }
    return out;
}

}  // namespace schober

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "schober/polydemazure.hpp"
#include "schober/ratmat.hpp"

namespace schober {

Poly elementary(int nvars, const std::vector<int>& vars, int k) {
    Poly r(nvars);
    const int m = static_cast<int>(vars.size());
    if (k < 0 || k > m) return r;
    std::vector<int> e(nvars, 0);
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (left == 0) {
            r.add_term(Poly::pack(e), 1);
            return;
        }
        for (int i = start; i <= m - left; ++i) {
            ++e[vars[i]];
            rec(i + 1, left - 1);
            --e[vars[i]];
        }
    };
    rec(0, k);
    return r;
}

Poly complete(int nvars, const std::vector<int>& vars, int k) {
    Poly r(nvars);
    if (k < 0) return r;
    const int m = static_cast<int>(vars.size());
    if (m == 0) return k == 0 ? Poly::constant(nvars, 1) : r;
    std::vector<int> e(nvars, 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == m - 1) {
            e[vars[idx]] += left;
            r.add_term(Poly::pack(e), 1);
            e[vars[idx]] -= left;
            return;
        }
        for (int x = 0; x <= left; ++x) {
            e[vars[idx]] += x;
            rec(idx + 1, left - x);
            e[vars[idx]] -= x;
        }
    };
    rec(0, k);
    return r;
}

Poly schur(int nvars, const std::vector<int>& vars, const std::vector<int>& lambda) {
    std::vector<int> lam;
    for (int x : lambda)
        if (x > 0) lam.push_back(x);
    for (size_t i = 1; i < lam.size(); ++i)
        if (lam[i] > lam[i - 1]) throw std::invalid_argument("schur: partition must be weakly decreasing");
    const int k = static_cast<int>(lam.size());
    if (k == 0) return Poly::constant(nvars, 1);
    if (k > static_cast<int>(vars.size())) return Poly(nvars);
    // Jacobi-Trudi: det(h_{lambda_i - i + j})
    std::vector<std::vector<Poly>> h(k, std::vector<Poly>(k, Poly(nvars)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) h[i][j] = complete(nvars, vars, lam[i] - i + j);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Poly r(nvars);
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) inv += perm[i] > perm[j];
        Poly term = Poly::constant(nvars, inv % 2 ? -1 : 1);
        for (int i = 0; i < k && !term.is_zero(); ++i) term *= h[i][perm[i]];
        r += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

bool is_orbit_representative(Poly::Mono m, const Composition& c) {
    auto off = c.offsets();
    for (size_t b = 0; b < c.size(); ++b)
        for (int i = off[b]; i + 1 < off[b + 1]; ++i)
            if (Poly::exponent(m, i) < Poly::exponent(m, i + 1)) return false;
    return true;
}

std::vector<Poly::Mono> orbit_representatives(const Composition& c, int qdeg) {
    std::vector<Poly::Mono> out;
    if (qdeg < 0 || qdeg % 2) return out;
    const int n = c.total();
    auto off = c.offsets();
    std::vector<int> e(n, 0), block_start(n, 0);
    for (size_t b = 0; b < c.size(); ++b)
        for (int i = off[b]; i < off[b + 1]; ++i) block_start[i] = off[b];
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            if (left == 0) out.push_back(Poly::pack(e));
            return;
        }
        int cap = (i == block_start[i]) ? left : std::min(left, e[i - 1]);
        for (int x = 0; x <= cap; ++x) {
            e[i] = x;
            rec(i + 1, left - x);
        }
        e[i] = 0;
    };
    rec(0, qdeg / 2);
    std::sort(out.begin(), out.end());
    return out;
}

InvariantRing::InvariantRing(Composition c) : c_(std::move(c)) {
    const int n = c_.total();
    auto off = c_.offsets();
    for (size_t b = 0; b < c_.size(); ++b) {
        std::vector<int> vars;
        for (int i = off[b]; i < off[b + 1]; ++i) vars.push_back(i);
        for (int k = 1; k <= c_[b]; ++k) {
            gens_.push_back(elementary(n, vars, k));
            gen_deg_.push_back(2 * k);
        }
    }
}

std::vector<Poly> InvariantRing::graded_basis(int qdeg) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(qdeg);
        if (it != cache_.end()) return it->second;
    }
    std::vector<Poly> out;
    const int n = nvars();
    if (qdeg >= 0 && qdeg % 2 == 0) {
        const int g = static_cast<int>(gens_.size());
        std::vector<int> e(g, 0);
        std::function<void(int, int)> rec = [&](int idx, int left) {
            if (idx == g) {
                if (left != 0) return;
                Poly p = Poly::constant(n, 1);
                for (int k = 0; k < g; ++k)
                    for (int r = 0; r < e[k]; ++r) p *= gens_[k];
                out.push_back(p);
                return;
            }
            for (int x = left / gen_deg_[idx]; x >= 0; --x) {
                e[idx] = x;
                rec(idx + 1, left - x * gen_deg_[idx]);
            }
            e[idx] = 0;
        };
        rec(0, qdeg);
    }
    std::lock_guard<std::mutex> lk(mu_);
    cache_.emplace(qdeg, out);
    return out;
}

HilbertSeries InvariantRing::hilbert() const { return HilbertSeries::free_poly(gen_deg_); }

InvariantRing invariant_ring(const Composition& c) { return InvariantRing(c); }
std::vector<Poly> graded_basis(const InvariantRing& r, int qdeg) { return r.graded_basis(qdeg); }
HilbertSeries hilbert(const InvariantRing& r) { return r.hilbert(); }

HilbertSeries hilbert(const Composition& c) {
    std::vector<int> d;
    for (int p : c.parts)
        for (int k = 1; k <= p; ++k) d.push_back(2 * k);
    return HilbertSeries::free_poly(d);
}

namespace {

std::vector<std::vector<int>> box_partitions(int rows, int cols) {
    std::vector<std::vector<int>> out;
    std::vector<int> lam;
    std::function<void(int, int)> rec = [&](int row, int maxp) {
        if (row == rows) {
            out.push_back(lam);
            return;
        }
        for (int p = 0; p <= maxp; ++p) {
            lam.push_back(p);
            rec(row + 1, p);
            lam.pop_back();
        }
    };
    rec(0, cols);
    std::stable_sort(out.begin(), out.end(), [](auto& x, auto& y) {
        return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
    });
    return out;
}

}  // namespace

DualBases dual_bases(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("dual_bases: a, b >= 1");
    const int n = a + b;
    const Composition I{a, b}, J{n};
    std::vector<int> first(a);
    std::iota(first.begin(), first.end(), 0);
    DualBases db;
    for (auto& lam : box_partitions(a, b)) db.basis.push_back(schur(n, first, lam));
    InvariantRing R(I);
    const int top = 2 * a * b;
    for (size_t i = 0; i < db.basis.size(); ++i) {
        const int di = db.basis[i].degree();
        auto cand = R.graded_basis(top - di);
        // equations: for every j, the coefficients of d(b_j y) must equal delta_ij
        std::vector<std::vector<Poly>> images(db.basis.size());
        std::map<std::pair<size_t, Poly::Mono>, size_t> row_of;
        for (size_t j = 0; j < db.basis.size(); ++j) {
            if (db.basis[j].degree() < di) continue;
            for (auto& g : cand) {
                images[j].push_back(frobenius_trace(I, J, db.basis[j] * g));
                for (auto& kv : images[j].back().terms()) row_of.try_emplace({j, kv.first}, 0);
            }
            if (j == i) row_of.try_emplace({j, Poly::Mono(0)}, 0);
        }
        size_t r = 0;
        for (auto& kv : row_of) kv.second = r++;
        RatMatrix A(r, cand.size());
        std::vector<Rational> rhs(r);
        for (size_t j = 0; j < db.basis.size(); ++j) {
            if (images[j].empty()) continue;
            for (size_t k = 0; k < cand.size(); ++k)
                for (auto& kv : images[j][k].terms()) A(row_of.at({j, kv.first}), k) = kv.second;
        }
        rhs[row_of.at({i, Poly::Mono(0)})] = 1;
        auto x = A.solve(rhs);
        if (!x) {
            std::ostringstream os;
            os << "dual_bases(" << a << "," << b << "): singular trace pairing at basis element " << i;
            throw std::logic_error(os.str());
        }
        Poly y(n);
        for (size_t k = 0; k < cand.size(); ++k) y += cand[k] * (*x)[k];
        db.dual.push_back(y);
    }
    for (size_t i = 0; i < db.basis.size(); ++i)
        for (size_t j = 0; j < db.basis.size(); ++j)
            if (frobenius_trace(I, J, db.basis[i] * db.dual[j]) != Poly::constant(n, i == j ? 1 : 0))
                throw std::logic_error("dual_bases: pairing is not the identity");
    return db;
}

DualBases frobenius_bases(const Composition& P, const Composition& V) {
    if (!P.refines(V)) throw std::invalid_argument("frobenius_bases: P must refine V");
    const int n = P.total();
    DualBases acc{{Poly::constant(n, 1)}, {Poly::constant(n, 1)}};
    auto poff = P.offsets();
    size_t pi = 0;
    int pos = 0;
    for (int block : V.parts) {
        const int end = pos + block;
        // parts of P inside this block
        std::vector<int> sub;
        while (pi < P.size() && poff[pi] < end) sub.push_back(P[pi++]);
        int start = pos;
        for (size_t s = 0; s + 1 < sub.size(); ++s) {
            int rest = end - start - sub[s];
            DualBases step = dual_bases(sub[s], rest);
            DualBases next;
            for (size_t x = 0; x < acc.basis.size(); ++x)
                for (size_t y = 0; y < step.basis.size(); ++y) {
                    next.basis.push_back(acc.basis[x] * step.basis[y].embed(n, start));
                    next.dual.push_back(acc.dual[x] * step.dual[y].embed(n, start));
                }
            acc = std::move(next);
            start += sub[s];
        }
        pos = end;
    }
    return acc;
}

}  // namespace schober

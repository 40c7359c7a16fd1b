#pragma once

#include <map>
#include <vector>

#include "schober/bimodcx.hpp"

namespace schober::detail {

// Demazure trace R_I -> R_J with cached reduced word (no invariance check)
Poly trace(const Composition& I, const Composition& J, const Poly& p);
// Frobenius dual bases of R_P over R_V, cached; {1},{1} when P == V
const DualBases& fbases(const Composition& P, const Composition& V);

// aligned path -> reduced index of each aligned vertex
std::vector<size_t> align_index(const std::vector<Composition>& aligned);

// sparse rational row reduction
using SparseRow = std::map<size_t, Rational>;
class SparseSolver {
public:
    explicit SparseSolver(size_t ncols) : n_(ncols) {}
    void add_row(SparseRow r);
    size_t rank() const { return piv_.size(); }
    std::vector<std::vector<Rational>> nullspace() const;

private:
    size_t n_;
    std::map<size_t, SparseRow> piv_;
};

// coordinates of a polynomial product a*b accumulated into row coefficients
inline Poly::Mono mono_mul(Poly::Mono a, Poly::Mono b) { return a + b; }

}  // namespace schober::detail

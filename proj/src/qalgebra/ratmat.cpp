#include "schober/ratmat.hpp"

#include <stdexcept>

namespace schober {

RatMatrix RatMatrix::identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("RatMatrix shape mismatch in product");
    RatMatrix z(x.r_, y.c_);
    for (size_t i = 0; i < x.r_; ++i)
        for (size_t k = 0; k < x.c_; ++k) {
            const Rational& a = x(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < y.c_; ++j)
                if (y(k, j) != 0) z(i, j) += a * y(k, j);
        }
    return z;
}

RatMatrix operator+(const RatMatrix& x, const RatMatrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("RatMatrix shape mismatch in sum");
    RatMatrix z = x;
    for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
    return z;
}

RatMatrix operator-(const RatMatrix& x, const RatMatrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("RatMatrix shape mismatch in difference");
    RatMatrix z = x;
    for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
    return z;
}

bool RatMatrix::is_zero() const {
    for (auto& x : a_)
        if (x != 0) return false;
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<size_t> RatMatrix::rref() {
    std::vector<size_t> piv;
    size_t row = 0;
    for (size_t col = 0; col < c_ && row < r_; ++col) {
        size_t p = row;
        while (p < r_ && (*this)(p, col) == 0) ++p;
        if (p == r_) continue;
        if (p != row)
            for (size_t j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
        Rational inv = 1 / (*this)(row, col);
        for (size_t j = col; j < c_; ++j) (*this)(row, j) *= inv;
        for (size_t i = 0; i < r_; ++i) {
            if (i == row || (*this)(i, col) == 0) continue;
            Rational f = (*this)(i, col);
            for (size_t j = col; j < c_; ++j)
                if ((*this)(row, j) != 0) (*this)(i, j) -= f * (*this)(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

size_t RatMatrix::rank() const {
    RatMatrix m = *this;
    return m.rref().size();
}

Rational RatMatrix::det() const {
    if (r_ != c_) throw std::invalid_argument("det of non-square matrix");
    RatMatrix m = *this;
    Rational d = 1;
    for (size_t col = 0; col < c_; ++col) {
        size_t p = col;
        while (p < r_ && m(p, col) == 0) ++p;
        if (p == r_) return 0;
        if (p != col) {
            for (size_t j = 0; j < c_; ++j) std::swap(m(p, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        for (size_t i = col + 1; i < r_; ++i) {
            if (m(i, col) == 0) continue;
            Rational f = m(i, col) / m(col, col);
            for (size_t j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
    if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
    RatMatrix aug(r_, 2 * c_);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, c_ + i) = 1;
    }
    auto piv = aug.rref();
    if (piv.size() < r_ || piv.back() >= c_) return std::nullopt;
    RatMatrix inv(r_, c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) inv(i, j) = aug(i, c_ + j);
    return inv;
}

std::optional<std::vector<Rational>> RatMatrix::solve(const std::vector<Rational>& b) const {
    if (b.size() != r_) throw std::invalid_argument("solve: rhs size mismatch");
    RatMatrix aug(r_, c_ + 1);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, c_) = b[i];
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() == c_) return std::nullopt;
    std::vector<Rational> x(c_);
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, c_);
    return x;
}

std::vector<std::vector<Rational>> RatMatrix::nullspace() const {
    RatMatrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(c_, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<Rational>> out;
    for (size_t f = 0; f < c_; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(c_);
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace schober

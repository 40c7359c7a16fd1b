#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schober/qalgebra.hpp"

namespace schober {

// Dense matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static RatMatrix identity(size_t n);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Rational& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
    friend RatMatrix operator+(const RatMatrix& x, const RatMatrix& y);
    friend RatMatrix operator-(const RatMatrix& x, const RatMatrix& y);
    bool operator==(const RatMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool is_zero() const;
    RatMatrix transpose() const;

    // reduced row echelon form in place; returns pivot columns
    std::vector<size_t> rref();
    size_t rank() const;
    Rational det() const;
    std::optional<RatMatrix> inverse() const;
    // one solution of A x = b, if any
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;
    // basis of {x : A x = 0}
    std::vector<std::vector<Rational>> nullspace() const;

private:
    size_t r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

}  // namespace schober

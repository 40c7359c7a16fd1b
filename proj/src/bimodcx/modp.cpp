#include <utility>

#include "schober/bimodcx.hpp"

namespace schober::modp {

#if SCHOBER_HAVE_AVX2
void axpy_avx2(uint32_t* a, const uint32_t* b, uint32_t f, size_t n);
#endif

namespace {

uint32_t mulmod(uint32_t a, uint32_t b) { return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % P); }

uint32_t powmod(uint32_t a, uint32_t e) {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

void axpy_scalar(uint32_t* a, const uint32_t* b, uint32_t f, size_t n) {
    for (size_t j = 0; j < n; ++j) a[j] = static_cast<uint32_t>((a[j] + static_cast<uint64_t>(f) * b[j]) % P);
}

}  // namespace

bool avx2_available() {
#if SCHOBER_HAVE_AVX2 && (defined(__x86_64__) || defined(__i386__))
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

void axpy(uint32_t* a, const uint32_t* b, uint32_t f, size_t n, Kernel k) {
#if SCHOBER_HAVE_AVX2
    if (k != Kernel::Scalar && avx2_available()) return axpy_avx2(a, b, f, n);
#endif
    (void)k;
    axpy_scalar(a, b, f, n);
}

size_t rank(std::vector<uint32_t>& a, size_t rows, size_t cols, Kernel k) {
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (size_t j = c; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
        const uint32_t inv = powmod(a[r * cols + c], P - 2);
        for (size_t j = c; j < cols; ++j) a[r * cols + j] = mulmod(a[r * cols + j], inv);
        for (size_t i = r + 1; i < rows; ++i) {
            const uint32_t x = a[i * cols + c];
            if (!x) continue;
            axpy(&a[i * cols + c], &a[r * cols + c], P - x, cols - c, k);
        }
        ++r;
    }
    return r;
}

std::optional<uint32_t> reduce(const Rational& x) {
    mpz_class num = x.get_num() % P, den = x.get_den() % P;
    if (num < 0) num += P;
    if (den == 0) return std::nullopt;
    const uint32_t n = static_cast<uint32_t>(num.get_ui()), d = static_cast<uint32_t>(den.get_ui());
    return mulmod(n, powmod(d, P - 2));
}

}  // namespace schober::modp

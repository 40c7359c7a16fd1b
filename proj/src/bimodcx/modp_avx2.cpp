#include <immintrin.h>

#include <cstddef>
#include <cstdint>

namespace schober::modp {

namespace {

constexpr uint64_t kP = 2147483647u;

// x < 2^63 -> x mod p, lanes are 64-bit
inline __m256i reduce64(__m256i x) {
    const __m256i p = _mm256_set1_epi64x(kP);
    x = _mm256_add_epi64(_mm256_and_si256(x, p), _mm256_srli_epi64(x, 31));
    x = _mm256_add_epi64(_mm256_and_si256(x, p), _mm256_srli_epi64(x, 31));
    const __m256i ge = _mm256_cmpgt_epi64(x, _mm256_set1_epi64x(kP - 1));
    return _mm256_sub_epi64(x, _mm256_and_si256(ge, p));
}

}  // namespace

void axpy_avx2(uint32_t* a, const uint32_t* b, uint32_t f, size_t n) {
    const __m256i vf = _mm256_set1_epi64x(f);
    const __m256i lo32 = _mm256_set1_epi64x(0xffffffffu);
    size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + j));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
        __m256i pe = _mm256_add_epi64(_mm256_mul_epu32(vb, vf), _mm256_and_si256(va, lo32));
        __m256i po = _mm256_add_epi64(_mm256_mul_epu32(_mm256_srli_epi64(vb, 32), vf), _mm256_srli_epi64(va, 32));
        pe = reduce64(pe);
        po = reduce64(po);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + j), _mm256_or_si256(pe, _mm256_slli_epi64(po, 32)));
    }
    for (; j < n; ++j) a[j] = static_cast<uint32_t>((a[j] + static_cast<uint64_t>(f) * b[j]) % kP);
}

}  // namespace schober::modp

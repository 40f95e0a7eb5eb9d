// AVX2 variants of the pairing kernels. This file is compiled with -mavx2;
// nothing here may run unless avx2_supported() returned true.
#include "latk/simd.hpp"

#include <immintrin.h>

namespace latk::simd {

namespace {

// Horizontal sum of 4 int64 lanes.
inline int64_t hsum_epi64(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return _mm_extract_epi64(s, 0) + _mm_extract_epi64(s, 1);
}

int64_t dot_avx2(const int32_t* x, const int32_t* y, size_t k) {
    __m256i acc = _mm256_setzero_si256();
    size_t t = 0;
    for (; t + 8 <= k; t += 8) {
        __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + t));
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + t));
        // 32x32 -> 64 products of the even lanes, then of the odd lanes;
        // mul_epi32 sign-extends the low dword of each qword, so odd lanes
        // are moved down with a shuffle (a logical shift would lose signs).
        __m256i even = _mm256_mul_epi32(xv, yv);
        __m256i xodd = _mm256_shuffle_epi32(xv, 0xF5);
        __m256i yodd = _mm256_shuffle_epi32(yv, 0xF5);
        __m256i odd = _mm256_mul_epi32(xodd, yodd);
        acc = _mm256_add_epi64(acc, even);
        acc = _mm256_add_epi64(acc, odd);
    }
    int64_t s = hsum_epi64(acc);
    for (; t < k; ++t) s += static_cast<int64_t>(x[t]) * y[t];
    return s;
}

void pairings_avx2(const int32_t* a, size_t m, const int32_t* b, size_t n,
                   size_t k, int64_t* c) {
    for (size_t i = 0; i < m; ++i) {
        const int32_t* ai = a + i * k;
        for (size_t j = 0; j < n; ++j) c[i * n + j] = dot_avx2(ai, b + j * k, k);
    }
}

}  // namespace

const Kernels& avx2_kernels() {
    static const Kernels k{pairings_avx2, dot_avx2, "avx2"};
    return k;
}

}  // namespace latk::simd

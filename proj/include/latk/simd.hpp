#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace latk::simd {

// Batched int32 pairing kernels behind runtime CPU dispatch. These back the
// hot inner loops of root-system bookkeeping: Gram pairing matrices for root
// lists and orthogonality filters during embedding searches. Inputs are
// int32 row-major matrices; accumulation is int64 so no intermediate can
// wrap for the coordinate magnitudes this project produces (callers assert
// |entry| <= kEntryBound).
constexpr int32_t kEntryBound = 1 << 20;

struct Kernels {
    // c[i*n + j] = sum_k a[i*k + t] * b[j*k + t]   (i < m, j < n, t < k)
    void (*pairings)(const int32_t* a, size_t m, const int32_t* b, size_t n,
                     size_t k, int64_t* c);
    int64_t (*dot)(const int32_t* x, const int32_t* y, size_t k);
    const char* name;
};

const Kernels& scalar_kernels();
const Kernels& avx2_kernels();      // valid only if avx2_supported()
bool avx2_supported();

// Kernels picked at first use: AVX2 when the CPU has it, scalar otherwise.
const Kernels& active();

// Test hook: force a particular implementation ("scalar", "avx2", "auto").
void force(const std::string& name);

// row-major helpers on top of the raw kernels
struct I32Mat {
    size_t rows = 0, cols = 0;
    std::vector<int32_t> a;
    I32Mat() = default;
    I32Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    int32_t& operator()(size_t i, size_t j) { return a[i * cols + j]; }
    int32_t operator()(size_t i, size_t j) const { return a[i * cols + j]; }
};

// c = x * y^T with int64 accumulation
std::vector<int64_t> pairing_matrix(const I32Mat& x, const I32Mat& y);

}  // namespace latk::simd

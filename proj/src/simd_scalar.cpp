#include "latk/simd.hpp"

namespace latk::simd {

namespace {

int64_t dot_scalar(const int32_t* x, const int32_t* y, size_t k) {
    int64_t s = 0;
    for (size_t t = 0; t < k; ++t) s += static_cast<int64_t>(x[t]) * y[t];
    return s;
}

void pairings_scalar(const int32_t* a, size_t m, const int32_t* b, size_t n,
                     size_t k, int64_t* c) {
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) c[i * n + j] = dot_scalar(a + i * k, b + j * k, k);
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{pairings_scalar, dot_scalar, "scalar"};
    return k;
}

}  // namespace latk::simd

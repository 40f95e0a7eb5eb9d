#include "latk/simd.hpp"

#include <stdexcept>

namespace latk::simd {

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {
const Kernels* forced = nullptr;
}

const Kernels& active() {
    if (forced) return *forced;
    static const Kernels& picked = avx2_supported() ? avx2_kernels() : scalar_kernels();
    return picked;
}

void force(const std::string& name) {
    if (name == "auto") {
        forced = nullptr;
    } else if (name == "scalar") {
        forced = &scalar_kernels();
    } else if (name == "avx2") {
        if (!avx2_supported()) throw std::runtime_error("simd::force: avx2 not supported here");
        forced = &avx2_kernels();
    } else {
        throw std::runtime_error("simd::force: unknown kernel set " + name);
    }
}

std::vector<int64_t> pairing_matrix(const I32Mat& x, const I32Mat& y) {
    if (x.cols != y.cols) throw std::runtime_error("pairing_matrix: dimension mismatch");
    std::vector<int64_t> c(x.rows * y.rows);
    if (x.rows && y.rows)
        active().pairings(x.a.data(), x.rows, y.a.data(), y.rows, x.cols, c.data());
    return c;
}

}  // namespace latk::simd

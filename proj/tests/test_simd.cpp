#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latk/simd.hpp"

using namespace latk::simd;

TEST_CASE("scalar and avx2 pairing kernels agree on random data") {
    if (!avx2_supported()) {
        MESSAGE("avx2 not available; dispatch falls back to scalar");
        return;
    }
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int32_t> d(-2000, 2000);
    for (int iter = 0; iter < 50; ++iter) {
        size_t m = 1 + rng() % 17, n = 1 + rng() % 17, k = 1 + rng() % 33;
        I32Mat a(m, k), b(n, k);
        for (auto& x : a.a) x = d(rng);
        for (auto& x : b.a) x = d(rng);
        std::vector<int64_t> cs(m * n), cv(m * n);
        scalar_kernels().pairings(a.a.data(), m, b.a.data(), n, k, cs.data());
        avx2_kernels().pairings(a.a.data(), m, b.a.data(), n, k, cv.data());
        CHECK(cs == cv);
        for (int j = 0; j < 8; ++j) {
            size_t i1 = rng() % m, i2 = rng() % n;
            CHECK(scalar_kernels().dot(&a.a[i1 * k], &b.a[i2 * k], k) ==
                  avx2_kernels().dot(&a.a[i1 * k], &b.a[i2 * k], k));
        }
    }
}

TEST_CASE("kernels handle extreme magnitudes without wrapping") {
    std::vector<int32_t> x(24, kEntryBound), y(24, -kEntryBound);
    int64_t expect = -24LL * kEntryBound * kEntryBound;
    CHECK(scalar_kernels().dot(x.data(), y.data(), 24) == expect);
    if (avx2_supported()) CHECK(avx2_kernels().dot(x.data(), y.data(), 24) == expect);
}

TEST_CASE("dispatch honors force()") {
    force("scalar");
    CHECK(std::string(active().name) == "scalar");
    force("auto");
    if (avx2_supported()) CHECK(std::string(active().name) == "avx2");
}

TEST_CASE("pairing_matrix helper") {
    I32Mat a(2, 3), b(2, 3);
    int32_t va[] = {1, 2, 3, -1, 0, 2};
    int32_t vb[] = {2, 2, 2, 5, -5, 1};
    std::copy(va, va + 6, a.a.begin());
    std::copy(vb, vb + 6, b.a.begin());
    auto c = pairing_matrix(a, b);
    CHECK(c == std::vector<int64_t>{12, -2, 2, -3});
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latk/exact.hpp"

using namespace latk;

namespace {

// independent determinant oracle: cofactor expansion
Int det_cofactor(const IntMat& m) {
    const int n = m.rows;
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int s = 0;
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMat sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(i - 1, cc++) = m(i, c);
            }
        }
        Int t = m(0, j) * det_cofactor(sub);
        s += (j % 2 == 0) ? t : -t;
    }
    return s;
}

IntMat random_mat(std::mt19937& rng, int r, int c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
    auto id3 = IntMat::identity(3);
    auto s = smith_normal_form(id3);
    CHECK(s.d == id3);
    CHECK(s.u == id3);
    CHECK(s.v == id3);

    IntMat diag24(2, 2);
    diag24(0, 0) = 2;
    diag24(1, 1) = 4;
    s = smith_normal_form(diag24);
    CHECK(s.d == diag24);
    CHECK(s.u == IntMat::identity(2));
    CHECK(s.v == IntMat::identity(2));

    // hand row/column reduction gives diag(1,3)
    IntMat m = IntMat::from_rows({{Int(2), Int(1)}, {Int(1), Int(2)}});
    s = smith_normal_form(m);
    CHECK(s.d(0, 0) == 1);
    CHECK(s.d(1, 1) == 3);
    CHECK(s.d(0, 1) == 0);
    CHECK(s.d(1, 0) == 0);
    CHECK(s.u * m * s.v == s.d);
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 60; ++iter) {
        int r = 1 + static_cast<int>(rng() % 5);
        int c = 1 + static_cast<int>(rng() % 5);
        IntMat m = random_mat(rng, r, c, -9, 9);
        auto s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(abs(det_cofactor(s.u)) == 1);
        CHECK(abs(det_cofactor(s.v)) == 1);
        // diagonal, nonnegative, divisibility chain
        for (int i = 0; i < s.d.rows; ++i)
            for (int j = 0; j < s.d.cols; ++j)
                if (i != j) CHECK(s.d(i, j) == 0);
        auto f = s.invariant_factors();
        for (size_t i = 0; i + 1 < f.size(); ++i) {
            CHECK(f[i] > 0);
            CHECK(f[i + 1] % f[i] == 0);
        }
        if (r == c && s.rank == r) {
            Int prod = 1;
            for (const auto& d : f) prod *= d;
            CHECK(prod == abs(det_cofactor(m)));
        }
    }
}

TEST_CASE("determinants: pinned examples and cofactor oracle") {
    CHECK(det_int(IntMat::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}})) == -1);
    CHECK(det_int(IntMat::from_rows({{Int(-2)}})) == -2);

    // negated E8 Cartan matrix has determinant 1
    IntMat e8(8, 8);
    for (int i = 0; i < 8; ++i) e8(i, i) = -2;
    auto edge = [&](int i, int j) { e8(i, j) = 1; e8(j, i) = 1; };
    edge(0, 2); edge(2, 3); edge(1, 3); edge(3, 4); edge(4, 5); edge(5, 6); edge(6, 7);
    CHECK(det_int(e8) == 1);
    CHECK(det_cofactor(e8) == 1);

    std::mt19937 rng(777);
    for (int iter = 0; iter < 80; ++iter) {
        IntMat m = random_mat(rng, 4, 4, -9, 9);
        CHECK(det_int(m) == det_cofactor(m));
    }

    // rational determinant with mixed denominators
    RatMat q(2, 2);
    q(0, 0) = make_rat(1, 2);
    q(0, 1) = make_rat(1, 3);
    q(1, 0) = make_rat(1, 5);
    q(1, 1) = make_rat(1, 7);
    CHECK(det_rat(q) == make_rat(1, 14) - make_rat(1, 15));
}

TEST_CASE("hermite normal form is canonical and spans the same lattice") {
    std::mt19937 rng(999);
    for (int iter = 0; iter < 40; ++iter) {
        int r = 1 + static_cast<int>(rng() % 4);
        int c = 1 + static_cast<int>(rng() % 4);
        IntMat m = random_mat(rng, r, c, -6, 6);
        IntMat h = hnf_rows(m);
        // every original row lies in the HNF row lattice
        for (int i = 0; i < r; ++i) {
            auto sol = solve_left_int(h, m.row(i));
            CHECK(sol.has_value());
        }
        CHECK(hnf_rows(h) == h);
    }
}

TEST_CASE("kernel_and_solve pinned examples") {
    // identity, b = e1
    auto sol = kernel_and_solve(IntMat::identity(3), {Int(1), Int(0), Int(0)});
    CHECK(sol.int_solvable);
    CHECK(sol.int_particular == IntVec{Int(1), Int(0), Int(0)});
    CHECK(sol.int_kernel.rows == 0);

    // parity obstruction: 2x = 1
    sol = kernel_and_solve(IntMat::from_rows({{Int(2)}}), {Int(1)});
    CHECK(sol.rat_solvable);
    CHECK_FALSE(sol.int_solvable);
    CHECK(sol.rat_particular[0] == make_rat(1, 2));

    // kernel of [1 1]
    sol = kernel_and_solve(IntMat::from_rows({{Int(1), Int(1)}}), {Int(0)});
    CHECK(sol.int_solvable);
    REQUIRE(sol.int_kernel.rows == 1);
    CHECK(sol.int_kernel(0, 0) * sol.int_kernel(0, 1) == -1);
}

TEST_CASE("integer kernel is saturated") {
    IntMat m = IntMat::from_rows({{Int(2), Int(4), Int(6)}});
    IntMat k = kernel_int(m);
    REQUIRE(k.rows == 2);
    // (1,1,-1) is in the rational kernel and must be an integer combination
    CHECK(solve_left_int(k, {Int(1), Int(1), Int(-1)}).has_value());
}

TEST_CASE("inverse and rational kernel") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 20; ++iter) {
        IntMat m = random_mat(rng, 4, 4, -5, 5);
        if (det_cofactor(m) == 0) continue;
        RatMat inv = inverse(to_rat(m));
        CHECK(to_rat(m) * inv == to_rat(IntMat::identity(4)));
    }
    RatMat k = kernel_rat(to_rat(IntMat::from_rows({{Int(1), Int(2), Int(3)}})));
    CHECK(k.rows == 2);
}

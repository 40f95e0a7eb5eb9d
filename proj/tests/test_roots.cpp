#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "latk/roots.hpp"

using namespace latk;

namespace {

// box-search oracle: all x in [-box, box]^n with x G x^T = norm
std::vector<IntVec> box_oracle(const Lattice& l, const Rat& norm, int box) {
    std::vector<IntVec> out;
    IntVec x(l.rank, Int(-box));
    while (true) {
        if (l.norm(x) == norm) out.push_back(x);
        int k = 0;
        while (k < l.rank) {
            x[k] += 1;
            if (x[k] <= box) break;
            x[k] = -box;
            ++k;
        }
        if (k == l.rank) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("ADEType canonical strings") {
    ADEType t;
    CHECK(t.str() == "0");
    t.add('A', 9);
    t.add('A', 1);
    t.add('A', 1);
    CHECK(t.str() == "2A1 + A9");
    CHECK(ADEType::parse("2A1 + A9") == t);
    CHECK(ADEType::parse("0") == ADEType{});
    ADEType u = ADEType::parse("A3 + A11 + E6");
    CHECK(u.str() == "A3 + A11 + E6");
    CHECK(u.rank() == 20);
}

TEST_CASE("vectors_of_norm: pinned counts") {
    CHECK(vectors_of_norm(root_lattice('A', 1), Rat(-2)).size() == 2);
    CHECK(vectors_of_norm(root_lattice('D', 4), Rat(-2)).size() == 24);
    CHECK(vectors_of_norm(root_lattice('E', 6), Rat(-2)).size() == 72);
    CHECK(vectors_of_norm(root_lattice('E', 8), Rat(-2)).size() == 240);
    // D4 dual has 24 vectors of norm -1
    CHECK(vectors_of_norm(dual(root_lattice('D', 4)), Rat(-1)).size() == 24);
}

TEST_CASE("enumeration agrees with the box oracle and is negation closed") {
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 25; ++iter) {
        // random negative definite lattice: start definite, twist unimodularly
        auto base = iter % 2 ? root_lattice('A', 3) : root_lattice('D', 4);
        IntMat t = IntMat::identity(base.rank);
        for (int k = 0; k < 4; ++k) {
            int i = rng() % base.rank, j = rng() % base.rank;
            if (i == j) continue;
            Int coeff = rng() % 2 ? 1 : -1;
            for (int c = 0; c < base.rank; ++c) t(i, c) += coeff * t(j, c);
        }
        RatMat tr = to_rat(t);
        auto l = make_lattice(tr * base.gram * tr.transpose());
        Rat target = iter % 3 == 0 ? Rat(-4) : Rat(-2);
        auto got = vectors_of_norm(l, target);
        int box = 1;
        for (const auto& v : got)
            for (const auto& c : v) if (abs(c) > box) box = static_cast<int>(to_long(abs(c)));
        auto expect = box_oracle(l, target, box + 1);
        CHECK(got == expect);
        std::set<IntVec> s(got.begin(), got.end());
        for (auto v : got) {
            for (auto& c : v) c = -c;
            CHECK(s.count(v) == 1);
        }
    }
}

TEST_CASE("enumeration count is stable under unimodular base change") {
    std::mt19937 rng(555);
    auto e6 = root_lattice('E', 6);
    for (int iter = 0; iter < 5; ++iter) {
        IntMat t = IntMat::identity(6);
        for (int k = 0; k < 8; ++k) {
            int i = rng() % 6, j = rng() % 6;
            if (i == j) continue;
            Int coeff = rng() % 2 ? 1 : -1;
            for (int c = 0; c < 6; ++c) t(i, c) += coeff * t(j, c);
        }
        RatMat tr = to_rat(t);
        auto l = make_lattice(tr * e6.gram * tr.transpose());
        CHECK(vectors_of_norm(l, Rat(-2)).size() == 72);
    }
}

TEST_CASE("ade classification round-trips every root lattice of rank <= 8") {
    std::vector<std::pair<char, int>> all = {
        {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'A', 6}, {'A', 7}, {'A', 8},
        {'D', 4}, {'D', 5}, {'D', 6}, {'D', 7}, {'D', 8},
        {'E', 6}, {'E', 7}, {'E', 8}};
    for (auto [fam, idx] : all) {
        auto l = root_lattice(fam, idx);
        auto [sub, type] = root_sublattice(l);
        ADEType expect;
        expect.add(fam, idx);
        CHECK(type == expect);
        CHECK(sub.basis.rows == idx);
    }
}

TEST_CASE("ade classification of direct sums and rescales") {
    auto l = direct_sum(root_lattice('A', 5), root_lattice('D', 4));
    auto [sub, type] = root_sublattice(l);
    CHECK(type.str() == "A5 + D4");
    CHECK(sub.basis.rows == 9);

    // A1(2) is rootless
    auto a12 = rescale(root_lattice('A', 1), Rat(2));
    auto [sub2, type2] = root_sublattice(a12);
    CHECK(type2.str() == "0");
    CHECK(sub2.basis.rows == 0);
}

TEST_CASE("dual coverage of D4 and A1") {
    auto cov = dual_coverage(root_lattice('D', 4), Rat(-1));
    // 24 vectors split 8+8+8 over the three nonzero classes of (Z/2)^2
    REQUIRE(cov.size() == 3);
    Int total = 0;
    for (const auto& [cls, count] : cov) {
        CHECK(count == 8);
        CHECK(cls != IntVec{Int(0), Int(0)});
        total += count;
    }
    CHECK(total == 24);

    auto cov1 = dual_coverage(root_lattice('A', 1), make_rat(-1, 2));
    REQUIRE(cov1.size() == 1);
    CHECK(cov1.begin()->second == 2);
}

TEST_CASE("dual coverage of 2A2 hits every class with q = -4/3") {
    auto t = direct_sum(root_lattice('A', 2), root_lattice('A', 2));
    auto cov = dual_coverage(t, make_rat(-4, 3));
    auto df = discriminant_form(t);
    int expected_classes = 0;
    for (const auto& cls : df.all_classes()) {
        if (df.q_of(cls) == mod_into(make_rat(-4, 3), Rat(2))) {
            ++expected_classes;
            auto it = cov.find(cls);
            REQUIRE(it != cov.end());
            CHECK(it->second >= 1);
        }
    }
    CHECK(expected_classes > 0);
    CHECK(static_cast<int>(cov.size()) == expected_classes);
}

TEST_CASE("lll preserves the lattice") {
    std::mt19937 rng(9);
    for (int iter = 0; iter < 10; ++iter) {
        auto base = root_lattice('D', 5);
        IntMat t = IntMat::identity(5);
        for (int k = 0; k < 10; ++k) {
            int i = rng() % 5, j = rng() % 5;
            if (i == j) continue;
            Int coeff = Int(1 + rng() % 4);
            for (int c = 0; c < 5; ++c) t(i, c) += coeff * t(j, c);
        }
        RatMat tr = to_rat(t);
        RatMat skew = tr * base.gram * tr.transpose();
        for (auto& x : skew.a) x = -x;
        IntMat u = lll_reduce_gram(skew);
        CHECK(abs(det_int(u)) == 1);
        RatMat ur = to_rat(u);
        RatMat red = ur * skew * ur.transpose();
        CHECK(det_rat(red) == det_rat(skew));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latk/niemeier.hpp"

using namespace latk;

TEST_CASE("catalog covers exactly the 22 table root types, all rank 24") {
    const auto& cat = niemeier_catalog();
    CHECK(cat.size() == 22);
    for (const auto& spec : cat) {
        int rank = 0;
        for (const auto& c : spec.components) rank += c.n;
        CHECK(rank == 24);
        CHECK(ADEType::parse(spec.name).rank() == 24);
    }
    CHECK_THROWS_AS(niemeier_spec("A1 + A23"), error);
}

TEST_CASE("pinned builds: root counts and unimodularity") {
    // root numbers 24 + coefficient-of-q by type: D24 -> 2*24*23, 3E8 -> 720,
    // 12A2 -> 72 (the ternary Golay glue adds no roots)
    auto check = [](const std::string& name, int expect_roots) {
        const auto& n = build_niemeier(name);
        CHECK(n.root_count() == expect_roots);
        CHECK(det_rat(n.lattice.gram) == 1);
        CHECK(lattice_is_even(n.lattice));
        CHECK(n.root_type == ADEType::parse(name));
    };
    check("D24", 1104);
    check("3E8", 720);
    check("12A2", 72);
    check("4A5 + D4", 144);
}

TEST_CASE("embedding classes match the pinned table rows") {
    auto keys = [](const std::string& name, TKind k) {
        std::vector<std::string> out;
        for (const auto& e : find_embeddings(build_niemeier(name), k)) out.push_back(e.tuple_key());
        return out;
    };

    auto d24 = keys("D24", TKind::D4);
    REQUIRE(d24.size() == 1);
    CHECK(d24[0] == "D20 | [1] | 0 | 20A1");

    auto a11 = keys("A11 + D7 + E6", TKind::D4);
    REQUIRE(a11.size() == 2);
    CHECK(a11[0] == "A11 + D7 | [4] | 2 | A2");
    CHECK(a11[1] == "A3 + A11 + E6 | [6] | 0 | 3A1");

    auto e83 = keys("3E8", TKind::TwoA2);
    REQUIRE(e83.size() == 2);
    CHECK(e83[0] == "2A2 + 2E8 | [1] | 0 | 2A2");
    CHECK(e83[1] == "2E6 + E8 | [1] | 0 | 0");
}

TEST_CASE("embedding invariants: K has rank 20, disc p^2, primitive T") {
    for (auto [name, kind] : std::vector<std::pair<std::string, TKind>>{
             {"6D4", TKind::D4}, {"2A9 + D6", TKind::TwoA2}}) {
        const auto& nl = build_niemeier(name);
        Int p = (kind == TKind::D4) ? 2 : 3;
        auto ecs = find_embeddings(nl, kind);
        CHECK(!ecs.empty());
        for (const auto& ec : ecs) {
            Sublattice t = make_sublattice(nl.lattice, ec.t_basis);
            CHECK(is_primitive(t));
            Sublattice k = make_sublattice(nl.lattice, ec.k_basis);
            CHECK(k.basis.rows == 20);
            Lattice kl = k.induced();
            CHECK(abs(to_int(det_rat(kl.gram))) == p * p);
            auto sig = signature(kl.gram);
            CHECK(sig == std::pair<int, int>{0, 20});
            // rank of the root sublattice + MW rank = 20
            auto [sub, type] = root_sublattice(kl);
            CHECK(sub.basis.rows + ec.mw_rank == 20);
            CHECK(type == ec.k_root_type);
        }
    }
}

TEST_CASE("row multiplicities per Niemeier type match the tables") {
    CHECK(find_embeddings(build_niemeier("D16 + E8"), TKind::D4).size() == 2);
    CHECK(find_embeddings(build_niemeier("D10 + 2E7"), TKind::D4).size() == 2);
    CHECK(find_embeddings(build_niemeier("A11 + D7 + E6"), TKind::TwoA2).size() == 6);
    CHECK(find_embeddings(build_niemeier("4A5 + D4"), TKind::TwoA2).size() == 3);
}

#include "latk/fibration.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latk {

std::string FibrationClass::mw_torsion_str() const {
    std::string s = "[";
    for (size_t i = 0; i < mw_torsion.size(); ++i) s += (i ? ", " : "") + mw_torsion[i].get_str();
    return s + "]";
}

std::pair<IntVec, int> mordell_weil(const Lattice& k) {
    auto sig = signature(k.gram);
    if (sig.first != 0) throw error("mordell_weil: lattice not negative definite");
    auto [sub, type] = root_sublattice(k);
    (void)type;
    IntVec torsion;
    if (sub.basis.rows > 0) {
        auto snf = smith_normal_form(sub.basis);
        for (const auto& d : snf.invariant_factors())
            if (d > 1) torsion.push_back(d);
    }
    if (torsion.empty()) torsion.push_back(1);
    return {torsion, k.rank - sub.basis.rows};
}

bool is_quasi_elliptic(const Lattice& k, const Int& p) {
    if (k.rank != 20) throw error("is_quasi_elliptic: rank must be 20");
    auto [sub, type] = root_sublattice(k);
    (void)type;
    if (sub.basis.rows != 20) return false;
    RatMat rg = sub.induced().gram;
    RatMat pinv = inverse(rg);
    for (auto& v : pinv.a) v *= Rat(p);
    return is_integral(pinv);
}

bool has_section(const Lattice& s, const IntVec& f) {
    if (static_cast<int>(f.size()) != s.rank) throw error("has_section: bad vector length");
    Int g(0);
    for (const auto& x : f) g = gcd(g, x);
    if (g != 1) throw error("has_section: f not primitive");
    if (s.norm(f) != 0) throw error("has_section: f not isotropic");

    // divisibility of f: gcd of <f, e_i> over the basis
    RatVec fg = to_rat(f) * s.gram;
    Int div(0);
    IntMat pairing_row(1, s.rank);
    for (int i = 0; i < s.rank; ++i) {
        Int e = to_int(fg[i]);
        div = gcd(div, e);
        pairing_row(0, i) = e;
    }
    if (div != 1) return false;

    // with divisibility 1 on an even lattice a section class exists: take u
    // with <f,u> = 1 and put z = u + t f, t = (-2 - u^2)/2
    auto sol = kernel_and_solve(pairing_row, {Int(1)});
    if (!sol.int_solvable) throw error("has_section: internal (gcd said solvable)");
    IntVec u = sol.int_particular;
    Int u2 = to_int(s.norm(u));
    if (u2 % 2 != 0) throw error("has_section: lattice not even");
    Int t = (-2 - u2) / 2;
    IntVec z(u.size());
    for (size_t i = 0; i < u.size(); ++i) z[i] = u[i] + t * f[i];
    if (s.norm(z) != Rat(-2) || pair_with(s.gram, to_rat(f), to_rat(z)) != 1)
        throw error("has_section: certificate failed");
    return true;
}

FibrationClass analyze_complement(const Lattice& k, const Int& p, const ADEType& rn) {
    if (k.rank != 20) throw error("analyze_complement: rank must be 20");
    Int disc = to_int(det_rat(k.gram));
    if (abs(disc) != p * p)
        throw error("analyze_complement: |disc K| != p^2");

    FibrationClass fc;
    fc.niemeier_type = rn.str();
    fc.k = k;
    auto [sub, type] = root_sublattice(k);
    fc.fiber_type_sigma1 = type;
    auto [tor, rank] = mordell_weil(k);
    fc.mw_torsion = tor;
    fc.mw_rank = rank;
    fc.quasi_elliptic_sigma1 = is_quasi_elliptic(k, p);
    Lattice kvp = dual_rescale_p(k, p);
    auto [dsub, dtype] = root_sublattice(kvp);
    (void)dsub;
    fc.fiber_type_sigma10 = dtype;
    fc.quasi_elliptic_sigma10 = is_quasi_elliptic(kvp, p);
    return fc;
}

namespace {

const std::vector<std::string>& table_order(const Int& p) {
    static const std::vector<std::string> t1 = {
        "4A5 + D4", "6D4", "2A7 + 2D5", "2A9 + D6", "4D6", "A11 + D7 + E6", "4E6", "3D8",
        "A15 + D9", "A17 + E7", "D10 + 2E7", "2D12", "D16 + E8", "3E8", "D24"};
    static const std::vector<std::string> t2 = {
        "12A2", "8A3", "6A4", "6D4", "4A5 + D4", "4A6", "2A7 + 2D5", "3A8", "4D6", "2A9 + D6",
        "4E6", "A11 + D7 + E6", "2A12", "3D8", "A15 + D9", "A17 + E7", "D10 + 2E7", "2D12",
        "3E8", "D16 + E8", "A24", "D24"};
    if (p == 2) return t1;
    if (p == 3) return t2;
    throw error("table_order: characteristic must be 2 or 3");
}

}  // namespace

std::vector<FibrationClass> generate_table(const Int& p) {
    TKind kind = (p == 2) ? TKind::D4 : TKind::TwoA2;
    std::vector<FibrationClass> rows;
    for (const auto& name : table_order(p)) {
        const auto& nl = build_niemeier(name);
        auto ecs = find_embeddings(nl, kind);
        std::vector<FibrationClass> group;
        for (const auto& ec : ecs) {
            FibrationClass fc;
            fc.niemeier_type = name;
            fc.fiber_type_sigma1 = ec.k_root_type;
            fc.mw_torsion = ec.mw_torsion;
            fc.mw_rank = ec.mw_rank;
            fc.fiber_type_sigma10 = ec.k_dual_root_type;
            fc.quasi_elliptic_sigma1 = ec.qe_sigma1;
            fc.quasi_elliptic_sigma10 = ec.qe_sigma10;
            fc.k = Sublattice{nl.lattice, ec.k_basis}.induced("K(" + name + ")");
            group.push_back(std::move(fc));
        }
        std::sort(group.begin(), group.end(), [](const FibrationClass& a, const FibrationClass& b) {
            return a.fiber_type_sigma1.str() < b.fiber_type_sigma1.str();
        });
        for (auto& fc : group) rows.push_back(std::move(fc));
    }
    for (size_t i = 0; i < rows.size(); ++i) rows[i].row_number = static_cast<int>(i) + 1;
    size_t expect = (p == 2) ? 18 : 52;
    if (rows.size() != expect)
        throw error("generate_table: got " + std::to_string(rows.size()) + " rows, expected " +
                    std::to_string(expect));
    return rows;
}

std::pair<bool, Lattice> classify_fiber_class(const Lattice& s, const IntVec& f) {
    if (static_cast<int>(f.size()) != s.rank) throw error("classify_fiber_class: bad length");
    bool nonzero = false;
    Int g(0);
    for (const auto& x : f) {
        if (x != 0) nonzero = true;
        g = gcd(g, x);
    }
    if (!nonzero || g != 1 || s.norm(f) != 0) return {false, Lattice{}};
    return {true, quotient_by_isotropic(s, f)};
}

const std::vector<GoldenRow>& golden_table(const Int& p) {
    static const std::vector<GoldenRow> t1 = {
        {"4A5 + D4", "4A5", "[3, 6]", 0, "0"},
        {"6D4", "5D4", "[2, 2, 2, 2]", 0, "0"},
        {"2A7 + 2D5", "2A7 + D5", "[8]", 1, "A1"},
        {"2A9 + D6", "2A1 + 2A9", "[10]", 0, "2A1"},
        {"4D6", "2A1 + 3D6", "[2, 2, 2]", 0, "2A1"},
        {"A11 + D7 + E6", "A11 + D7", "[4]", 2, "A2"},
        {"A11 + D7 + E6", "A3 + A11 + E6", "[6]", 0, "3A1"},
        {"4E6", "3E6", "[3]", 2, "A2"},
        {"3D8", "D4 + 2D8", "[2, 2]", 0, "4A1"},
        {"A15 + D9", "A15 + D5", "[4]", 0, "5A1"},
        {"A17 + E7", "3A1 + A17", "[6]", 0, "A3"},
        {"D10 + 2E7", "3A1 + D10 + E7", "[2, 2]", 0, "A3"},
        {"D10 + 2E7", "D6 + 2E7", "[2]", 0, "6A1"},
        {"2D12", "D8 + D12", "[2]", 0, "8A1"},
        {"D16 + E8", "D4 + D16", "[2]", 0, "D4"},
        {"D16 + E8", "D12 + E8", "[1]", 0, "12A1"},
        {"3E8", "D4 + 2E8", "[1]", 0, "D4"},
        {"D24", "D20", "[1]", 0, "20A1"},
    };
    static const std::vector<GoldenRow> t2 = {
        {"12A2", "10A2", "[3, 3, 3, 3]", 0, "0"},
        {"8A3", "6A3", "[4, 4]", 2, "0"},
        {"6A4", "2A1 + 4A4", "[5]", 2, "0"},
        {"6D4", "4D4", "[2, 2]", 4, "0"},
        {"4A5 + D4", "A2 + 3A5", "[3]", 3, "0"},
        {"4A5 + D4", "3A5 + D4", "[2, 6]", 1, "A1"},
        {"4A5 + D4", "2A2 + 2A5 + D4", "[2]", 2, "0"},
        {"4A6", "3A6", "[7]", 2, "A1"},
        {"4A6", "2A3 + 2A6", "[1]", 2, "0"},
        {"2A7 + 2D5", "4A1 + 2A7", "[2, 4]", 2, "0"},
        {"2A7 + 2D5", "A1 + A7 + 2D5", "[4]", 2, "A1"},
        {"2A7 + 2D5", "2A1 + A4 + A7 + D5", "[2]", 2, "0"},
        {"2A7 + 2D5", "2A4 + 2D5", "[1]", 2, "0"},
        {"3A8", "A2 + 2A8", "[3]", 2, "A1"},
        {"3A8", "2A5 + A8", "[1]", 2, "0"},
        {"4D6", "3D6", "[2, 2]", 2, "2A1"},
        {"4D6", "2A3 + 2D6", "[2, 2]", 2, "0"},
        {"2A9 + D6", "2A9", "[5]", 2, "2A1"},
        {"2A9 + D6", "A3 + A9 + D6", "[2]", 2, "A1"},
        {"2A9 + D6", "A3 + A6 + A9", "[1]", 2, "0"},
        {"2A9 + D6", "2A6 + D6", "[1]", 2, "0"},
        {"4E6", "A2 + 3E6", "[3]", 0, "A2"},
        {"4E6", "4A2 + 2E6", "[3, 3]", 0, "0"},
        {"A11 + D7 + E6", "A2 + A11 + D7", "[4]", 0, "A2"},
        {"A11 + D7 + E6", "A11 + E6", "[3]", 3, "2A1"},
        {"A11 + D7 + E6", "2A2 + A11 + D4", "[6]", 1, "0"},
        {"A11 + D7 + E6", "A5 + D7 + E6", "[1]", 2, "A1"},
        {"A11 + D7 + E6", "2A2 + A8 + D7", "[1]", 1, "0"},
        {"A11 + D7 + E6", "A8 + D4 + E6", "[1]", 2, "0"},
        {"2A12", "A6 + A12", "[1]", 2, "A1"},
        {"2A12", "2A9", "[1]", 2, "0"},
        {"3D8", "2A1 + 2D8", "[2, 2]", 2, "2A1"},
        {"3D8", "2D5 + D8", "[2]", 2, "0"},
        {"A15 + D9", "A3 + A15", "[4]", 2, "2A1"},
        {"A15 + D9", "A9 + D9", "[1]", 2, "A1"},
        {"A15 + D9", "A12 + D6", "[1]", 2, "0"},
        {"A17 + E7", "A2 + A17", "[3]", 1, "A1 + A2"},
        {"A17 + E7", "A11 + E7", "[1]", 2, "A1"},
        {"A17 + E7", "A5 + A14", "[1]", 1, "0"},
        {"D10 + 2E7", "A2 + D10 + E7", "[2]", 1, "A1 + A2"},
        {"D10 + 2E7", "2A5 + D10", "[2, 2]", 0, "0"},
        {"D10 + 2E7", "D4 + 2E7", "[2]", 2, "2A1"},
        {"D10 + 2E7", "A5 + D7 + E7", "[2]", 1, "0"},
        {"2D12", "D6 + D12", "[2]", 2, "2A1"},
        {"2D12", "2D9", "[1]", 2, "0"},
        {"3E8", "2A2 + 2E8", "[1]", 0, "2A2"},
        {"3E8", "2E6 + E8", "[1]", 0, "0"},
        {"D16 + E8", "2A2 + D16", "[2]", 0, "2A2"},
        {"D16 + E8", "D10 + E8", "[1]", 2, "2A1"},
        {"D16 + E8", "D13 + E6", "[1]", 1, "0"},
        {"A24", "A18", "[1]", 2, "A1"},
        {"D24", "D18", "[1]", 2, "2A1"},
    };
    if (p == 2) return t1;
    if (p == 3) return t2;
    throw error("golden_table: characteristic must be 2 or 3");
}

std::string diff_against_golden(const std::vector<FibrationClass>& rows, const Int& p) {
    const auto& golden = golden_table(p);
    auto row_key = [](const std::string& rphi, const std::string& mw, int rank,
                      const std::string& rphip) {
        return rphi + " | " + mw + " | " + std::to_string(rank) + " | " + rphip;
    };
    std::map<std::string, std::multiset<std::string>> want, got;
    for (const auto& g : golden) want[g.rn].insert(row_key(g.rphi, g.mw, g.rank, g.rphip));
    for (const auto& r : rows)
        got[r.niemeier_type].insert(row_key(r.fiber_type_sigma1.str(), r.mw_torsion_str(),
                                            r.mw_rank, r.fiber_type_sigma10.str()));
    for (const auto& [rn, rows_want] : want) {
        auto it = got.find(rn);
        if (it == got.end()) return "R_N group " + rn + ": no generated rows";
        if (it->second != rows_want) {
            for (const auto& w : rows_want)
                if (!it->second.count(w)) return "R_N group " + rn + ": missing row (" + w + ")";
            for (const auto& g : it->second)
                if (!rows_want.count(g)) return "R_N group " + rn + ": extra row (" + g + ")";
            return "R_N group " + rn + ": multiplicity mismatch";
        }
    }
    for (const auto& [rn, r] : got) {
        (void)r;
        if (!want.count(rn)) return "unexpected R_N group " + rn;
    }
    if (rows.size() != golden.size())
        return "row count " + std::to_string(rows.size()) + " != " + std::to_string(golden.size());
    return "";
}

}  // namespace latk

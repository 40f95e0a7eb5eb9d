#pragma once

#include "latk/niemeier.hpp"

namespace latk {

// One classification-table row: a genus one fibration class described through
// the Niemeier ambient, the complement K, and the rescaled-dual partner.
struct FibrationClass {
    int row_number = 0;
    std::string niemeier_type;   // R_N
    ADEType fiber_type_sigma1;   // reducible fibers on the sigma = 1 side
    IntVec mw_torsion;           // invariant factors; [1] = trivial group
    int mw_rank = 0;
    ADEType fiber_type_sigma10;  // reducible fibers on the sigma = 10 side
    bool quasi_elliptic_sigma1 = false;
    bool quasi_elliptic_sigma10 = false;
    Lattice k;                   // the complement lattice itself

    std::string mw_torsion_str() const;  // "[3, 6]"
};

// Torsion invariant factors and rank of K / <roots of K>.
std::pair<IntVec, int> mordell_weil(const Lattice& k);

// Rank-20 K: true iff the root sublattice is p-elementary of rank 20.
bool is_quasi_elliptic(const Lattice& k, const Int& p);

// Lattice-side section test: divisibility of the fiber class must be 1 and a
// (-2)-vector z with <f, z> = 1 must exist (it is constructed, not searched).
bool has_section(const Lattice& s, const IntVec& f);

// Assemble a full row from a complement lattice.
FibrationClass analyze_complement(const Lattice& k, const Int& p, const ADEType& rn);

// All rows for one characteristic, in table order; hard failure if the total
// is not 18 (p = 2) or 52 (p = 3).
std::vector<FibrationClass> generate_table(const Int& p);

// Lattice-side fibration-class test: primitive isotropic f, fiber lattice.
std::pair<bool, Lattice> classify_fiber_class(const Lattice& s, const IntVec& f);

struct GoldenRow {
    const char* rn;
    const char* rphi;
    const char* mw;
    int rank;
    const char* rphip;
};
const std::vector<GoldenRow>& golden_table(const Int& p);

// Order-insensitive comparison within each R_N group against the embedded
// golden rows; returns "" on match, else the first differing field.
std::string diff_against_golden(const std::vector<FibrationClass>& rows, const Int& p);

}  // namespace latk

#pragma once

#include "latk/roots.hpp"

namespace latk {

struct NiemeierComponent {
    char family;
    int n;
};

// A Niemeier lattice presented as root components plus glue-code generators,
// one digit per component. Digit conventions: A_n components take d in
// 0..n (class d * [omega_1]); D_n components use 1 = s, 2 = v, 3 = c for
// even n and d * [s] for odd n; E6 takes 0..2, E7 takes 0..1.
struct NiemeierSpec {
    std::string name;  // canonical ADE string of the root type
    std::vector<NiemeierComponent> components;
    std::vector<std::vector<int>> glue;
};

// The 22 root types appearing in the genus-one fibration tables.
const std::vector<NiemeierSpec>& niemeier_catalog();
const NiemeierSpec& niemeier_spec(const std::string& name);

struct NiemeierLattice {
    NiemeierSpec spec;
    Lattice root_sum;              // orthogonal sum of component root lattices
    Lattice lattice;               // the even unimodular rank-24 overlattice
    RatMat basis_in_roots;         // N-basis rows in root_sum coordinates
    RatMat roots_to_n;             // inverse of basis_in_roots
    std::vector<IntVec> roots;     // all (-2)-vectors, N coordinates, sorted
    ADEType root_type;
    std::vector<int> comp_offset;  // block offset of each component
    int root_count() const { return static_cast<int>(roots.size()); }
};

// Build (cached) with self-checks: even, det = 1, rank 24, declared root
// type realized by the actual (-2)-vectors.
const NiemeierLattice& build_niemeier(const std::string& name);

enum class TKind { D4, TwoA2 };

struct EmbeddingClass {
    std::string niemeier;
    IntMat t_basis;             // T-basis rows, N coordinates
    IntMat k_basis;             // basis of K = T^perp, N coordinates
    ADEType k_root_type;        // roots of K
    IntVec mw_torsion;          // invariant factors; [1] when trivial
    int mw_rank = 0;
    ADEType k_dual_root_type;   // roots of K^v(p)
    bool qe_sigma1 = false;
    bool qe_sigma10 = false;

    std::string tuple_key() const;
};

// Primitive embeddings of T (D4 for p = 2, 2A2 for p = 3) up to the full
// invariant tuple; one representative per tuple, sorted by tuple key.
std::vector<EmbeddingClass> find_embeddings(const NiemeierLattice& n, TKind t);

}  // namespace latk

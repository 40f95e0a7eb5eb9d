#pragma once

#include <string>
#include <utility>

#include "latk/exact.hpp"

namespace latk {

// A (Q-)lattice: free Z-module of finite rank with a nondegenerate symmetric
// bilinear form, carried entirely by its Gram matrix. Vectors are coordinate
// rows with respect to the implicit basis.
struct Lattice {
    int rank = 0;
    RatMat gram;
    std::string tag;

    Rat pair(const RatVec& x, const RatVec& y) const { return pair_with(gram, x, y); }
    Rat norm(const RatVec& x) const { return pair(x, x); }
    Rat pair(const IntVec& x, const IntVec& y) const { return pair_with(gram, to_rat(x), to_rat(y)); }
    Rat norm(const IntVec& x) const { return pair(x, x); }
};

// Validates symmetry and nondegeneracy.
Lattice make_lattice(RatMat gram, std::string tag = "");
Lattice make_lattice(const IntMat& gram, std::string tag = "");

bool lattice_is_integral(const Lattice& l);
bool lattice_is_even(const Lattice& l);

Lattice hyperbolic_plane_U();
Lattice direct_sum(const Lattice& a, const Lattice& b);
// Negated Cartan matrix of A_n (n>=1), D_n (n>=4), E_n (n in {6,7,8}).
Lattice root_lattice(char family, int n);

Lattice dual(const Lattice& l);
Lattice rescale(const Lattice& l, const Rat& m);
// L^v(p): guaranteed even / integral / p-elementary for valid input
// (even p-elementary L, type I when p = 2).
Lattice dual_rescale_p(const Lattice& l, const Int& p);

// Finite quadratic form (A_L, q_L) of an even integral lattice, on the
// SNF-adapted generating set.
struct DiscriminantForm {
    IntVec orders;       // invariant factors > 1, ascending divisibility
    RatMat generators;   // rows: dual vectors in L-coordinates
    RatVec q;            // q(gen_i), reduced into [0,2)
    RatMat bilinear;     // b(gen_i, gen_j), reduced into [0,1)

    Int order() const;
    int p_rank(const Int& p) const;
    Rat q_of(const IntVec& coeffs) const;                   // q of sum a_i gen_i
    IntVec class_of(const RatVec& dual_vector) const;       // coeffs mod orders
    std::vector<IntVec> all_classes() const;                // every element (small groups)

    // internals for class_of: x = G y has SNF coordinates U x
    RatMat source_gram;
    IntMat u_transform;
    std::vector<int> kept;  // SNF diagonal positions with d > 1
};
DiscriminantForm discriminant_form(const Lattice& l);

std::pair<int, int> signature(const RatMat& gram);  // (positive, negative); exact

struct ClassifyRecord {
    bool integral = false;
    bool even = false;
    Int discriminant;                 // exact determinant of the Gram matrix
    std::pair<int, int> signature;
    bool unimodular = false;
    Int p;                            // queried prime, 0 if none
    bool p_elementary = false;
    bool type_I = false;              // only meaningful when p = 2
};
ClassifyRecord classify(const Lattice& l, const Int& p = 0);

struct Sublattice {
    Lattice ambient;
    IntMat basis;  // rows: coordinates of generators in the ambient basis

    Lattice induced(const std::string& tag = "") const;  // Gram = B G B^T
};

Sublattice make_sublattice(Lattice ambient, IntMat basis);  // checks row independence

// Full (hence primitive) sublattice of ambient vectors pairing to 0 with s.
Sublattice orthogonal_complement(const Sublattice& s);

// Smallest primitive sublattice containing s.
Sublattice saturation(const Sublattice& s);
bool is_primitive(const Sublattice& s);

// <f>^perp / <f> for a primitive isotropic f.
Lattice quotient_by_isotropic(const Lattice& amb, const IntVec& f);

// Lattice generated by l and the given dual vectors; rejects odd or
// non-integral results. basis_in_l (optional out) receives the new basis as
// rows of coordinates in l's basis.
Lattice overlattice_from_glue(const Lattice& l, const std::vector<RatVec>& glue,
                              RatMat* basis_in_l = nullptr);

}  // namespace latk

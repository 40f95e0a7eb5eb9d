#pragma once

#include "latk/roots.hpp"

namespace latk {

// Chamber in the positive cone of a hyperbolic lattice, cut out by
// "pair >= 0" conditions against the delta vectors.
struct ChamberSpec {
    Lattice ambient;
    std::vector<RatVec> delta;  // each of negative norm
    RatVec base;                // positive norm point inside / on the chamber
};
ChamberSpec make_chamber(Lattice ambient, std::vector<RatVec> delta, RatVec base);

// s_r : x -> x + <x, r> r for a (-2)-vector r.
IntVec reflect(const Lattice& s, const IntVec& x, const IntVec& r);
RatVec reflect(const Lattice& s, const RatVec& x, const IntVec& r);

// All roots r with <a, r> > 0 > <v, r>; finite since a, v span a plane the
// rest of which is definite. Lexicographically sorted.
std::vector<IntVec> separating_roots(const Lattice& s, const IntVec& a, const IntVec& v);

struct WeylReduction {
    IntVec reduced;
    std::vector<IntVec> word;  // reflections applied, in order
};
// Reflect v toward a's chamber until no separating root remains. Pivot rule:
// most negative <v, r>, ties by lexicographic order.
WeylReduction weyl_reduce(const Lattice& s, const IntVec& a, const IntVec& v);

bool interior_point_check(const ChamberSpec& c, const RatVec& x);

struct WallVerdict {
    bool is_wall = false;
    bool had_duplicates = false;  // exact copies of the member were ignored
};
// Exact rational feasibility of <x, v> < 0 with <x, v'> >= 0 for all other
// members (by Farkas: v must not lie in the cone of the others).
WallVerdict wall_check(const ChamberSpec& c, size_t member_index);

// Shared exact phase-1 simplex: does b lie in { A lambda : lambda >= 0 }
// (columns of A as generators)?
bool in_conical_hull(const RatMat& a_cols, const RatVec& b);

}  // namespace latk

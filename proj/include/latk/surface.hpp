#pragma once

#include <array>
#include <map>

#include "latk/hyperbolic.hpp"

namespace latk {

// The projective plane over F_4: 21 points, 21 lines, incidence by exact
// field arithmetic on t^2 + t + 1.
struct IncidencePlane {
    std::vector<std::array<int, 3>> points;  // normalized homogeneous coords
    std::vector<std::array<int, 3>> lines;
    std::vector<std::vector<bool>> incidence;  // [point][line]
};
IncidencePlane build_p2_f4();

// All 6-subsets of points with no 3 collinear, canonically sorted.
std::vector<std::array<int, 6>> general_six_point_sets(const IncidencePlane& p);

struct SurfaceLatticeModel {
    Lattice lattice;                        // rank 22, hyperbolic
    std::map<std::string, RatVec> classes;  // named classes in lattice coords
    std::vector<std::string> class_order;   // stable dump order
};

// Neron-Severi model in characteristic 2, built from the blown-up incidence
// plane; self-checking (rank 22, disc -4, even, 2-elementary, type I,
// w_M^2 = 14 with unit pairings, the 168 c_I of norm -1 in the dual).
SurfaceLatticeModel build_S21();

// Wall data of the characteristic-2 model: the 21 + 21 + 168 chamber vectors
// with w_M as base point.
ChamberSpec chamber_S21(const SurfaceLatticeModel& m);

// Neron-Severi model in characteristic 3 from the 112 lines on the Fermat
// quartic over F_9; self-checking (rank 22, disc -9, 3-elementary,
// 28 h = sum of all line classes).
SurfaceLatticeModel build_S31();

}  // namespace latk

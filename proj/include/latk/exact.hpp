#pragma once

#include <optional>

#include "latk/matrix.hpp"

namespace latk {

// Smith normal form: d = u * m * v with u, v unimodular, d diagonal,
// d(0,0) | d(1,1) | ... and all diagonal entries >= 0.
struct SmithResult {
    IntMat d, u, v;
    int rank = 0;  // number of nonzero diagonal entries
    IntVec invariant_factors() const;  // nonzero diagonal, in order
};
SmithResult smith_normal_form(const IntMat& m);

// Row Hermite normal form of the lattice generated by the rows of m:
// returns a canonical full-row-rank basis (pivots positive, entries above a
// pivot reduced into [0, pivot)). Zero rows are dropped.
IntMat hnf_rows(const IntMat& m);

// Fraction-free (Bareiss) determinant.
Int det_int(const IntMat& m);
Rat det_rat(const RatMat& m);

RatMat inverse(const RatMat& m);  // throws on singular input

int rank_rat(const RatMat& m);

// Basis (rows) of the rational null space { x : m x^T = 0 }, acting on row
// vectors x of length m.cols.
RatMat kernel_rat(const RatMat& m);

// Basis (rows) of the integer null space; the returned lattice is saturated.
IntMat kernel_int(const IntMat& m);

// One solution of m * x = b over the rationals, if any.
std::optional<RatVec> solve_rat(const RatMat& m, const RatVec& b);

// Combined description of m * x = b over Z and over Q.
struct LinearSolution {
    bool rat_solvable = false;
    RatVec rat_particular;
    RatMat rat_kernel;   // rows span the rational kernel
    bool int_solvable = false;
    IntVec int_particular;
    IntMat int_kernel;   // rows span the integer kernel (saturated)
};
LinearSolution kernel_and_solve(const IntMat& m, const IntVec& b);

// Integer x with x * m = b, if one exists (m has full row rank not required).
std::optional<IntVec> solve_left_int(const IntMat& m, const IntVec& b);

// Repeated left-solves against a fixed matrix, sharing one Smith form.
class LeftSolver {
  public:
    explicit LeftSolver(const IntMat& m);
    std::optional<IntVec> solve(const IntVec& b) const;

  private:
    SmithResult s_;  // of m^T
    int rows_, cols_;
};

}  // namespace latk

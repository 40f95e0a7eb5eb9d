#pragma once

#include <functional>
#include <map>
#include <string>

#include "latk/lattice.hpp"

namespace latk {

struct ADEComponent {
    char family = 'A';
    int index = 0;
    auto operator<=>(const ADEComponent&) const = default;
};

// Multiset of irreducible root-system symbols with canonical text form
// "2A1 + A9"; the empty type prints "0".
struct ADEType {
    std::vector<ADEComponent> components;  // kept sorted

    void add(char family, int index);
    int rank() const;
    std::string str() const;
    static ADEType parse(const std::string& s);
    auto operator<=>(const ADEType&) const = default;
};

// Exact LLL (delta = 3/4) on a positive definite rational Gram matrix.
// Returns a unimodular t with t * g * t^T reduced; rows of t are the reduced
// basis in the original coordinates.
IntMat lll_reduce_gram(const RatMat& posdef_gram);

// Every integer x with (x + center)^T g (x + center) = norm, g positive
// definite. center may be empty (= origin). Exact rational arithmetic
// throughout; vectors stream through `emit` in no particular order.
void enumerate_norm_vectors(const RatMat& posdef_gram, const Rat& norm,
                            const RatVec& center,
                            const std::function<void(const IntVec&)>& emit);

// Complete list of vectors of the given negative norm in a negative definite
// lattice; lexicographically sorted, closed under negation.
std::vector<IntVec> vectors_of_norm(const Lattice& l, const Rat& n);

struct RootSet {
    Lattice ambient;
    std::vector<IntVec> roots;  // the (-2)-vectors
};
RootSet root_set(const Lattice& l);

ADEType ade_classify(const RootSet& r);
ADEType ade_classify_vectors(const std::vector<IntVec>& roots, const RatMat& gram);

// Pairing matrix v_i G v_j^T as int64 (values must fit); runs on the SIMD
// kernels when entry magnitudes allow, exact arithmetic otherwise.
std::vector<int64_t> integer_pairings(const std::vector<IntVec>& v, const RatMat& gram);

// Rectangular variant: a_i G b_j^T flattened row-major (|a| x |b|).
std::vector<int64_t> integer_cross_pairings(const std::vector<IntVec>& a,
                                            const std::vector<IntVec>& b, const RatMat& gram);

// Sublattice spanned by the (-2)-vectors, with its type ("0" when rootless).
std::pair<Sublattice, ADEType> root_sublattice(const Lattice& l);

// For a definite t and norm n: how many vectors of t^v of norm n land in
// each discriminant class (keyed by SNF coefficients of the class).
std::map<IntVec, Int> dual_coverage(const Lattice& t, const Rat& n);

}  // namespace latk

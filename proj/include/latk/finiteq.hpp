#pragma once

#include <cstdint>

#include "latk/lattice.hpp"

namespace latk {

// Nondegenerate quadratic space over F_p (p odd): the symmetric Gram of the
// polar form, with q(v) = b(v, v).
struct FiniteQuadraticSpace {
    int64_t p = 0;
    int dim = 0;
    std::vector<int64_t> b;  // dim x dim, row-major, entries in [0, p)

    int64_t bil(const std::vector<int64_t>& x, const std::vector<int64_t>& y) const;
    int64_t q(const std::vector<int64_t>& x) const { return bil(x, x); }
};

// (N_0, q_0) of an even p-elementary lattice: dimension = p-rank of A_N,
// values p * (dual norms) mod p.
FiniteQuadraticSpace quadratic_space_from_lattice(const Lattice& n, const Int& p);

enum class FormClass { Neutral, NonNeutral };
// Witt decomposition by repeatedly splitting hyperbolic planes; neutral iff
// the anisotropic kernel is trivial.
FormClass classify_form(const FiniteQuadraticSpace& v);

// Number of isotropic vectors including 0 (oracle for small dimensions).
Int isotropic_count(const FiniteQuadraticSpace& v);

// |O(2 sigma, q, epsilon)| = 2 q^{sigma(sigma-1)} (q^sigma - eps) prod (q^2i - 1).
Int orthogonal_group_order(const Int& p, int dim, int epsilon);

struct Factorization {
    std::vector<std::pair<Int, int>> primes;  // ascending
    std::string str() const;                  // "2^36 * 3^90 * ..."
};
Factorization factor_integer(const Int& n);

// smallest c >= 0 with t^2 + c t + 1 irreducible over F_p
int64_t irreducible_c(const Int& p);

// element a + b*alpha of F_{p^2} = F_p[t]/(t^2 + c t + 1)
struct Fp2 {
    int64_t a = 0, b = 0;
    bool operator==(const Fp2&) const = default;
};

// The basis data behind the K_e family: the f_- space together with the
// isotropic vectors b_i^{(+-1)} over F_{p^2}.
struct StandardBasis {
    int64_t p = 0, c = 0;
    int sigma = 0;
    FiniteQuadraticSpace space;  // dim 2 sigma, form f_-

    // coordinate vectors of b_i^{(eps)}, i in 1..sigma, eps = +1 / -1
    std::vector<Fp2> b_vector(int i, int eps) const;

    Fp2 mul(Fp2 x, Fp2 y) const;
    Fp2 add(Fp2 x, Fp2 y) const;
    Fp2 conj(Fp2 x) const;  // Frobenius a + b alpha -> a - cb - b alpha
    Fp2 bil2(const std::vector<Fp2>& x, const std::vector<Fp2>& y) const;
};
StandardBasis build_standard_basis(const Int& p, int sigma);

// entrywise p-th power of coordinates
std::vector<Fp2> frobenius(const StandardBasis& sb, const std::vector<Fp2>& x);

// sigma-dimensional subspace given by rows: totally isotropic and
// dim(K cap phi(K)) = sigma - 1
bool is_characteristic(const StandardBasis& sb, const std::vector<std::vector<Fp2>>& rows);

struct SignVector {
    std::vector<int> e;  // entries +1 / -1
    bool plus_parity() const;
    std::string str() const;
};

struct FamilyMember {
    SignVector e;
    std::vector<std::vector<Fp2>> rows;  // the subspace K_e
};
std::vector<FamilyMember> characteristic_family(const StandardBasis& sb);

int rank_fp2(const StandardBasis& sb, std::vector<std::vector<Fp2>> rows);

// Build an f_- a-basis of the space whose final vector is the given
// isotropic u (hyperbolic pairs split off from the back, anisotropic plane
// in the first two slots).
std::vector<std::vector<int64_t>> a_basis_through(const FiniteQuadraticSpace& v,
                                                  const std::vector<int64_t>& u, int64_t c);

// { g in O(N_0, q_0) : K g = K for every K_e-family member lying in the
// plus component }, solved linearly and filtered by the orthogonality
// condition. The families are the ones the genericity argument walks
// through: the standard basis itself plus the bases regenerated from the
// auxiliary isotropic vectors b_i + b_j (i, j >= 2) and the (xi, eta)
// combination. For sigma >= 3 the result is exactly {+-1}.
struct StabilizerResult {
    Int order;
    bool scalars_only = false;
    std::vector<std::vector<int64_t>> elements;  // 2sigma x 2sigma, row-major
};
StabilizerResult family_stabilizer(const Int& p, int sigma);

// lexicographically least (xi, eta) with (4 - c^2) + xi^2 + eta^2 = 0 in F_p
std::pair<int64_t, int64_t> solve_xi_eta(const Int& p);

}  // namespace latk

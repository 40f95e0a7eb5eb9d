#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace latk {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline const Int num(const Rat& r) { return r.get_num(); }
inline const Int den(const Rat& r) { return r.get_den(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw error("to_int: " + r.get_str() + " is not an integer");
    return r.get_num();
}

inline long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw error("to_long: out of range");
    return n.get_si();
}

// floor(a/b) and ceil(a/b) with sign-correct semantics, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw error("isqrt_floor: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// floor(sqrt(r)) for a nonnegative rational: floor(sqrt(p/q)) = floor(isqrt(p*q)/q).
inline Int floor_sqrt(const Rat& r) {
    if (r < 0) throw error("floor_sqrt: negative argument");
    return isqrt_floor(num(r) * den(r)) / den(r);
}

inline Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int ceil_rat(const Rat& r) { return ceil_div(num(r), den(r)); }

// Representative of x mod m in [0, m), for m > 0.
inline Rat mod_into(const Rat& x, const Rat& m) {
    Rat q = x / m;
    Rat r = x - Rat(floor_rat(q)) * m;
    if (r < 0) r += m;   // guard against exact-boundary rounding
    if (r >= m) r -= m;
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = p*a + q*b
inline Int gcd_ext(const Int& a, const Int& b, Int& p, Int& q) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

}  // namespace latk

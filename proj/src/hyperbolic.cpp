#include "latk/hyperbolic.hpp"

#include <algorithm>

namespace latk {

ChamberSpec make_chamber(Lattice ambient, std::vector<RatVec> delta, RatVec base) {
    for (const auto& v : delta) {
        if (static_cast<int>(v.size()) != ambient.rank) throw error("make_chamber: bad delta length");
        if (ambient.norm(v) >= 0) throw error("make_chamber: delta vector of nonnegative norm");
    }
    if (static_cast<int>(base.size()) != ambient.rank) throw error("make_chamber: bad base length");
    if (ambient.norm(base) <= 0) throw error("make_chamber: base point not of positive norm");
    for (const auto& v : delta)
        if (pair_with(ambient.gram, base, v) < 0)
            throw error("make_chamber: base point outside the chamber");
    return ChamberSpec{std::move(ambient), std::move(delta), std::move(base)};
}

IntVec reflect(const Lattice& s, const IntVec& x, const IntVec& r) {
    if (s.norm(r) != Rat(-2)) throw error("reflect: r is not a (-2)-vector");
    Int c = to_int(s.pair(x, r));
    IntVec y = x;
    for (size_t i = 0; i < y.size(); ++i) y[i] += c * r[i];
    return y;
}

RatVec reflect(const Lattice& s, const RatVec& x, const IntVec& r) {
    if (s.norm(r) != Rat(-2)) throw error("reflect: r is not a (-2)-vector");
    Rat c = pair_with(s.gram, x, to_rat(r));
    RatVec y = x;
    for (size_t i = 0; i < y.size(); ++i) y[i] += c * Rat(r[i]);
    return y;
}

std::vector<IntVec> separating_roots(const Lattice& s, const IntVec& a, const IntVec& v) {
    const int n = s.rank;
    if (static_cast<int>(a.size()) != n || static_cast<int>(v.size()) != n)
        throw error("separating_roots: bad vector length");
    if (!lattice_is_integral(s)) throw error("separating_roots: ambient must be integral");
    Int a2 = to_int(s.norm(a)), v2 = to_int(s.norm(v)), av = to_int(s.pair(a, v));
    if (a2 <= 0) throw error("separating_roots: a must have positive norm");
    if (av < 0) throw error("separating_roots: a, v in opposite cones");
    Int det = a2 * v2 - av * av;
    if (det == 0) return {};  // v proportional to a: nothing separates

    // pairing row vectors of a and v
    IntMat m(2, n);
    RatVec ag = to_rat(a) * s.gram, vg = to_rat(v) * s.gram;
    for (int j = 0; j < n; ++j) {
        m(0, j) = to_int(ag[j]);
        m(1, j) = to_int(vg[j]);
    }

    // projection of a candidate root to span(a, v) has norm
    // Q(s,t) = (v2 s^2 - 2 av s t + a2 t^2) / det and Q >= -2 must hold,
    // giving a finite (s, t) box on the quadrant s >= 1, t <= -1
    Int bound2 = -2 * det;  // det < 0, so this is 2|det|
    std::vector<IntVec> out;
    Int tmax = isqrt_floor(bound2 / a2);
    for (Int tt = 1; tt <= tmax; ++tt) {  // tt = -t
        Int rem = bound2 - a2 * tt * tt;
        for (Int ss = 1;; ++ss) {
            Int lhs = v2 * ss * ss + 2 * av * ss * tt;
            if (lhs > rem) break;
            // solve <a,x> = ss, <v,x> = -tt over Z
            auto sol = kernel_and_solve(m, {ss, -tt});
            if (!sol.rat_solvable) continue;
            if (!sol.int_solvable) continue;
            const IntVec& r0 = sol.int_particular;
            const IntMat& k = sol.int_kernel;
            Rat c0 = s.norm(r0);
            if (k.rows == 0) {
                if (c0 == -2) out.push_back(r0);
                continue;
            }
            RatMat kg = to_rat(k) * s.gram * to_rat(k).transpose();
            RatMat pk = kg;
            for (auto& x : pk.a) x = -x;  // positive definite on the kernel
            RatVec w = to_rat(k) * (s.gram * to_rat(r0));
            auto msol = solve_rat(pk, w);
            if (!msol) throw error("separating_roots: kernel form degenerate");
            RatVec mvec = *msol;  // m = P^{-1} w
            // norm condition: (r0 + yK)^2 = -2 becomes, with P = -KGK^T,
            // (y - m) P (y - m)^T = c0 + 2 + m.w
            Rat target = c0 + 2 + dot(mvec, w);
            if (target < 0) continue;
            RatVec center(mvec.size());
            for (size_t i = 0; i < mvec.size(); ++i) center[i] = -mvec[i];
            enumerate_norm_vectors(pk, target, center, [&](const IntVec& y) {
                IntVec x = r0;
                for (int i = 0; i < k.rows; ++i)
                    for (int j = 0; j < n; ++j) x[j] += y[i] * k(i, j);
                if (s.norm(x) != Rat(-2)) throw error("separating_roots: enumeration mismatch");
                out.push_back(std::move(x));
            });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

WeylReduction weyl_reduce(const Lattice& s, const IntVec& a, const IntVec& v) {
    if (s.norm(a) <= 0) throw error("weyl_reduce: a must have positive norm");
    if (s.norm(v) < 0 || s.pair(a, v) < 0)
        throw error("weyl_reduce: v outside the closure of a's positive cone");
    WeylReduction res;
    res.reduced = v;
    for (int guard = 0; guard < 100000; ++guard) {
        auto roots = separating_roots(s, a, res.reduced);
        if (roots.empty()) return res;
        // pivot: most negative <v, r>, then lexicographically least root
        size_t best = 0;
        Rat bestpair = s.pair(res.reduced, roots[0]);
        for (size_t i = 1; i < roots.size(); ++i) {
            Rat p = s.pair(res.reduced, roots[i]);
            if (p < bestpair || (p == bestpair && roots[i] < roots[best])) {
                bestpair = p;
                best = i;
            }
        }
        res.reduced = reflect(s, res.reduced, roots[best]);
        res.word.push_back(roots[best]);
    }
    throw error("weyl_reduce: did not terminate");
}

bool interior_point_check(const ChamberSpec& c, const RatVec& x) {
    for (const auto& v : c.delta)
        if (pair_with(c.ambient.gram, x, v) <= 0) return false;
    return true;
}

// exact phase-1 simplex with Bland's rule
bool in_conical_hull(const RatMat& a_cols, const RatVec& b) {
    const int n = a_cols.rows;                 // equation count
    const int m = a_cols.cols;                 // generators
    if (static_cast<int>(b.size()) != n) throw error("in_conical_hull: dimension mismatch");
    // tableau: columns 0..m-1 generators, m..m+n-1 artificials, last = rhs
    RatMat t(n, m + n + 1);
    for (int i = 0; i < n; ++i) {
        bool neg = b[i] < 0;
        for (int j = 0; j < m; ++j) t(i, j) = neg ? -a_cols(i, j) : a_cols(i, j);
        t(i, m + i) = 1;
        t(i, m + n) = neg ? -b[i] : b[i];
    }
    std::vector<int> basis(n);
    for (int i = 0; i < n; ++i) basis[i] = m + i;

    // reduced phase-1 objective: artificial columns are basic, so their
    // reduced costs start at zero; only generator columns carry sums
    RatVec obj(m + n + 1, Rat(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) obj[j] += t(i, j);
        obj[m + n] += t(i, m + n);
    }

    while (true) {
        int enter = -1;
        for (int j = 0; j < m; ++j)  // Bland: smallest generator index;
            if (obj[j] > 0) { enter = j; break; }  // artificials never re-enter
        if (enter < 0) break;
        int leave = -1;
        Rat best;
        for (int i = 0; i < n; ++i) {
            if (t(i, enter) <= 0) continue;
            Rat ratio = t(i, m + n) / t(i, enter);
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0) throw error("in_conical_hull: unbounded phase-1 (cannot happen)");
        // pivot
        Rat piv = t(leave, enter);
        for (int j = 0; j <= m + n; ++j) t(leave, j) /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == leave || t(i, enter) == 0) continue;
            Rat f = t(i, enter);
            for (int j = 0; j <= m + n; ++j) t(i, j) -= f * t(leave, j);
        }
        Rat fo = obj[enter];
        if (fo != 0)
            for (int j = 0; j <= m + n; ++j) obj[j] -= fo * t(leave, j);
        basis[leave] = enter;
    }
    return obj[m + n] == 0;  // artificial total driven to zero
}

WallVerdict wall_check(const ChamberSpec& c, size_t member_index) {
    if (member_index >= c.delta.size()) throw error("wall_check: index out of range");
    const RatVec& v = c.delta[member_index];
    WallVerdict out;
    std::vector<const RatVec*> others;
    for (size_t i = 0; i < c.delta.size(); ++i) {
        if (i == member_index) continue;
        if (c.delta[i] == v) {
            out.had_duplicates = true;  // exact copies do not disqualify a wall
            continue;
        }
        others.push_back(&c.delta[i]);
    }
    // Farkas: the strict system is infeasible iff v lies in the cone of the others
    RatMat cols(c.ambient.rank, static_cast<int>(others.size()));
    for (size_t j = 0; j < others.size(); ++j)
        for (int i = 0; i < c.ambient.rank; ++i) cols(i, static_cast<int>(j)) = (*others[j])[i];
    out.is_wall = !in_conical_hull(cols, v);
    return out;
}

}  // namespace latk

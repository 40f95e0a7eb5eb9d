#include "latk/roots.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "latk/simd.hpp"

namespace latk {

void ADEType::add(char family, int index) {
    if (family == 'A' && index < 1) throw error("ADEType: A index >= 1");
    if (family == 'D' && index < 4) throw error("ADEType: D index >= 4");
    if (family == 'E' && (index < 6 || index > 8)) throw error("ADEType: E index in {6,7,8}");
    if (family != 'A' && family != 'D' && family != 'E') throw error("ADEType: bad family");
    components.push_back({family, index});
    std::sort(components.begin(), components.end());
}

int ADEType::rank() const {
    int r = 0;
    for (const auto& c : components) r += c.index;
    return r;
}

std::string ADEType::str() const {
    if (components.empty()) return "0";
    std::string out;
    size_t i = 0;
    while (i < components.size()) {
        size_t j = i;
        while (j < components.size() && components[j] == components[i]) ++j;
        if (!out.empty()) out += " + ";
        size_t mult = j - i;
        if (mult > 1) out += std::to_string(mult);
        out += components[i].family;
        out += std::to_string(components[i].index);
        i = j;
    }
    return out;
}

ADEType ADEType::parse(const std::string& s) {
    ADEType t;
    if (s == "0" || s.empty()) return t;
    size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '+')) ++pos;
        if (pos >= s.size()) break;
        int mult = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            mult = mult * 10 + (s[pos++] - '0');
        if (mult == 0) mult = 1;
        if (pos >= s.size()) throw error("ADEType::parse: dangling multiplicity in '" + s + "'");
        char fam = s[pos++];
        int idx = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            idx = idx * 10 + (s[pos++] - '0');
        for (int k = 0; k < mult; ++k) t.add(fam, idx);
    }
    return t;
}

IntMat lll_reduce_gram(const RatMat& g0) {
    const int n = g0.rows;
    IntMat t = IntMat::identity(n);
    if (n <= 1) return t;

    // exact Gram-Schmidt data, maintained by the textbook incremental updates
    RatMat mu(n, n);
    RatVec B(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            Rat v = g0(i, j);
            for (int k = 0; k < j; ++k) v -= mu(i, k) * mu(j, k) * B[k];
            mu(i, j) = v / B[j];
        }
        Rat b = g0(i, i);
        for (int k = 0; k < i; ++k) b -= mu(i, k) * mu(i, k) * B[k];
        B[i] = b;
        if (B[i] <= 0) throw error("lll_reduce_gram: matrix not positive definite");
    }

    const Rat half = make_rat(1, 2);
    const Rat delta = make_rat(3, 4);
    int k = 1;
    while (k < n) {
        for (int j = k - 1; j >= 0; --j) {
            Rat m = mu(k, j);
            if (m > half || m < -half) {
                Int q = floor_rat(m + half);
                t.row_axpy(k, j, q);
                Rat qr(q);
                for (int l = 0; l < j; ++l) mu(k, l) -= qr * mu(j, l);
                mu(k, j) -= qr;
            }
        }
        if (B[k] < (delta - mu(k, k - 1) * mu(k, k - 1)) * B[k - 1]) {
            const int j = k - 1;
            t.swap_rows(j, k);
            Rat m = mu(k, j);
            Rat bj = B[k] + m * m * B[j];
            Rat mukj = m * B[j] / bj;
            B[k] = B[j] * B[k] / bj;
            B[j] = bj;
            for (int l = 0; l < j; ++l) std::swap(mu(j, l), mu(k, l));
            for (int i = k + 1; i < n; ++i) {
                Rat tmp = mu(i, k);
                mu(i, k) = mu(i, j) - m * tmp;
                mu(i, j) = tmp + mukj * mu(i, k);
            }
            mu(k, j) = mukj;
            k = std::max(k - 1, 1);
        } else {
            ++k;
        }
    }
    return t;
}

namespace {

struct FpData {
    int n = 0;
    RatMat u;   // unit upper-triangular coefficients
    RatVec d;   // positive pivots: q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2
};

FpData fp_decompose(const RatMat& g) {
    FpData f;
    f.n = g.rows;
    f.u = RatMat(f.n, f.n);
    f.d.assign(f.n, Rat(0));
    RatMat a = g;
    for (int i = 0; i < f.n; ++i) {
        f.d[i] = a(i, i);
        if (f.d[i] <= 0) throw error("enumerate_norm_vectors: gram not positive definite");
        for (int j = i + 1; j < f.n; ++j) f.u(i, j) = a(i, j) / f.d[i];
        for (int r = i + 1; r < f.n; ++r)
            for (int c = r; c < f.n; ++c) {
                a(r, c) -= f.d[i] * f.u(i, r) * f.u(i, c);
                a(c, r) = a(r, c);
            }
    }
    return f;
}

void fp_recurse(const FpData& f, int level, const RatVec& center, IntVec& x,
                const Rat& budget, const std::function<void(const IntVec&)>& emit) {
    const int i = level;
    // offset t = center_i + sum_{j>i} u_ij (x_j + center_j)
    Rat t = center.empty() ? Rat(0) : center[i];
    for (int j = i + 1; j < f.n; ++j) {
        if (f.u(i, j) == 0) continue;
        Rat xc = Rat(x[j]);
        if (!center.empty()) xc += center[j];
        t += f.u(i, j) * xc;
    }
    Rat bound = budget / f.d[i];  // feasible x_i satisfy (x_i + t)^2 <= bound
    if (bound < 0) return;
    Int s = floor_sqrt(bound) + 2;
    Int lo = floor_rat(-t) - s, hi = floor_rat(-t) + s;
    auto fits = [&](const Int& v) {
        Rat w = Rat(v) + t;
        return w * w <= bound;
    };
    while (lo <= hi && !fits(lo)) ++lo;
    while (hi >= lo && !fits(hi)) --hi;
    for (Int v = lo; v <= hi; ++v) {
        Rat w = Rat(v) + t;
        Rat used = f.d[i] * w * w;
        x[i] = v;
        if (i == 0) {
            if (used == budget) emit(x);  // exact norm, not just <=
        } else {
            fp_recurse(f, i - 1, center, x, budget - used, emit);
        }
    }
    x[i] = 0;
}

}  // namespace

void enumerate_norm_vectors(const RatMat& g, const Rat& norm, const RatVec& center,
                            const std::function<void(const IntVec&)>& emit) {
    if (g.rows == 0) {
        if (norm == 0) emit({});
        return;
    }
    if (!center.empty() && static_cast<int>(center.size()) != g.rows)
        throw error("enumerate_norm_vectors: bad center length");
    if (norm < 0) return;
    FpData f = fp_decompose(g);
    IntVec x(g.rows, Int(0));
    fp_recurse(f, g.rows - 1, center, x, norm, emit);
}

std::vector<IntVec> vectors_of_norm(const Lattice& l, const Rat& n) {
    if (n >= 0) throw error("vectors_of_norm: norm must be negative");
    auto sig = signature(l.gram);
    if (sig.first != 0) throw error("vectors_of_norm: lattice not negative definite");

    RatMat pos = l.gram;
    for (auto& v : pos.a) v = -v;
    IntMat t = lll_reduce_gram(pos);
    RatMat tr = to_rat(t);
    RatMat red = tr * pos * tr.transpose();

    std::vector<IntVec> out;
    enumerate_norm_vectors(red, -n, {}, [&](const IntVec& y) {
        if (out.size() >= 500000) throw error("vectors_of_norm: more than 500000 vectors");
        IntVec x(l.rank, Int(0));
        for (int i = 0; i < l.rank; ++i) {
            if (y[i] == 0) continue;
            for (int j = 0; j < l.rank; ++j) x[j] += y[i] * t(i, j);
        }
        out.push_back(std::move(x));
    });
    std::sort(out.begin(), out.end());
    return out;
}

RootSet root_set(const Lattice& l) { return RootSet{l, vectors_of_norm(l, Rat(-2))}; }

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

// pairing matrices; take the SIMD kernels when entry magnitudes allow,
// otherwise fall back to exact arithmetic
std::vector<int64_t> integer_cross_pairings(const std::vector<IntVec>& a,
                                            const std::vector<IntVec>& b, const RatMat& gram) {
    const size_t m = a.size(), k = b.size();
    const int n = gram.rows;
    Int scale = 1;
    for (const auto& x : gram.a) scale = lcm(scale, den(x));
    bool small = scale.fits_sint_p();
    IntMat gi(n, n);
    for (int i = 0; i < n && small; ++i)
        for (int j = 0; j < n && small; ++j) {
            Int e = to_int(gram(i, j) * Rat(scale));
            if (abs(e) > simd::kEntryBound) small = false;
            else gi(i, j) = e;
        }
    auto coords_small = [](const std::vector<IntVec>& v) {
        for (const auto& row : v)
            for (const auto& c : row)
                if (abs(c) > simd::kEntryBound) return false;
        return true;
    };
    if (small) small = coords_small(a) && coords_small(b);

    if (small && m && k) {
        long sc = to_long(scale);
        simd::I32Mat am(m, n), bm(k, n), gm(n, n);
        for (size_t i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) am(i, j) = static_cast<int32_t>(to_long(a[i][j]));
        for (size_t i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) bm(i, j) = static_cast<int32_t>(to_long(b[i][j]));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) gm(i, j) = static_cast<int32_t>(to_long(gi(i, j)));
        // w = a * g (g symmetric), then p = w * b^T
        auto w64 = simd::pairing_matrix(am, gm);
        simd::I32Mat w(m, n);
        bool fits = true;
        for (size_t i = 0; i < w64.size() && fits; ++i) {
            if (w64[i] > simd::kEntryBound || w64[i] < -simd::kEntryBound) fits = false;
            else w.a[i] = static_cast<int32_t>(w64[i]);
        }
        if (fits) {
            auto p = simd::pairing_matrix(w, bm);
            for (auto& x : p) {
                if (x % sc != 0) throw error("integer_cross_pairings: scale mismatch");
                x /= sc;
            }
            return p;
        }
    }
    std::vector<int64_t> p(m * k);
    for (size_t i = 0; i < m; ++i) {
        RatVec gv = gram * to_rat(a[i]);
        for (size_t j = 0; j < k; ++j) p[i * k + j] = to_long(to_int(dot(gv, to_rat(b[j]))));
    }
    return p;
}

std::vector<int64_t> integer_pairings(const std::vector<IntVec>& v, const RatMat& gram) {
    return integer_cross_pairings(v, v, gram);
}

ADEType ade_classify_vectors(const std::vector<IntVec>& roots, const RatMat& gram) {
    ADEType type;
    if (roots.empty()) return type;
    const size_t m = roots.size();
    auto p = integer_pairings(roots, gram);
    for (size_t i = 0; i < m; ++i)
        if (p[i * m + i] != -2) throw error("ade_classify: vector of norm != -2");

    UnionFind uf(static_cast<int>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (p[i * m + j] != 0) uf.unite(static_cast<int>(i), static_cast<int>(j));

    std::map<int, std::vector<int>> comps;
    for (size_t i = 0; i < m; ++i)
        comps[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));

    for (const auto& [rep, members] : comps) {
        (void)rep;
        IntMat rows(static_cast<int>(members.size()), gram.rows);
        for (size_t i = 0; i < members.size(); ++i)
            for (int j = 0; j < gram.rows; ++j) rows(static_cast<int>(i), j) = roots[members[i]][j];
        IntMat basis = hnf_rows(rows);
        int rank = basis.rows;
        long count = static_cast<long>(members.size());
        RatMat bg = to_rat(basis) * gram * to_rat(basis).transpose();
        Rat disc = det_rat(bg);
        if (den(disc) != 1) throw error("ade_classify: non-integral component discriminant");
        Int adisc = abs(num(disc));

        // (rank, root count, |disc|) separates the families at every rank
        char fam = 0;
        if (count == static_cast<long>(rank) * (rank + 1) && adisc == rank + 1) {
            fam = 'A';
        } else if (rank >= 4 && count == 2L * rank * (rank - 1) && adisc == 4) {
            fam = 'D';
        } else if ((rank == 6 && count == 72 && adisc == 3) ||
                   (rank == 7 && count == 126 && adisc == 2) ||
                   (rank == 8 && count == 240 && adisc == 1)) {
            fam = 'E';
        }
        if (!fam)
            throw error("ade_classify: component (rank " + std::to_string(rank) + ", " +
                        std::to_string(count) + " roots, disc " + adisc.get_str() +
                        ") is not an ADE root system");
        type.add(fam, rank);
    }
    return type;
}

ADEType ade_classify(const RootSet& r) { return ade_classify_vectors(r.roots, r.ambient.gram); }

std::pair<Sublattice, ADEType> root_sublattice(const Lattice& l) {
    auto rs = root_set(l);
    if (rs.roots.empty()) return {Sublattice{l, IntMat(0, l.rank)}, ADEType{}};
    IntMat rows(static_cast<int>(rs.roots.size()), l.rank);
    for (size_t i = 0; i < rs.roots.size(); ++i)
        for (int j = 0; j < l.rank; ++j) rows(static_cast<int>(i), j) = rs.roots[i][j];
    return {Sublattice{l, hnf_rows(rows)}, ade_classify(rs)};
}

std::map<IntVec, Int> dual_coverage(const Lattice& t, const Rat& n) {
    auto sig = signature(t.gram);
    if (sig.first != 0) throw error("dual_coverage: lattice not definite");
    Lattice dv = dual(t);
    auto vecs = vectors_of_norm(dv, n);
    auto df = discriminant_form(t);
    RatMat ginv = inverse(t.gram);
    std::map<IntVec, Int> out;
    for (const auto& w : vecs) {
        // coords w are w.r.t. the dual basis, i.e. the rows of G^{-1}
        RatVec y(t.rank, Rat(0));
        for (int i = 0; i < t.rank; ++i) {
            if (w[i] == 0) continue;
            for (int j = 0; j < t.rank; ++j) y[j] += Rat(w[i]) * ginv(i, j);
        }
        out[df.class_of(y)] += 1;
    }
    return out;
}

}  // namespace latk

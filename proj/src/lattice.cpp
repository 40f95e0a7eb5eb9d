#include "latk/lattice.hpp"

#include <algorithm>

namespace latk {

Lattice make_lattice(RatMat gram, std::string tag) {
    if (!is_symmetric(gram)) throw error("make_lattice: gram matrix not symmetric");
    if (det_rat(gram) == 0) throw error("make_lattice: degenerate gram matrix");
    Lattice l;
    l.rank = gram.rows;
    l.gram = std::move(gram);
    l.tag = std::move(tag);
    return l;
}

Lattice make_lattice(const IntMat& gram, std::string tag) {
    return make_lattice(to_rat(gram), std::move(tag));
}

bool lattice_is_integral(const Lattice& l) { return is_integral(l.gram); }

bool lattice_is_even(const Lattice& l) {
    if (!lattice_is_integral(l)) return false;
    for (int i = 0; i < l.rank; ++i)
        if (to_int(l.gram(i, i)) % 2 != 0) return false;
    return true;
}

Lattice hyperbolic_plane_U() {
    return make_lattice(IntMat::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}}), "U");
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    RatMat g(a.rank + b.rank, a.rank + b.rank);
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) g(i, j) = a.gram(i, j);
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) g(a.rank + i, a.rank + j) = b.gram(i, j);
    std::string tag = a.tag.empty() || b.tag.empty() ? a.tag + b.tag : a.tag + "+" + b.tag;
    return make_lattice(std::move(g), tag);
}

Lattice root_lattice(char family, int n) {
    auto edge_list = [&]() -> std::vector<std::pair<int, int>> {
        std::vector<std::pair<int, int>> e;
        switch (family) {
            case 'A':
                if (n < 1) throw error("root_lattice: A_n needs n >= 1");
                for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
                return e;
            case 'D':
                if (n < 4) throw error("root_lattice: D_n needs n >= 4");
                for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
                e.push_back({n - 3, n - 1});
                return e;
            case 'E': {
                if (n < 6 || n > 8) throw error("root_lattice: E_n needs n in {6,7,8}");
                // Bourbaki numbering: node 2 hangs off node 4 of the chain 1-3-4-5-...
                e = {{0, 2}, {2, 3}, {1, 3}};
                for (int i = 3; i + 1 < n; ++i) e.push_back({i, i + 1});
                return e;
            }
            default:
                throw error("root_lattice: unknown family");
        }
    }();
    IntMat g(n, n);
    for (int i = 0; i < n; ++i) g(i, i) = -2;
    for (auto [i, j] : edge_list) {
        g(i, j) = 1;
        g(j, i) = 1;
    }
    return make_lattice(g, std::string(1, family) + std::to_string(n));
}

Lattice dual(const Lattice& l) {
    return make_lattice(inverse(l.gram), l.tag.empty() ? "" : l.tag + "^v");
}

Lattice rescale(const Lattice& l, const Rat& m) {
    if (m == 0) throw error("rescale: zero scale factor");
    RatMat g = l.gram;
    for (auto& x : g.a) x *= m;
    return make_lattice(std::move(g), l.tag.empty() ? "" : l.tag + "(" + m.get_str() + ")");
}

Lattice dual_rescale_p(const Lattice& l, const Int& p) {
    if (!lattice_is_even(l)) throw error("dual_rescale_p: not even");
    RatMat ginv = inverse(l.gram);
    RatMat pg = ginv;
    for (auto& x : pg.a) x *= Rat(p);
    if (!is_integral(pg)) throw error("dual_rescale_p: not p-elementary");
    if (p == 2) {
        auto df = discriminant_form(l);
        for (const auto& qi : df.q)
            if (!is_integer(qi)) throw error("dual_rescale_p: not type I");
    }
    Lattice out = make_lattice(std::move(pg), l.tag.empty() ? "" : l.tag + "^v(" + p.get_str() + ")");
    if (!lattice_is_even(out)) throw error("dual_rescale_p: output not even (input invalid)");
    return out;
}

Int DiscriminantForm::order() const {
    Int o = 1;
    for (const auto& d : orders) o *= d;
    return o;
}

int DiscriminantForm::p_rank(const Int& p) const {
    int r = 0;
    for (const auto& d : orders)
        if (d % p == 0) ++r;
    return r;
}

Rat DiscriminantForm::q_of(const IntVec& coeffs) const {
    if (coeffs.size() != orders.size()) throw error("DiscriminantForm::q_of: wrong length");
    Rat s(0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        s += Rat(coeffs[i] * coeffs[i]) * q[i];
        for (size_t j = i + 1; j < coeffs.size(); ++j)
            s += Rat(2 * coeffs[i] * coeffs[j]) * bilinear(static_cast<int>(i), static_cast<int>(j));
    }
    return mod_into(s, Rat(2));
}

IntVec DiscriminantForm::class_of(const RatVec& dual_vector) const {
    // pairing coordinates x = G y are integers for y in the dual; the class
    // of y in Z^n / G Z^n has SNF coordinates U x.
    const int n = source_gram.rows;
    if (static_cast<int>(dual_vector.size()) != n) throw error("class_of: wrong length");
    RatVec xr = source_gram * dual_vector;
    IntVec x(n);
    for (int i = 0; i < n; ++i) {
        if (!is_integer(xr[i])) throw error("class_of: vector not in the dual");
        x[i] = to_int(xr[i]);
    }
    IntVec z = u_transform * x;
    IntVec cls(kept.size());
    for (size_t k = 0; k < kept.size(); ++k) {
        Int d = orders[k];
        cls[k] = ((z[kept[k]] % d) + d) % d;
    }
    return cls;
}

std::vector<IntVec> DiscriminantForm::all_classes() const {
    Int total = order();
    if (total > 100000) throw error("DiscriminantForm::all_classes: group too large");
    std::vector<IntVec> out;
    IntVec cur(orders.size(), Int(0));
    while (true) {
        out.push_back(cur);
        size_t k = 0;
        while (k < orders.size()) {
            cur[k] += 1;
            if (cur[k] < orders[k]) break;
            cur[k] = 0;
            ++k;
        }
        if (k == orders.size()) break;
    }
    return out;
}

DiscriminantForm discriminant_form(const Lattice& l) {
    if (!lattice_is_even(l)) throw error("discriminant_form: lattice not even integral");
    IntMat g = to_int(l.gram);
    auto s = smith_normal_form(g);
    RatMat uinv = inverse(to_rat(s.u));
    RatMat ginv = inverse(l.gram);

    DiscriminantForm df;
    df.source_gram = l.gram;
    df.u_transform = s.u;
    std::vector<int>& keep = df.kept;
    for (int i = 0; i < l.rank; ++i)
        if (s.d(i, i) > 1) keep.push_back(i);
    df.orders.reserve(keep.size());
    df.generators = RatMat(static_cast<int>(keep.size()), l.rank);
    for (size_t k = 0; k < keep.size(); ++k) {
        int i = keep[k];
        df.orders.push_back(s.d(i, i));
        // dual vector G^{-1} U^{-1} e_i
        for (int r = 0; r < l.rank; ++r) {
            Rat v(0);
            for (int c = 0; c < l.rank; ++c) v += ginv(r, c) * uinv(c, i);
            df.generators(static_cast<int>(k), r) = v;
        }
    }
    int m = df.generators.rows;
    df.q.resize(m);
    df.bilinear = RatMat(m, m);
    for (int i = 0; i < m; ++i) {
        RatVec yi = df.generators.row(i);
        df.q[i] = mod_into(pair_with(l.gram, yi, yi), Rat(2));
        for (int j = 0; j < m; ++j) {
            RatVec yj = df.generators.row(j);
            df.bilinear(i, j) = mod_into(pair_with(l.gram, yi, yj), Rat(1));
        }
    }
    return df;
}

std::pair<int, int> signature(const RatMat& gram) {
    if (!is_symmetric(gram)) throw error("signature: not symmetric");
    RatMat a = gram;
    const int n = a.rows;
    int pos = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            int piv = -1;
            for (int j = k + 1; j < n; ++j)
                if (a(j, j) != 0) { piv = j; break; }
            if (piv >= 0) {
                a.swap_rows(k, piv);
                a.swap_cols(k, piv);
            } else {
                int j2 = -1;
                for (int j = k + 1; j < n; ++j)
                    if (a(k, j) != 0) { j2 = j; break; }
                if (j2 < 0) throw error("signature: degenerate form");
                // x_k += x_j2 turns the zero diagonal entry into 2*a(k,j2)
                for (int c = 0; c < n; ++c) a(k, c) += a(j2, c);
                for (int r = 0; r < n; ++r) a(r, k) += a(r, j2);
            }
        }
        if (a(k, k) > 0) ++pos; else ++neg;
        for (int i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / a(k, k);
            for (int c = k; c < n; ++c) a(i, c) -= f * a(k, c);
            for (int r = k; r < n; ++r) a(r, i) -= f * a(r, k);  // keep symmetric
        }
    }
    return {pos, neg};
}

ClassifyRecord classify(const Lattice& l, const Int& p) {
    ClassifyRecord r;
    r.integral = lattice_is_integral(l);
    if (!r.integral) throw error("classify: lattice not integral");
    r.even = lattice_is_even(l);
    r.discriminant = to_int(det_rat(l.gram));
    r.signature = signature(l.gram);
    r.unimodular = abs(r.discriminant) == 1;
    r.p = p;
    if (p > 0) {
        RatMat pg = inverse(l.gram);
        for (auto& x : pg.a) x *= Rat(p);
        r.p_elementary = is_integral(pg);
        if (p == 2 && r.even && r.p_elementary) {
            r.type_I = true;
            auto df = discriminant_form(l);
            // 2-elementary: the bilinear form takes values in (1/2)Z/Z, so
            // integrality of q on the generators decides it everywhere
            for (const auto& qi : df.q)
                if (!is_integer(qi)) r.type_I = false;
        }
    }
    return r;
}

Lattice Sublattice::induced(const std::string& tag) const {
    RatMat b = to_rat(basis);
    RatMat g = b * ambient.gram * b.transpose();
    return make_lattice(std::move(g), tag);
}

Sublattice make_sublattice(Lattice ambient, IntMat basis) {
    if (basis.cols != ambient.rank) throw error("make_sublattice: dimension mismatch");
    if (rank_rat(to_rat(basis)) != basis.rows)
        throw error("make_sublattice: dependent generator rows");
    return Sublattice{std::move(ambient), std::move(basis)};
}

namespace {

IntMat scale_to_int(const RatMat& m) {
    Int l = 1;
    for (const auto& x : m.a) l = lcm(l, den(x));
    IntMat r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r(i, j) = to_int(m(i, j) * Rat(l));
    return r;
}

}  // namespace

Sublattice orthogonal_complement(const Sublattice& s) {
    RatMat bg = to_rat(s.basis) * s.ambient.gram;
    if (det_rat(to_rat(s.basis) * s.ambient.gram * to_rat(s.basis).transpose()) == 0)
        throw error("orthogonal_complement: degenerate sublattice");
    IntMat kern = kernel_int(scale_to_int(bg));
    return Sublattice{s.ambient, kern};
}

Sublattice saturation(const Sublattice& s) {
    RatMat ann = kernel_rat(to_rat(s.basis));
    if (ann.rows == 0)
        return Sublattice{s.ambient, hnf_rows(s.basis)};
    IntMat sat = kernel_int(scale_to_int(ann));
    return Sublattice{s.ambient, sat};
}

bool is_primitive(const Sublattice& s) {
    auto f = smith_normal_form(s.basis);
    if (f.rank != s.basis.rows) throw error("is_primitive: dependent rows");
    for (const auto& d : f.invariant_factors())
        if (d != 1) return false;
    return true;
}

Lattice quotient_by_isotropic(const Lattice& amb, const IntVec& f) {
    if (static_cast<int>(f.size()) != amb.rank) throw error("quotient_by_isotropic: bad vector");
    Int g(0);
    for (const auto& x : f) g = gcd(g, x);
    if (g != 1) throw error("quotient_by_isotropic: f not primitive");
    if (amb.norm(f) != 0) throw error("quotient_by_isotropic: f not isotropic");

    RatVec fg = to_rat(f) * amb.gram;
    RatMat row(1, amb.rank);
    for (int j = 0; j < amb.rank; ++j) row(0, j) = fg[j];
    IntMat h = kernel_int(scale_to_int(row));  // basis of <f>^perp, saturated
    auto a = solve_left_int(h, f);
    if (!a) throw error("quotient_by_isotropic: internal (f outside its own perp)");
    const int m = h.rows;
    IntMat arow(1, m);
    for (int j = 0; j < m; ++j) arow(0, j) = (*a)[j];
    auto s = smith_normal_form(arow);  // a * V = e_1 since a is primitive
    IntMat vinv = to_int(inverse(to_rat(s.v)));
    // rows 2..m of V^{-1} are coordinate vectors of quotient representatives
    RatMat reps(m - 1, amb.rank);
    for (int i = 1; i < m; ++i)
        for (int j = 0; j < amb.rank; ++j) {
            Rat v(0);
            for (int k = 0; k < m; ++k) v += Rat(vinv(i, k) * h(k, j));
            reps(i - 1, j) = v;
        }
    RatMat qgram = reps * amb.gram * reps.transpose();
    return make_lattice(std::move(qgram),
                        amb.tag.empty() ? "" : amb.tag + "/<f>");
}

Lattice overlattice_from_glue(const Lattice& l, const std::vector<RatVec>& glue,
                              RatMat* basis_in_l) {
    if (!lattice_is_even(l)) throw error("overlattice_from_glue: base lattice not even");
    for (const auto& g : glue) {
        if (static_cast<int>(g.size()) != l.rank) throw error("overlattice_from_glue: bad vector");
        RatVec pairings = l.gram * g;
        for (const auto& x : pairings)
            if (!is_integer(x)) throw error("overlattice_from_glue: glue vector not in dual");
    }
    const int n = l.rank;
    Int scale = 1;
    for (const auto& g : glue)
        for (const auto& x : g) scale = lcm(scale, den(x));
    IntMat rows(n + static_cast<int>(glue.size()), n);
    for (int i = 0; i < n; ++i) rows(i, i) = scale;
    for (size_t i = 0; i < glue.size(); ++i)
        for (int j = 0; j < n; ++j) rows(n + static_cast<int>(i), j) = to_int(glue[i][j] * Rat(scale));
    IntMat h = hnf_rows(rows);
    if (h.rows != n) throw error("overlattice_from_glue: internal rank loss");
    RatMat b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = make_rat(h(i, j), scale);
    RatMat g2 = b * l.gram * b.transpose();
    if (!is_integral(g2)) throw error("overlattice_from_glue: resulting lattice not integral");
    for (int i = 0; i < n; ++i)
        if (to_int(g2(i, i)) % 2 != 0) throw error("overlattice_from_glue: resulting lattice not even");
    // [M : L]^2 must divide |disc L|
    Rat idx = Rat(1) / det_rat(b);
    Int index = abs(to_int(idx));
    Int discl = abs(to_int(det_rat(l.gram)));
    if (discl % (index * index) != 0)
        throw error("overlattice_from_glue: index^2 does not divide disc (bad glue)");
    if (basis_in_l) *basis_in_l = b;
    return make_lattice(std::move(g2), l.tag.empty() ? "" : l.tag + "+glue");
}

}  // namespace latk

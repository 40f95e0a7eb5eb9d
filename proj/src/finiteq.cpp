#include "latk/finiteq.hpp"

#include <algorithm>
#include <set>

namespace latk {

namespace {

int64_t mod_pos(int64_t x, int64_t p) { return ((x % p) + p) % p; }

int64_t inv_mod(int64_t a, int64_t p) {
    a = mod_pos(a, p);
    for (int64_t x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw error("inv_mod: not invertible");
}

bool is_square_mod(int64_t a, int64_t p) {
    a = mod_pos(a, p);
    for (int64_t x = 0; x < p; ++x)
        if (x * x % p == a) return true;
    return false;
}

}  // namespace

int64_t FiniteQuadraticSpace::bil(const std::vector<int64_t>& x,
                                  const std::vector<int64_t>& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
        throw error("FiniteQuadraticSpace::bil: bad length");
    int64_t s = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            s = (s + mod_pos(x[i], p) * mod_pos(y[j], p) % p * b[i * dim + j]) % p;
    return s;
}

FiniteQuadraticSpace quadratic_space_from_lattice(const Lattice& n, const Int& p) {
    if (p == 2 || p < 3) throw error("quadratic_space_from_lattice: p must be an odd prime");
    auto df = discriminant_form(n);
    for (const auto& d : df.orders)
        if (d != p) throw error("quadratic_space_from_lattice: lattice not p-elementary");
    FiniteQuadraticSpace v;
    v.p = to_long(p);
    v.dim = static_cast<int>(df.orders.size());
    v.b.assign(static_cast<size_t>(v.dim) * v.dim, 0);
    for (int i = 0; i < v.dim; ++i)
        for (int j = 0; j < v.dim; ++j) {
            RatVec yi = df.generators.row(i), yj = df.generators.row(j);
            Rat pr = Rat(p) * pair_with(n.gram, yi, yj);
            if (!is_integer(pr)) throw error("quadratic_space_from_lattice: non-integral pairing");
            Int r = to_int(pr) % p;
            v.b[static_cast<size_t>(i) * v.dim + j] = mod_pos(to_long(r), v.p);
        }
    // nondegeneracy
    RatMat bm(v.dim, v.dim);
    for (int i = 0; i < v.dim; ++i)
        for (int j = 0; j < v.dim; ++j) bm(i, j) = Rat(v.b[static_cast<size_t>(i) * v.dim + j]);
    // determinant mod p must be nonzero
    Int detb = to_int(det_rat(bm)) % p;
    if (detb == 0) throw error("quadratic_space_from_lattice: degenerate form");
    return v;
}

namespace {

// congruence-diagonalize a symmetric matrix over F_p; returns basis rows and
// diagonal values
void diagonalize_fp(const FiniteQuadraticSpace& v, std::vector<std::vector<int64_t>>& basis,
                    std::vector<int64_t>& diag) {
    const int64_t p = v.p;
    int n = v.dim;
    std::vector<std::vector<int64_t>> rows(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) rows[i][i] = 1;
    basis.clear();
    diag.clear();
    while (!rows.empty()) {
        // find a vector of nonzero q among current rows or pair sums
        int pick = -1;
        for (size_t i = 0; i < rows.size(); ++i)
            if (v.q(rows[i]) % p != 0) { pick = static_cast<int>(i); break; }
        if (pick < 0) {
            // all basis vectors isotropic: use u + w with b(u, w) != 0
            bool done = false;
            for (size_t i = 0; i < rows.size() && !done; ++i)
                for (size_t j = i + 1; j < rows.size() && !done; ++j)
                    if (v.bil(rows[i], rows[j]) % p != 0) {
                        for (int k = 0; k < n; ++k)
                            rows[i][k] = mod_pos(rows[i][k] + rows[j][k], p);
                        pick = static_cast<int>(i);
                        done = true;
                    }
            if (!done) {
                // totally isotropic remainder of a nondegenerate form: empty
                for (const auto& r : rows) {
                    for (const auto& other : basis)
                        if (v.bil(r, other) % p != 0)
                            throw error("diagonalize_fp: inconsistency");
                }
                break;
            }
        }
        std::vector<int64_t> u = rows[pick];
        int64_t qu = v.q(u);
        basis.push_back(u);
        diag.push_back(qu);
        // project the rest off u
        std::vector<std::vector<int64_t>> next;
        int64_t inv = inv_mod(qu, p);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == pick) continue;
            auto r = rows[i];
            int64_t c = v.bil(r, u) % p * inv % p;
            for (int k = 0; k < n; ++k) r[k] = mod_pos(r[k] - c * u[k], p);
            next.push_back(std::move(r));
        }
        // drop dependent rows (those that became zero)
        rows.clear();
        for (auto& r : next) {
            bool zero = std::all_of(r.begin(), r.end(), [](int64_t x) { return x == 0; });
            if (!zero) rows.push_back(std::move(r));
        }
    }
}

// some nonzero isotropic vector, or empty if the form is anisotropic
std::vector<int64_t> find_isotropic(const FiniteQuadraticSpace& v) {
    const int64_t p = v.p;
    if (v.dim == 1) return {};
    if (v.dim == 2) {
        for (int64_t x = 0; x < p; ++x)
            for (int64_t y = (x == 0 ? 1 : 0); y < p; ++y) {
                if (x == 0 && y == 0) continue;
                if (v.q({x, y}) % p == 0) return {x, y};
            }
        return {};
    }
    // dim >= 3: diagonalize and solve a x^2 + b y^2 + c z^2 = 0 with z = 1
    std::vector<std::vector<int64_t>> basis;
    std::vector<int64_t> diag;
    diagonalize_fp(v, basis, diag);
    if (basis.size() < 3) throw error("find_isotropic: diagonalization too short");
    int64_t a = diag[0], b = diag[1], c = diag[2];
    for (int64_t x = 0; x < p; ++x)
        for (int64_t y = 0; y < p; ++y) {
            if ((a * x % p * x + b * y % p * y + c) % p == 0) {
                std::vector<int64_t> out(v.dim, 0);
                for (int k = 0; k < v.dim; ++k)
                    out[k] = mod_pos(x * basis[0][k] + y * basis[1][k] + basis[2][k], p);
                return out;
            }
        }
    throw error("find_isotropic: Chevalley violated (not a prime?)");
}

}  // namespace

FormClass classify_form(const FiniteQuadraticSpace& v0) {
    if (v0.dim % 2 != 0) throw error("classify_form: odd dimension");
    const int64_t p = v0.p;
    // work with explicit subspace bases inside the ambient space
    std::vector<std::vector<int64_t>> span(v0.dim, std::vector<int64_t>(v0.dim, 0));
    for (int i = 0; i < v0.dim; ++i) span[i][i] = 1;
    int witt = 0;

    auto restricted = [&](const std::vector<std::vector<int64_t>>& rows) {
        FiniteQuadraticSpace w;
        w.p = p;
        w.dim = static_cast<int>(rows.size());
        w.b.assign(rows.size() * rows.size(), 0);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows.size(); ++j)
                w.b[i * rows.size() + j] = v0.bil(rows[i], rows[j]);
        return w;
    };

    while (span.size() >= 2) {
        FiniteQuadraticSpace w = restricted(span);
        auto iso_local = find_isotropic(w);
        if (iso_local.empty()) break;  // anisotropic kernel
        // lift to ambient coordinates
        std::vector<int64_t> u(v0.dim, 0);
        for (size_t i = 0; i < span.size(); ++i)
            for (int k = 0; k < v0.dim; ++k)
                u[k] = mod_pos(u[k] + iso_local[i] * span[i][k], p);
        // partner w0 with b(u, w0) != 0 inside the current span
        int partner = -1;
        for (size_t i = 0; i < span.size(); ++i)
            if (v0.bil(u, span[i]) % p != 0) { partner = static_cast<int>(i); break; }
        if (partner < 0) throw error("classify_form: isotropic vector in the radical");
        std::vector<int64_t> wv = span[partner];
        int64_t s = inv_mod(v0.bil(u, wv), p);
        for (auto& x : wv) x = x * s % p;                      // b(u, w) = 1
        int64_t lam = v0.q(wv) % p * inv_mod(2, p) % p;        // make w isotropic
        for (int k = 0; k < v0.dim; ++k) wv[k] = mod_pos(wv[k] - lam * u[k], p);
        ++witt;
        // project the span off the hyperbolic plane <u, w>
        std::vector<std::vector<int64_t>> next;
        for (const auto& r : span) {
            auto x = r;
            int64_t cu = v0.bil(x, wv);  // coefficient of u
            int64_t cw = v0.bil(x, u);   // coefficient of w
            for (int k = 0; k < v0.dim; ++k)
                x[k] = mod_pos(x[k] - cu * u[k] - cw * wv[k], p);
            next.push_back(std::move(x));
        }
        // reduce to an independent set via Gaussian elimination
        std::vector<std::vector<int64_t>> reduced;
        for (auto& x : next) {
            auto y = x;
            for (const auto& r : reduced) {
                int lead = 0;
                while (lead < v0.dim && r[lead] == 0) ++lead;
                if (lead < v0.dim && y[lead] != 0) {
                    int64_t f = y[lead] * inv_mod(r[lead], p) % p;
                    for (int k = 0; k < v0.dim; ++k) y[k] = mod_pos(y[k] - f * r[k], p);
                }
            }
            // normalize leading entry
            int lead = 0;
            while (lead < v0.dim && y[lead] == 0) ++lead;
            if (lead == v0.dim) continue;
            int64_t f = inv_mod(y[lead], p);
            for (int k = 0; k < v0.dim; ++k) y[k] = y[k] * f % p;
            // insert keeping rows sorted by leading index
            reduced.push_back(std::move(y));
            std::sort(reduced.begin(), reduced.end(), [&](const auto& r1, const auto& r2) {
                int l1 = 0, l2 = 0;
                while (l1 < v0.dim && r1[l1] == 0) ++l1;
                while (l2 < v0.dim && r2[l2] == 0) ++l2;
                return l1 < l2;
            });
        }
        span = std::move(reduced);
    }
    return (witt == v0.dim / 2) ? FormClass::Neutral : FormClass::NonNeutral;
}

Int isotropic_count(const FiniteQuadraticSpace& v) {
    if (v.dim > 6) throw error("isotropic_count: dimension too large for the oracle");
    Int count = 0;
    std::vector<int64_t> x(v.dim, 0);
    while (true) {
        if (v.q(x) % v.p == 0) ++count;
        int k = 0;
        while (k < v.dim) {
            if (++x[k] < v.p) break;
            x[k] = 0;
            ++k;
        }
        if (k == v.dim) break;
    }
    return count;
}

Int orthogonal_group_order(const Int& p, int dim, int epsilon) {
    if (dim % 2 != 0 || dim <= 0) throw error("orthogonal_group_order: dimension must be even");
    if (epsilon != 1 && epsilon != -1) throw error("orthogonal_group_order: epsilon must be +-1");
    int sigma = dim / 2;
    Int q = p;
    Int order = 2;
    Int qpow;
    mpz_pow_ui(qpow.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(sigma) * (sigma - 1));
    order *= qpow;
    Int qs;
    mpz_pow_ui(qs.get_mpz_t(), q.get_mpz_t(), sigma);
    order *= (qs - epsilon);
    for (int i = 1; i < sigma; ++i) {
        Int q2i;
        mpz_pow_ui(q2i.get_mpz_t(), q.get_mpz_t(), 2u * i);
        order *= (q2i - 1);
    }
    return order;
}

Factorization factor_integer(const Int& n) {
    if (n <= 0) throw error("factor_integer: argument must be positive");
    Factorization f;
    Int m = n;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        f.primes.push_back({d, e});
    }
    if (m > 1) f.primes.push_back({m, 1});
    return f;
}

std::string Factorization::str() const {
    if (primes.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < primes.size(); ++i) {
        if (i) s += " * ";
        s += primes[i].first.get_str();
        if (primes[i].second > 1) s += "^" + std::to_string(primes[i].second);
    }
    return s;
}

int64_t irreducible_c(const Int& p) {
    int64_t pp = to_long(p);
    for (int64_t c = 0; c < pp; ++c)
        if (!is_square_mod(c * c - 4, pp)) return c;
    throw error("irreducible_c: none found (p not an odd prime?)");
}

Fp2 StandardBasis::add(Fp2 x, Fp2 y) const { return {mod_pos(x.a + y.a, p), mod_pos(x.b + y.b, p)}; }

Fp2 StandardBasis::mul(Fp2 x, Fp2 y) const {
    // (a + b alpha)(d + e alpha), alpha^2 = -c alpha - 1
    int64_t a = x.a, b = x.b, d = y.a, e = y.b;
    int64_t re = mod_pos(a * d % p - b * e % p, p);
    int64_t im = mod_pos(a * e % p + b * d % p - c * (b * e % p) % p, p);
    return {re, im};
}

Fp2 StandardBasis::conj(Fp2 x) const { return {mod_pos(x.a - c * x.b, p), mod_pos(-x.b, p)}; }

Fp2 StandardBasis::bil2(const std::vector<Fp2>& x, const std::vector<Fp2>& y) const {
    if (static_cast<int>(x.size()) != space.dim || static_cast<int>(y.size()) != space.dim)
        throw error("StandardBasis::bil2: bad length");
    Fp2 s{0, 0};
    for (int i = 0; i < space.dim; ++i)
        for (int j = 0; j < space.dim; ++j) {
            Fp2 term = mul(x[i], y[j]);
            int64_t w = space.b[static_cast<size_t>(i) * space.dim + j];
            s = add(s, Fp2{term.a * w % p, term.b * w % p});
        }
    return s;
}

std::vector<Fp2> StandardBasis::b_vector(int i, int eps) const {
    if (i < 1 || i > sigma || (eps != 1 && eps != -1)) throw error("b_vector: bad index");
    std::vector<Fp2> v(space.dim, Fp2{0, 0});
    if (i == 1) {
        // b_1^{(-1)} = alpha a_1 + a_2,  b_1^{(1)} = conj(alpha) a_1 + a_2
        v[0] = (eps == -1) ? Fp2{0, 1} : Fp2{mod_pos(-c, p), mod_pos(-1, p)};
        v[1] = Fp2{1, 0};
    } else {
        v[(eps == -1) ? 2 * i - 2 : 2 * i - 1] = Fp2{1, 0};
    }
    return v;
}

StandardBasis build_standard_basis(const Int& p, int sigma) {
    if (sigma < 1) throw error("build_standard_basis: sigma >= 1");
    StandardBasis sb;
    sb.p = to_long(p);
    sb.c = irreducible_c(p);
    sb.sigma = sigma;
    sb.space.p = sb.p;
    sb.space.dim = 2 * sigma;
    sb.space.b.assign(static_cast<size_t>(2 * sigma) * 2 * sigma, 0);
    int64_t inv2 = inv_mod(2, sb.p);
    auto set = [&](int i, int j, int64_t val) {
        sb.space.b[static_cast<size_t>(i) * 2 * sigma + j] = mod_pos(val, sb.p);
        sb.space.b[static_cast<size_t>(j) * 2 * sigma + i] = mod_pos(val, sb.p);
    };
    // f_- = x1^2 + c x1 x2 + x2^2 + x3 x4 + ... as a polar form
    set(0, 0, 1);
    set(1, 1, 1);
    set(0, 1, sb.c * inv2 % sb.p);
    for (int i = 1; i < sigma; ++i) set(2 * i, 2 * i + 1, inv2);

    // verify the pairing table of the b-vectors
    int64_t expected11 = mod_pos((4 - sb.c * sb.c) % sb.p * inv2, sb.p);
    for (int i = 1; i <= sigma; ++i)
        for (int eps : {1, -1}) {
            auto bi = sb.b_vector(i, eps);
            Fp2 qv = sb.bil2(bi, bi);
            if (qv.a != 0 || qv.b != 0) throw error("build_standard_basis: b-vector not isotropic");
            for (int j = 1; j <= sigma; ++j)
                for (int eps2 : {1, -1}) {
                    if (i == j && eps == eps2) continue;
                    Fp2 pr = sb.bil2(bi, sb.b_vector(j, eps2));
                    if (i != j) {
                        if (pr.a != 0 || pr.b != 0)
                            throw error("build_standard_basis: nonzero cross pairing");
                    } else {
                        int64_t want = (i == 1) ? expected11 : inv2;
                        if (pr.a != want || pr.b != 0)
                            throw error("build_standard_basis: wrong diagonal pairing");
                    }
                }
        }
    return sb;
}

std::vector<Fp2> frobenius(const StandardBasis& sb, const std::vector<Fp2>& x) {
    std::vector<Fp2> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = sb.conj(x[i]);
    return y;
}

int rank_fp2(const StandardBasis& sb, std::vector<std::vector<Fp2>> rows) {
    const int64_t p = sb.p;
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    auto is_zero = [](const Fp2& x) { return x.a == 0 && x.b == 0; };
    auto inv = [&](Fp2 x) {
        // (a + b alpha)^{-1} via the norm a^2 - c a b + b^2
        int64_t nrm = mod_pos(x.a * x.a - sb.c * x.a % p * x.b + x.b * x.b, p);
        int64_t ninv = inv_mod(nrm, p);
        Fp2 cj = sb.conj(x);
        return Fp2{cj.a * ninv % p, cj.b * ninv % p};
    };
    size_t col = 0;
    for (size_t r = 0; r < rows.size() && col < cols; ++col) {
        size_t piv = r;
        while (piv < rows.size() && is_zero(rows[piv][col])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Fp2 factor = inv(rows[r][col]);
        for (size_t k = col; k < cols; ++k) rows[r][k] = sb.mul(rows[r][k], factor);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || is_zero(rows[i][col])) continue;
            Fp2 f = rows[i][col];
            for (size_t k = col; k < cols; ++k) {
                Fp2 t = sb.mul(f, rows[r][k]);
                rows[i][k] = {mod_pos(rows[i][k].a - t.a, p), mod_pos(rows[i][k].b - t.b, p)};
            }
        }
        ++r;
        ++rank;
    }
    return rank;
}

bool is_characteristic(const StandardBasis& sb, const std::vector<std::vector<Fp2>>& rows) {
    if (static_cast<int>(rows.size()) != sb.sigma) throw error("is_characteristic: need sigma rows");
    if (rank_fp2(sb, rows) != sb.sigma) return false;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i; j < rows.size(); ++j) {
            Fp2 pr = sb.bil2(rows[i], rows[j]);
            if (pr.a != 0 || pr.b != 0) return false;  // not totally isotropic
        }
    std::vector<std::vector<Fp2>> stacked = rows;
    for (const auto& r : rows) stacked.push_back(frobenius(sb, r));
    // dim(K cap phi K) = sigma - 1  <=>  rank(K union phi K) = sigma + 1
    return rank_fp2(sb, stacked) == sb.sigma + 1;
}

bool SignVector::plus_parity() const {
    int minus = 0;
    for (int x : e) minus += (x == -1);
    return minus % 2 == 0;
}

std::string SignVector::str() const {
    std::string s;
    for (int x : e) s += (x == 1 ? '+' : '-');
    return s;
}

std::vector<FamilyMember> characteristic_family(const StandardBasis& sb) {
    std::vector<FamilyMember> out;
    const int sigma = sb.sigma;
    for (int mask = 0; mask < (1 << sigma); ++mask) {
        FamilyMember m;
        m.e.e.resize(sigma);
        for (int i = 0; i < sigma; ++i) {
            m.e.e[i] = (mask >> i) & 1 ? -1 : 1;
            m.rows.push_back(sb.b_vector(i + 1, m.e.e[i]));
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::vector<int64_t>> a_basis_through(const FiniteQuadraticSpace& v,
                                                  const std::vector<int64_t>& u, int64_t c) {
    const int64_t p = v.p;
    const int n = v.dim;
    if (v.q(u) % p != 0) throw error("a_basis_through: u not isotropic");
    int64_t inv2 = inv_mod(2, p);

    // basis of the current orthogonal complement, in ambient coordinates
    std::vector<std::vector<int64_t>> span(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) span[i][i] = 1;
    std::vector<std::vector<int64_t>> pairs;  // (v_i, u_i) from the back

    auto gauss_reduce = [&](std::vector<std::vector<int64_t>> rows) {
        std::vector<std::vector<int64_t>> red;
        for (auto& x : rows) {
            auto y = x;
            for (const auto& r : red) {
                int lead = 0;
                while (lead < n && r[lead] == 0) ++lead;
                if (lead < n && y[lead] != 0) {
                    int64_t f = y[lead] * inv_mod(r[lead], p) % p;
                    for (int k = 0; k < n; ++k) y[k] = mod_pos(y[k] - f * r[k], p);
                }
            }
            int lead = 0;
            while (lead < n && y[lead] == 0) ++lead;
            if (lead == n) continue;
            int64_t f = inv_mod(y[lead], p);
            for (int k = 0; k < n; ++k) y[k] = y[k] * f % p;
            red.push_back(std::move(y));
            std::sort(red.begin(), red.end(), [&](const auto& r1, const auto& r2) {
                int l1 = 0, l2 = 0;
                while (l1 < n && r1[l1] == 0) ++l1;
                while (l2 < n && r2[l2] == 0) ++l2;
                return l1 < l2;
            });
        }
        return red;
    };

    std::vector<int64_t> uu = u;
    for (auto& x : uu) x = mod_pos(x, p);
    while (true) {
        // partner w with b(u, w) = 1, then v = w - (q(w)/2) u is isotropic
        int pick = -1;
        for (size_t i = 0; i < span.size(); ++i)
            if (v.bil(uu, span[i]) % p != 0) { pick = static_cast<int>(i); break; }
        if (pick < 0) throw error("a_basis_through: u in the radical of the current span");
        auto w = span[pick];
        int64_t sc = inv_mod(v.bil(uu, w), p);
        for (auto& x : w) x = x * sc % p;
        int64_t lam = v.q(w) % p * inv2 % p;
        for (int k = 0; k < n; ++k) w[k] = mod_pos(w[k] - lam * uu[k], p);
        // the f_- hyperbolic pairs carry polar value 1/2, so store w/2
        std::vector<int64_t> whalf = w;
        for (auto& x : whalf) x = x * inv2 % p;
        pairs.push_back(whalf);  // a_{2i-1}
        pairs.push_back(uu);     // a_{2i}
        // orthogonal complement of <u, w> inside the current span
        std::vector<std::vector<int64_t>> next;
        for (const auto& r : span) {
            auto x = r;
            int64_t cu = v.bil(x, w);   // coefficient of u
            int64_t cw = v.bil(x, uu);  // coefficient of w
            for (int k = 0; k < n; ++k) x[k] = mod_pos(x[k] - cu * uu[k] - cw * w[k], p);
            next.push_back(std::move(x));
        }
        span = gauss_reduce(std::move(next));
        if (span.size() == 2) break;
        if (span.size() < 2) throw error("a_basis_through: reduction lost rank");
        // next isotropic vector of the remaining space
        FiniteQuadraticSpace rest;
        rest.p = p;
        rest.dim = static_cast<int>(span.size());
        rest.b.assign(span.size() * span.size(), 0);
        for (size_t i = 0; i < span.size(); ++i)
            for (size_t j = 0; j < span.size(); ++j)
                rest.b[i * span.size() + j] = v.bil(span[i], span[j]);
        auto iso = find_isotropic(rest);
        if (iso.empty()) throw error("a_basis_through: remaining space anisotropic too early");
        std::vector<int64_t> lifted(n, 0);
        for (size_t i = 0; i < span.size(); ++i)
            for (int k = 0; k < n; ++k) lifted[k] = mod_pos(lifted[k] + iso[i] * span[i][k], p);
        uu = lifted;
    }

    // anisotropic plane: a_1 with q = 1, then a_2 with q = 1, b(a_1, a_2) = c/2
    std::vector<int64_t> a1, a2;
    int64_t chalf = c % p * inv2 % p;
    for (int64_t x = 0; x < p && a1.empty(); ++x)
        for (int64_t y = (x == 0 ? 1 : 0); y < p && a1.empty(); ++y) {
            std::vector<int64_t> cand(n, 0);
            for (int k = 0; k < n; ++k) cand[k] = mod_pos(x * span[0][k] + y * span[1][k], p);
            if (v.q(cand) % p == 1) a1 = cand;
        }
    if (a1.empty()) throw error("a_basis_through: no norm-1 vector in the anisotropic plane");
    for (int64_t x = 0; x < p && a2.empty(); ++x)
        for (int64_t y = (x == 0 ? 1 : 0); y < p && a2.empty(); ++y) {
            std::vector<int64_t> cand(n, 0);
            for (int k = 0; k < n; ++k) cand[k] = mod_pos(x * span[0][k] + y * span[1][k], p);
            if (v.q(cand) % p == 1 && v.bil(a1, cand) % p == chalf) a2 = cand;
        }
    if (a2.empty()) throw error("a_basis_through: anisotropic plane is not the norm form");

    std::vector<std::vector<int64_t>> basis;
    basis.push_back(a1);
    basis.push_back(a2);
    // interior pairs first, the pair through u last
    for (size_t q2 = 2; q2 + 1 < pairs.size(); q2 += 2) {
        basis.push_back(pairs[q2]);
        basis.push_back(pairs[q2 + 1]);
    }
    basis.push_back(pairs[0]);
    basis.push_back(pairs[1]);

    // the basis must realize f_- on the nose
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int64_t want = 0;
            if (i == j && i < 2) want = 1;
            if ((i == 0 && j == 1) || (i == 1 && j == 0)) want = c % p * inv2 % p;
            if (i >= 2 && j >= 2 && i / 2 == j / 2 && i != j) want = inv2;
            if (v.bil(basis[i], basis[j]) % p != mod_pos(want, p))
                throw error("a_basis_through: basis does not realize the reference form");
        }
    return basis;
}

namespace {

// K_e family of an a-basis given in ambient coordinates; rows over F_{p^2}
std::vector<std::vector<std::vector<Fp2>>> family_of_basis(
    const StandardBasis& sb, const std::vector<std::vector<int64_t>>& abasis) {
    const int sigma = sb.sigma;
    const int n = 2 * sigma;
    auto bvec = [&](int i, int eps) {
        std::vector<Fp2> out(n, Fp2{0, 0});
        if (i == 1) {
            // alpha a_1 + a_2 (eps = -1) or conj(alpha) a_1 + a_2 (eps = +1)
            Fp2 coef = (eps == -1) ? Fp2{0, 1} : Fp2{mod_pos(-sb.c, sb.p), mod_pos(-1, sb.p)};
            for (int k = 0; k < n; ++k) {
                out[k] = sb.mul(coef, Fp2{abasis[0][k], 0});
                out[k] = sb.add(out[k], Fp2{abasis[1][k], 0});
            }
        } else {
            const auto& a = abasis[(eps == -1) ? 2 * i - 2 : 2 * i - 1];
            for (int k = 0; k < n; ++k) out[k] = Fp2{a[k], 0};
        }
        return out;
    };
    std::vector<std::vector<std::vector<Fp2>>> fams;
    for (int mask = 0; mask < (1 << sigma); ++mask) {
        std::vector<std::vector<Fp2>> rows;
        for (int i = 0; i < sigma; ++i) rows.push_back(bvec(i + 1, (mask >> i) & 1 ? -1 : 1));
        fams.push_back(std::move(rows));
    }
    return fams;
}

// dim of the intersection of two sigma-dim subspaces over F_{p^2}
int intersection_dim(const StandardBasis& sb, const std::vector<std::vector<Fp2>>& k1,
                     const std::vector<std::vector<Fp2>>& k2) {
    auto stacked = k1;
    for (const auto& r : k2) stacked.push_back(r);
    return static_cast<int>(k1.size() + k2.size()) - rank_fp2(sb, stacked);
}

// stabilizer equations of one subspace: b(g w, w') = 0 for w, w' in rows
void append_stab_equations(const StandardBasis& sb, const std::vector<std::vector<Fp2>>& rows,
                           std::vector<std::vector<int64_t>>& eqs) {
    const int64_t pp = sb.p;
    const int n = sb.space.dim;
    for (const auto& w : rows)
        for (const auto& u2 : rows) {
            std::vector<Fp2> bu(n, Fp2{0, 0});
            for (int i = 0; i < n; ++i) {
                Fp2 s{0, 0};
                for (int j = 0; j < n; ++j) {
                    int64_t w8 = sb.space.b[static_cast<size_t>(i) * n + j];
                    s = sb.add(s, Fp2{u2[j].a * w8 % pp, u2[j].b * w8 % pp});
                }
                bu[i] = s;
            }
            std::vector<int64_t> row_re(static_cast<size_t>(n) * n, 0);
            std::vector<int64_t> row_im(static_cast<size_t>(n) * n, 0);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    Fp2 coeff = sb.mul(w[v], bu[u]);
                    row_re[static_cast<size_t>(u) * n + v] = coeff.a;
                    row_im[static_cast<size_t>(u) * n + v] = coeff.b;
                }
            eqs.push_back(std::move(row_re));
            eqs.push_back(std::move(row_im));
        }
}

}  // namespace

StabilizerResult family_stabilizer(const Int& p, int sigma) {
    StandardBasis sb = build_standard_basis(p, sigma);
    const int64_t pp = sb.p;
    const int n = 2 * sigma;

    // ambient coordinates of the defining a-basis are the unit vectors
    std::vector<std::vector<int64_t>> unit_basis(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) unit_basis[i][i] = 1;

    auto primary = family_of_basis(sb, unit_basis);
    // reference member: K_1 (all plus), declared to lie in the plus component
    const auto& kref = primary[0];
    auto in_plus_component = [&](const std::vector<std::vector<Fp2>>& k) {
        // two maximal isotropic subspaces lie in the same component iff their
        // intersection dimension has the parity of sigma
        return (sigma - intersection_dim(sb, kref, k)) % 2 == 0;
    };

    std::vector<std::vector<int64_t>> eqs;
    for (const auto& k : primary)
        if (in_plus_component(k)) append_stab_equations(sb, k, eqs);

    // auxiliary isotropic vectors from the genericity argument
    std::vector<std::vector<int64_t>> extra;
    for (int i = 2; i <= sigma; ++i)
        for (int j = i + 1; j <= sigma; ++j)
            for (int ei : {1, -1})
                for (int ej : {1, -1}) {
                    std::vector<int64_t> u(n, 0);
                    u[(ei == -1) ? 2 * i - 2 : 2 * i - 1] = 1;
                    u[(ej == -1) ? 2 * j - 2 : 2 * j - 1] = mod_pos(
                        u[(ej == -1) ? 2 * j - 2 : 2 * j - 1] + 1, pp);
                    extra.push_back(std::move(u));
                }
    if (sigma >= 3) {
        auto [xi, eta] = solve_xi_eta(p);
        // b_1^{(1)} + b_1^{(-1)} + xi (b_2^{(1)} + b_2^{(-1)}) + eta (b_3 pair)
        std::vector<int64_t> u(n, 0);
        u[0] = mod_pos(-sb.c, pp);  // alpha + conj(alpha) = -c
        u[1] = 2 % pp;
        u[2] = u[3] = xi % pp;
        u[4] = u[5] = eta % pp;
        if (sb.space.q(u) % pp != 0) throw error("family_stabilizer: xi-eta vector not isotropic");
        extra.push_back(std::move(u));
    }
    for (const auto& u : extra) {
        auto abasis = a_basis_through(sb.space, u, sb.c);
        for (const auto& k : family_of_basis(sb, abasis))
            if (in_plus_component(k)) append_stab_equations(sb, k, eqs);
    }

    // nullspace of eqs over F_p
    const int unknowns = n * n;
    std::vector<std::vector<int64_t>> mat = eqs;
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < unknowns && r < static_cast<int>(mat.size()); ++col) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(mat.size()); ++i)
            if (mat[i][col] % pp != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(mat[r], mat[piv]);
        int64_t inv = inv_mod(mat[r][col], pp);
        for (int k = col; k < unknowns; ++k) mat[r][k] = mat[r][k] * inv % pp;
        for (int i = 0; i < static_cast<int>(mat.size()); ++i) {
            if (i == r || mat[i][col] % pp == 0) continue;
            int64_t f = mat[i][col] % pp;
            for (int k = col; k < unknowns; ++k) mat[i][k] = mod_pos(mat[i][k] - f * mat[r][k], pp);
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<char> is_pivot(unknowns, 0);
    for (int c2 : pivot_col) is_pivot[c2] = 1;
    std::vector<std::vector<int64_t>> kernel;
    for (int free = 0; free < unknowns; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int64_t> k(unknowns, 0);
        k[free] = 1;
        for (int i = 0; i < r; ++i) k[pivot_col[i]] = mod_pos(-mat[i][free], pp);
        kernel.push_back(std::move(k));
    }
    if (kernel.size() > 7)
        throw error("family_stabilizer: solution space too large to enumerate");

    // enumerate the solution space, keep the orthogonal ones
    StabilizerResult res;
    res.order = 0;
    std::vector<int64_t> coeff(kernel.size(), 0);
    auto bmat = [&](int i, int j) { return sb.space.b[static_cast<size_t>(i) * n + j]; };
    while (true) {
        std::vector<int64_t> g(static_cast<size_t>(n) * n, 0);
        for (size_t t = 0; t < kernel.size(); ++t) {
            if (coeff[t] == 0) continue;
            for (int u = 0; u < unknowns; ++u) g[u] = mod_pos(g[u] + coeff[t] * kernel[t][u], pp);
        }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i; j < n && ok; ++j) {
                int64_t s = 0;
                for (int u = 0; u < n; ++u) {
                    if (g[static_cast<size_t>(u) * n + i] == 0) continue;
                    for (int v = 0; v < n; ++v)
                        s = (s + g[static_cast<size_t>(u) * n + i] * bmat(u, v) % pp *
                                     g[static_cast<size_t>(v) * n + j]) % pp;
                }
                if (mod_pos(s - bmat(i, j), pp) != 0) ok = false;
            }
        if (ok) {
            res.order += 1;
            if (res.elements.size() < 4096) res.elements.push_back(g);
        }
        size_t t = 0;
        while (t < coeff.size()) {
            if (++coeff[t] < pp) break;
            coeff[t] = 0;
            ++t;
        }
        if (t == coeff.size()) break;
        if (coeff.empty()) break;
    }
    res.scalars_only = (res.order == 2);
    return res;
}

std::pair<int64_t, int64_t> solve_xi_eta(const Int& p) {
    int64_t pp = to_long(p);
    int64_t c = irreducible_c(p);
    int64_t lhs = mod_pos(4 - c * c, pp);
    for (int64_t xi = 0; xi < pp; ++xi)
        for (int64_t eta = 0; eta < pp; ++eta)
            if (mod_pos(lhs + xi * xi + eta * eta, pp) == 0) return {xi, eta};
    throw error("solve_xi_eta: no solution (two-squares argument violated)");
}

}  // namespace latk

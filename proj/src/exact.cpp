#include "latk/exact.hpp"

#include <algorithm>

namespace latk {

IntVec SmithResult::invariant_factors() const {
    IntVec f;
    int n = std::min(d.rows, d.cols);
    for (int i = 0; i < n; ++i)
        if (d(i, i) != 0) f.push_back(d(i, i));
    return f;
}

namespace {

// Pick the nonzero entry of smallest absolute value in d[t.., t..].
bool find_pivot(const IntMat& d, int t, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = t; i < d.rows; ++i)
        for (int j = t; j < d.cols; ++j) {
            if (d(i, j) == 0) continue;
            Int v = abs(d(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

namespace {

// quotient rounded to nearest, keeping remainders at most |b|/2
Int round_div(const Int& a, const Int& b) {
    return floor_rat(Rat(a) / Rat(b) + make_rat(1, 2));
}

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
    SmithResult r;
    r.d = m;
    r.u = IntMat::identity(m.rows);
    r.v = IntMat::identity(m.cols);
    IntMat& d = r.d;
    IntMat& u = r.u;
    IntMat& v = r.v;

    int t = 0;
    const int tmax = std::min(m.rows, m.cols);
    while (t < tmax) {
        // re-select the globally smallest pivot on every pass: together with
        // rounded division this keeps intermediate entries from exploding
        int pi, pj;
        if (!find_pivot(d, t, pi, pj)) break;
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        bool changed = false;
        for (int i = t + 1; i < d.rows; ++i) {
            if (d(i, t) == 0) continue;
            Int q = round_div(d(i, t), d(t, t));
            if (q != 0) {
                d.row_axpy(i, t, q);
                u.row_axpy(i, t, q);
            }
            if (d(i, t) != 0) changed = true;
        }
        for (int j = t + 1; j < d.cols; ++j) {
            if (d(t, j) == 0) continue;
            Int q = round_div(d(t, j), d(t, t));
            if (q != 0) {
                d.col_axpy(j, t, q);
                v.col_axpy(j, t, q);
            }
            if (d(t, j) != 0) changed = true;
        }
        if (changed) continue;  // a strictly smaller pivot exists now

        // divisibility: the pivot must divide the remaining block
        bool fixed = false;
        for (int i = t + 1; i < d.rows && !fixed; ++i)
            for (int j = t + 1; j < d.cols && !fixed; ++j)
                if (d(i, j) % d(t, t) != 0) {
                    for (int k = 0; k < d.cols; ++k) d(t, k) += d(i, k);
                    for (int k = 0; k < d.rows; ++k) u(t, k) += u(i, k);
                    fixed = true;
                }
        if (fixed) continue;

        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
        ++t;
    }
    r.rank = 0;
    for (int i = 0; i < tmax; ++i)
        if (d(i, i) != 0) ++r.rank;
    return r;
}

IntMat hnf_rows(const IntMat& m) {
    IntMat h = m;
    int row = 0;
    for (int col = 0; col < h.cols && row < h.rows; ++col) {
        // gcd-reduce the column at/below `row` into a single pivot
        while (true) {
            int best = -1;
            for (int i = row; i < h.rows; ++i)
                if (h(i, col) != 0 && (best < 0 || abs(h(i, col)) < abs(h(best, col))))
                    best = i;
            if (best < 0) break;  // column is clear below `row`
            h.swap_rows(row, best);
            bool done = true;
            for (int i = row + 1; i < h.rows; ++i) {
                if (h(i, col) == 0) continue;
                Int q = floor_div(h(i, col), h(row, col));
                h.row_axpy(i, row, q);
                if (h(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h(row, col) != 0) {
            if (h(row, col) < 0) h.negate_row(row);
            for (int i = 0; i < row; ++i) {
                Int q = floor_div(h(i, col), h(row, col));
                if (q != 0) h.row_axpy(i, row, q);
            }
            ++row;
        }
    }
    IntMat out(row, h.cols);
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < h.cols; ++j) out(i, j) = h(i, j);
    return out;
}

Int det_int(const IntMat& m) {
    if (m.rows != m.cols) throw error("det_int: non-square matrix");
    const int n = m.rows;
    if (n == 0) return 1;
    IntMat a = m;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rat det_rat(const RatMat& m) {
    if (m.rows != m.cols) throw error("det_rat: non-square matrix");
    const int n = m.rows;
    IntMat scaled(n, n);
    Rat factor(1);
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j) l = lcm(l, den(m(i, j)));
        factor /= Rat(l);
        for (int j = 0; j < n; ++j) scaled(i, j) = to_int(m(i, j) * Rat(l));
    }
    return factor * Rat(det_int(scaled));
}

namespace {

// Reduced row echelon over Q, in place; returns pivot columns.
std::vector<int> rref(RatMat& a) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; ++col) {
        int piv = -1;
        for (int i = row; i < a.rows; ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        a.swap_rows(row, piv);
        Rat inv = Rat(1) / a(row, col);
        for (int j = col; j < a.cols; ++j) a(row, j) *= inv;
        for (int i = 0; i < a.rows; ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (int j = col; j < a.cols; ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

RatMat inverse(const RatMat& m) {
    if (m.rows != m.cols) throw error("inverse: non-square matrix");
    const int n = m.rows;
    RatMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) != n || piv.back() >= n)
        throw error("inverse: singular matrix");
    RatMat r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

int rank_rat(const RatMat& m) {
    RatMat a = m;
    return static_cast<int>(rref(a).size());
}

RatMat kernel_rat(const RatMat& m) {
    RatMat a = m;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    RatMat k(m.cols - static_cast<int>(pivots.size()), m.cols);
    int r = 0;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        k(r, free) = 1;
        for (size_t p = 0; p < pivots.size(); ++p) k(r, pivots[p]) = -a(static_cast<int>(p), free);
        ++r;
    }
    return k;
}

IntMat kernel_int(const IntMat& m) {
    // x V e_i for the zero columns of the Smith form span the kernel, and the
    // result is automatically saturated.
    auto s = smith_normal_form(m);
    int n = m.cols;
    IntMat k(n - s.rank, n);
    for (int i = s.rank; i < n; ++i)
        for (int j = 0; j < n; ++j) k(i - s.rank, j) = s.v(j, i);
    return hnf_rows(k);
}

std::optional<RatVec> solve_rat(const RatMat& m, const RatVec& b) {
    if (m.rows != static_cast<int>(b.size())) throw error("solve_rat: dimension mismatch");
    RatMat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
        aug(i, m.cols) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
    RatVec x(m.cols, Rat(0));
    for (size_t p = 0; p < piv.size(); ++p) x[piv[p]] = aug(static_cast<int>(p), m.cols);
    return x;
}

LinearSolution kernel_and_solve(const IntMat& m, const IntVec& b) {
    if (m.rows != static_cast<int>(b.size()))
        throw error("kernel_and_solve: dimension mismatch");
    LinearSolution out;

    auto s = smith_normal_form(m);
    IntVec c = s.u * b;
    bool consistent = true;
    for (int i = s.rank; i < m.rows; ++i)
        if (c[i] != 0) consistent = false;

    out.rat_kernel = kernel_rat(to_rat(m));
    out.int_kernel = kernel_int(m);

    if (!consistent) return out;  // neither Q nor Z solvable

    out.rat_solvable = true;
    RatVec y(m.cols, Rat(0));
    bool integral = true;
    for (int i = 0; i < s.rank; ++i) {
        y[i] = make_rat(c[i], s.d(i, i));
        if (!is_integer(y[i])) integral = false;
    }
    RatMat vr = to_rat(s.v);
    out.rat_particular = vr * y;
    if (integral) {
        out.int_solvable = true;
        out.int_particular.resize(m.cols);
        for (int i = 0; i < m.cols; ++i) out.int_particular[i] = to_int(out.rat_particular[i]);
    }
    return out;
}

std::optional<IntVec> solve_left_int(const IntMat& m, const IntVec& b) {
    // x * m = b  <=>  m^T x^T = b^T
    auto sol = kernel_and_solve(m.transpose(), b);
    if (!sol.int_solvable) return std::nullopt;
    return sol.int_particular;
}

LeftSolver::LeftSolver(const IntMat& m)
    : s_(smith_normal_form(m.transpose())), rows_(m.rows), cols_(m.cols) {}

std::optional<IntVec> LeftSolver::solve(const IntVec& b) const {
    if (static_cast<int>(b.size()) != cols_) throw error("LeftSolver: dimension mismatch");
    IntVec c = s_.u * b;
    IntVec y(rows_, Int(0));
    for (int i = 0; i < s_.rank; ++i) {
        if (c[i] % s_.d(i, i) != 0) return std::nullopt;
        y[i] = c[i] / s_.d(i, i);
    }
    for (int i = s_.rank; i < cols_; ++i)
        if (c[i] != 0) return std::nullopt;
    return s_.v * y;
}

}  // namespace latk

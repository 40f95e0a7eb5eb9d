#pragma once

#include <initializer_list>
#include <ostream>

#include "latk/numeric.hpp"

namespace latk {

// Dense row-major matrix over Int or Rat. Plain value semantics; all sizes in
// this project are tiny (rank <= 42), so no attempt at sparsity or views.
template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Mat from_rows(std::initializer_list<std::initializer_list<T>> rws) {
        Mat m(static_cast<int>(rws.size()), rws.size() ? static_cast<int>(rws.begin()->size()) : 0);
        int i = 0;
        for (const auto& r : rws) {
            if (static_cast<int>(r.size()) != m.cols) throw error("Mat::from_rows: ragged rows");
            int j = 0;
            for (const auto& x : r) m(i, j++) = x;
            ++i;
        }
        return m;
    }

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    std::vector<T> row(int i) const {
        return std::vector<T>(a.begin() + static_cast<size_t>(i) * cols,
                              a.begin() + static_cast<size_t>(i + 1) * cols);
    }
    void set_row(int i, const std::vector<T>& v) {
        for (int j = 0; j < cols; ++j) (*this)(i, j) = v[j];
    }

    Mat transpose() const {
        Mat m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator<(const Mat& o) const {  // lexicographic; for map keys
        if (rows != o.rows) return rows < o.rows;
        if (cols != o.cols) return cols < o.cols;
        return a < o.a;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < cols; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < rows; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row i -= q * row j
    void row_axpy(int i, int j, const T& q) {
        for (int k = 0; k < cols; ++k) (*this)(i, k) -= q * (*this)(j, k);
    }
    void col_axpy(int i, int j, const T& q) {
        for (int k = 0; k < rows; ++k) (*this)(k, i) -= q * (*this)(k, j);
    }
    void negate_row(int i) {
        for (int k = 0; k < cols; ++k) (*this)(i, k) = -(*this)(i, k);
    }
    void negate_col(int j) {
        for (int k = 0; k < rows; ++k) (*this)(k, j) = -(*this)(k, j);
    }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols != y.rows) throw error("Mat: dimension mismatch in product");
    Mat<T> z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const T& xv = x(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; ++j) z(i, j) += xv * y(k, j);
        }
    return z;
}

template <class T>
std::vector<T> operator*(const Mat<T>& m, const std::vector<T>& v) {
    if (m.cols != static_cast<int>(v.size())) throw error("Mat: dimension mismatch in mat*vec");
    std::vector<T> r(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
    return r;
}

template <class T>
std::vector<T> operator*(const std::vector<T>& v, const Mat<T>& m) {
    if (m.rows != static_cast<int>(v.size())) throw error("Mat: dimension mismatch in vec*mat");
    std::vector<T> r(m.cols);
    for (int i = 0; i < m.rows; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols; ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

template <class T>
T dot(const std::vector<T>& x, const std::vector<T>& y) {
    if (x.size() != y.size()) throw error("dot: dimension mismatch");
    T s(0);
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// x^T G y
template <class T>
T pair_with(const Mat<T>& g, const std::vector<T>& x, const std::vector<T>& y) {
    return dot(x, g * y);
}

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r(i, j) = Rat(m(i, j));
    return r;
}

inline IntMat to_int(const RatMat& m) {
    IntMat r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r(i, j) = to_int(m(i, j));
    return r;
}

inline bool is_integral(const RatMat& m) {
    for (const auto& x : m.a)
        if (!is_integer(x)) return false;
    return true;
}

inline bool is_symmetric(const RatMat& m) {
    if (m.rows != m.cols) return false;
    for (int i = 0; i < m.rows; ++i)
        for (int j = i + 1; j < m.cols; ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Mat<T>& m) {
    for (int i = 0; i < m.rows; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m(i, j);
        os << "]";
    }
    return os;
}

}  // namespace latk

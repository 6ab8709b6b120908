#pragma once

#include <functional>
#include <vector>

#include "fibrato/mpoly.hpp"
#include "fibrato/upoly.hpp"

namespace fibrato {

template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Mat(int r, int c, const T& fill) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

    T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n, const T& one = T(1)) {
        Mat m(n, n, one - one);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    Mat transpose() const {
        Mat m(cols, rows, rows * cols ? a[0] - a[0] : T());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) throw internal_error("matrix product shape mismatch");
        Mat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const T& v = x.at(i, k);
                if (is_zero(v)) continue;
                for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
            }
        return r;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols) return false;
        for (size_t i = 0; i < x.a.size(); ++i)
            if (!(x.a[i] == y.a[i])) return false;
        return true;
    }

    Mat submatrix(const std::vector<int>& ri, const std::vector<int>& ci) const {
        Mat m(static_cast<int>(ri.size()), static_cast<int>(ci.size()));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = at(ri[i], ci[j]);
        return m;
    }
};

// row-reduction rank over a field; 0 x n and n x 0 have rank 0
template <class K>
int rank(Mat<K> m) {
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!is_zero(m.at(i, col))) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        K inv = K(1) / m.at(r, col);
        for (int j = col; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m.at(i, col))) continue;
            K f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

// basis of the right kernel; empty iff the matrix is injective
template <class K>
std::vector<std::vector<K>> kernel_basis(Mat<K> m) {
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!is_zero(m.at(i, col))) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        K inv = K(1) / m.at(r, col);
        for (int j = col; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m.at(i, col))) continue;
            K f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<std::vector<K>> basis;
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<K> v(m.cols, K(0));
        v[free] = K(1);
        for (int i = 0; i < (int)pivot_col.size(); ++i) v[pivot_col[i]] = -m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
int kernel_dimension(const Mat<K>& m) { return m.cols - rank(m); }

// exact division hooks used by the fraction-free elimination below
inline Rat dom_divexact(const Rat& a, const Rat& b) { return a / b; }
inline Fp dom_divexact(const Fp& a, const Fp& b) { return a / b; }
template <class K>
UPoly<K> dom_divexact(const UPoly<K>& a, const UPoly<K>& b) { return divexact(a, b); }
template <class K>
MPoly<K> dom_divexact(const MPoly<K>& a, const MPoly<K>& b) { return mp_divexact(a, b); }

// Bareiss fraction-free elimination over an integral domain: rank, and the
// determinant when the matrix is square.
template <class D>
struct BareissResult {
    int rank = 0;
    D det;           // valid for square inputs of full rank; zero otherwise
    int sign = 1;
};

template <class D>
BareissResult<D> bareiss(Mat<D> m) {
    BareissResult<D> res;
    int n = std::min(m.rows, m.cols);
    D prev = m.rows && m.cols ? m.a[0] - m.a[0] : D();  // additive zero
    bool have_prev = false;
    int sign = 1;
    int r = 0;
    for (int step = 0; step < n; ++step) {
        int pi = -1, pj = -1;
        for (int i = r; i < m.rows && pi < 0; ++i)
            for (int j = r; j < m.cols; ++j)
                if (!is_zero(m.at(i, j))) { pi = i; pj = j; break; }
        if (pi < 0) break;
        if (pi != r) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pi, j), m.at(r, j));
            sign = -sign;
        }
        if (pj != r) {
            for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, pj), m.at(i, r));
            sign = -sign;
        }
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = r + 1; j < m.cols; ++j) {
                D num = m.at(i, j) * m.at(r, r) - m.at(i, r) * m.at(r, j);
                m.at(i, j) = have_prev ? dom_divexact(num, prev) : num;
            }
            m.at(i, r) = m.at(i, r) - m.at(i, r);  // zero
        }
        prev = m.at(r, r);
        have_prev = true;
        ++r;
    }
    res.rank = r;
    res.sign = sign;
    if (m.rows == m.cols && r == m.rows && m.rows > 0) {
        res.det = sign > 0 ? m.at(r - 1, r - 1) : (m.a[0] - m.a[0]) - m.at(r - 1, r - 1);
    } else if (m.rows == m.cols) {
        res.det = m.rows ? m.a[0] - m.a[0] : D();
    }
    return res;
}

template <class D>
int rank_domain(const Mat<D>& m) { return bareiss(m).rank; }

template <class D>
D determinant(const Mat<D>& m) {
    if (m.rows != m.cols) throw internal_error("determinant of non-square matrix");
    if (m.rows == 0) throw internal_error("determinant of empty matrix");
    return bareiss(m).det;
}

// enumerate k-subsets in lexicographic order
inline bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

template <class D>
std::vector<int> first_combination(int k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

// visit every k x k minor; callback may return false to stop early
template <class D>
void for_each_minor(const Mat<D>& m, int k, const std::function<bool(const D&)>& f) {
    if (k > std::min(m.rows, m.cols) || k <= 0) return;
    std::vector<int> ri = first_combination<D>(k);
    do {
        std::vector<int> ci = first_combination<D>(k);
        do {
            if (!f(determinant(m.submatrix(ri, ci)))) return;
        } while (next_combination(ci, m.cols));
    } while (next_combination(ri, m.rows));
}

}  // namespace fibrato

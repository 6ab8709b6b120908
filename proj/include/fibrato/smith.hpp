#pragma once

#include "fibrato/matrix.hpp"
#include "fibrato/upoly.hpp"

namespace fibrato {

// Smith normal form over K[t], K a field. left * input * right = diag, the
// transforms have nonzero constant determinant, and the nonzero diagonal
// entries are monic with d1 | d2 | ... | dr.
template <class K>
struct SmithForm {
    Mat<UPoly<K>> diag;
    Mat<UPoly<K>> left, right;
    std::vector<UPoly<K>> invariant_factors;  // the nonzero diagonal entries
};

template <class K>
SmithForm<K> smith_normal_form(const Mat<UPoly<K>>& input) {
    using P = UPoly<K>;
    Mat<P> s = input;
    Mat<P> left = Mat<P>::identity(input.rows, P::constant(K(1)));
    Mat<P> right = Mat<P>::identity(input.cols, P::constant(K(1)));

    auto row_axpy = [&](Mat<P>& m, int dst, int src, const P& f) {
        for (int j = 0; j < m.cols; ++j) m.at(dst, j) = m.at(dst, j) - f * m.at(src, j);
    };
    auto col_axpy = [&](Mat<P>& m, int dst, int src, const P& f) {
        for (int i = 0; i < m.rows; ++i) m.at(i, dst) = m.at(i, dst) - f * m.at(i, src);
    };
    auto row_swap = [&](Mat<P>& m, int x, int y) {
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(x, j), m.at(y, j));
    };
    auto col_swap = [&](Mat<P>& m, int x, int y) {
        for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, x), m.at(i, y));
    };

    int n = std::min(s.rows, s.cols);
    for (int d = 0; d < n; ++d) {
        while (true) {
            // minimal-degree nonzero pivot in the trailing block
            int pi = -1, pj = -1, best = -1;
            for (int i = d; i < s.rows; ++i)
                for (int j = d; j < s.cols; ++j)
                    if (!s.at(i, j).zero() && (best < 0 || s.at(i, j).degree() < best)) {
                        best = s.at(i, j).degree();
                        pi = i; pj = j;
                    }
            if (pi < 0) { d = n; break; }
            if (pi != d) { row_swap(s, pi, d); row_swap(left, pi, d); }
            if (pj != d) { col_swap(s, pj, d); col_swap(right, pj, d); }

            bool dirty = false;
            for (int i = d + 1; i < s.rows; ++i) {
                if (s.at(i, d).zero()) continue;
                P q = divmod(s.at(i, d), s.at(d, d)).first;
                row_axpy(s, i, d, q);
                row_axpy(left, i, d, q);
                if (!s.at(i, d).zero()) dirty = true;  // remainder survives, degree dropped
            }
            for (int j = d + 1; j < s.cols; ++j) {
                if (s.at(d, j).zero()) continue;
                P q = divmod(s.at(d, j), s.at(d, d)).first;
                col_axpy(s, j, d, q);
                col_axpy(right, j, d, q);
                if (!s.at(d, j).zero()) dirty = true;
            }
            if (dirty) continue;

            // pivot row/column clear; enforce divisibility of the rest
            bool fixed = true;
            for (int i = d + 1; i < s.rows && fixed; ++i)
                for (int j = d + 1; j < s.cols && fixed; ++j)
                    if (!divmod(s.at(i, j), s.at(d, d)).second.zero()) {
                        // fold the offending row into the pivot row and restart
                        P minus_one = P::constant(K(0) - K(1));
                        row_axpy(s, d, i, minus_one);
                        row_axpy(left, d, i, minus_one);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d >= n) break;
    }

    // monic normalisation by unit row scalings
    SmithForm<K> out;
    for (int d = 0; d < n; ++d) {
        if (s.at(d, d).zero()) continue;
        K lead = s.at(d, d).lead();
        if (!(lead == K(1))) {
            K inv = K(1) / lead;
            for (int j = 0; j < s.cols; ++j) s.at(d, j) = s.at(d, j).scaled(inv);
            for (int j = 0; j < left.cols; ++j) left.at(d, j) = left.at(d, j).scaled(inv);
        }
    }
    out.diag = s;
    out.left = left;
    out.right = right;
    for (int d = 0; d < n; ++d)
        if (!s.at(d, d).zero()) out.invariant_factors.push_back(s.at(d, d));
    return out;
}

// gcd of all k x k minors, monic; zero when every k x k minor vanishes.
// Used as the independent oracle for the invariant-factor products.
template <class K>
UPoly<K> minor_gcd_upoly(const Mat<UPoly<K>>& m, int k) {
    UPoly<K> g;
    for_each_minor<UPoly<K>>(m, k, [&](const UPoly<K>& d) {
        g = gcd(g, d);
        return !(g.degree() == 0);  // stop once the gcd is a constant
    });
    return g;
}

template <class K>
bool smith_verifies(const Mat<UPoly<K>>& input, const SmithForm<K>& sf) {
    if (!(sf.left * input * sf.right == sf.diag)) return false;
    for (size_t i = 1; i < sf.invariant_factors.size(); ++i)
        if (!divmod(sf.invariant_factors[i], sf.invariant_factors[i - 1]).second.zero()) return false;
    if (input.rows && determinant(sf.left).degree() != 0) return false;
    if (input.cols && determinant(sf.right).degree() != 0) return false;
    return true;
}

}  // namespace fibrato

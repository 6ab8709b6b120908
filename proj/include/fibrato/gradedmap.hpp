#pragma once

#include <map>

#include "fibrato/binform.hpp"
#include "fibrato/bundle.hpp"
#include "fibrato/matrix.hpp"
#include "fibrato/rng.hpp"

namespace fibrato {

// Map of split bundles on P^1. Entry (i, j) is a form of degree
// tgt.d[i] - src.d[j]; slots where that difference is negative are
// structural zeros.
template <class K>
struct GradedMap {
    SplitBundle src, tgt;
    Mat<BiForm<K>> m;

    GradedMap() = default;
    GradedMap(SplitBundle s, SplitBundle t)
        : src(std::move(s)), tgt(std::move(t)), m(tgt.rank(), src.rank(), BiForm<K>::zero()) {}

    void set(int i, int j, const BiForm<K>& f) {
        if (!f.zero_form() && f.deg != tgt.d[i] - src.d[j])
            throw math_error("entry degree violates the graded structure");
        m.at(i, j) = f;
    }
    const BiForm<K>& at(int i, int j) const { return m.at(i, j); }

    void validate() const {
        for (int i = 0; i < tgt.rank(); ++i)
            for (int j = 0; j < src.rank(); ++j)
                if (!m.at(i, j).zero_form() && m.at(i, j).deg != tgt.d[i] - src.d[j])
                    throw math_error("entry degree violates the graded structure");
    }

    static GradedMap identity(const SplitBundle& b) {
        GradedMap g(b, b);
        for (int i = 0; i < b.rank(); ++i) g.set(i, i, BiForm<K>::constant(K(1)));
        return g;
    }

    GradedMap twisted(int k) const {
        GradedMap g = *this;
        g.src = twist(src, k);
        g.tgt = twist(tgt, k);
        return g;
    }

    // transpose as a map of the dual bundles
    GradedMap dual_map() const {
        GradedMap g(dual(tgt), dual(src));
        for (int i = 0; i < tgt.rank(); ++i)
            for (int j = 0; j < src.rank(); ++j) g.m.at(j, i) = m.at(i, j);
        return g;
    }

    friend GradedMap compose(const GradedMap& g, const GradedMap& f) {
        if (!(f.tgt == g.src)) throw math_error("composition shape mismatch");
        GradedMap r(f.src, g.tgt);
        r.m = g.m * f.m;
        return r;
    }
};

// H^0 basis of O(e) at twist m: t0^a t1^(e+m-a), a = 0..e+m.
inline int h0_dim_line(int e, int m) { return std::max(e + m + 1, 0); }
// H^1 basis of O(e) at twist m: t0^-a t1^-b, a,b >= 1, a+b = -(e+m).
inline int h1_dim_line(int e, int m) { return std::max(-(e + m) - 1, 0); }

// the matrix of H^0(src(m)) -> H^0(tgt(m)) in the monomial bases
template <class K>
Mat<K> sections_map(const GradedMap<K>& g, int m) {
    std::vector<int> roff(g.tgt.rank() + 1, 0), coff(g.src.rank() + 1, 0);
    for (int i = 0; i < g.tgt.rank(); ++i) roff[i + 1] = roff[i] + h0_dim_line(g.tgt.d[i], m);
    for (int j = 0; j < g.src.rank(); ++j) coff[j + 1] = coff[j] + h0_dim_line(g.src.d[j], m);
    Mat<K> out(roff.back(), coff.back(), K(0));
    for (int i = 0; i < g.tgt.rank(); ++i)
        for (int j = 0; j < g.src.rank(); ++j) {
            const BiForm<K>& f = g.at(i, j);
            if (f.zero_form()) continue;
            int sdim = h0_dim_line(g.src.d[j], m);
            for (int a = 0; a < sdim; ++a)          // t0^a t1^(src+m-a)
                for (int k = 0; k <= f.deg; ++k) {  // t0^k t1^(deg-k)
                    if (is_zero(f.c[k])) continue;
                    out.at(roff[i] + a + k, coff[j] + a) += f.c[k];
                }
        }
    return out;
}

// the induced map on H^1 in the negative monomial basis: multiply, then drop
// monomials that leave the range (both exponents <= -1)
template <class K>
Mat<K> h1_map(const GradedMap<K>& g, int m) {
    std::vector<int> roff(g.tgt.rank() + 1, 0), coff(g.src.rank() + 1, 0);
    for (int i = 0; i < g.tgt.rank(); ++i) roff[i + 1] = roff[i] + h1_dim_line(g.tgt.d[i], m);
    for (int j = 0; j < g.src.rank(); ++j) coff[j + 1] = coff[j] + h1_dim_line(g.src.d[j], m);
    Mat<K> out(roff.back(), coff.back(), K(0));
    for (int i = 0; i < g.tgt.rank(); ++i)
        for (int j = 0; j < g.src.rank(); ++j) {
            const BiForm<K>& f = g.at(i, j);
            if (f.zero_form()) continue;
            int sdim = h1_dim_line(g.src.d[j], m);
            int stot = -(g.src.d[j] + m);  // a + b
            int ttot = -(g.tgt.d[i] + m);
            for (int a = 1; a < sdim + 1; ++a) {  // basis elt t0^-a t1^-(stot-a)
                for (int k = 0; k <= f.deg; ++k) {
                    if (is_zero(f.c[k])) continue;
                    int na = a - k;                  // t0 exponent -na
                    int nb = (stot - a) - (f.deg - k);
                    if (na < 1 || nb < 1) continue;  // truncated away
                    if (na + nb != ttot) throw internal_error("H1 monomial bookkeeping");
                    out.at(roff[i] + (na - 1), coff[j] + (a - 1)) += f.c[k];
                }
            }
        }
    return out;
}

// direct sum in block-diagonal form
template <class K>
GradedMap<K> direct_sum(const GradedMap<K>& a, const GradedMap<K>& b) {
    // preserve summand order: concatenation before re-sorting would scramble
    // the matrix, so we track the permutation induced by sorting
    std::vector<int> sdeg = a.src.d, tdeg = a.tgt.d;
    sdeg.insert(sdeg.end(), b.src.d.begin(), b.src.d.end());
    tdeg.insert(tdeg.end(), b.tgt.d.begin(), b.tgt.d.end());
    GradedMap<K> r;
    r.src = SplitBundle(sdeg);
    r.tgt = SplitBundle(tdeg);
    // SplitBundle sorts; build via stable index maps
    auto perm_of = [](const std::vector<int>& unsorted, const std::vector<int>& sorted) {
        std::vector<int> perm(unsorted.size());
        std::vector<bool> used(unsorted.size(), false);
        for (size_t i = 0; i < unsorted.size(); ++i) {
            for (size_t j = 0; j < sorted.size(); ++j)
                if (!used[j] && sorted[j] == unsorted[i]) {
                    perm[i] = static_cast<int>(j);
                    used[j] = true;
                    break;
                }
        }
        return perm;
    };
    auto sperm = perm_of(sdeg, r.src.d), tperm = perm_of(tdeg, r.tgt.d);
    r.m = Mat<BiForm<K>>(r.tgt.rank(), r.src.rank(), BiForm<K>::zero());
    int sa = a.src.rank(), ta = a.tgt.rank();
    for (int i = 0; i < ta; ++i)
        for (int j = 0; j < sa; ++j) r.m.at(tperm[i], sperm[j]) = a.at(i, j);
    for (int i = 0; i < b.tgt.rank(); ++i)
        for (int j = 0; j < b.src.rank(); ++j) r.m.at(tperm[ta + i], sperm[sa + j]) = b.at(i, j);
    return r;
}

// Induced map on n-th symmetric powers, in the multiset monomial bases of
// sym_power(). Expands the product of images column by column.
template <class K>
GradedMap<K> sym_power(const GradedMap<K>& g, int n) {
    auto sms = multisets(g.src.rank(), n);
    auto tms = multisets(g.tgt.rank(), n);
    std::map<std::vector<int>, int> tindex;
    for (int i = 0; i < (int)tms.size(); ++i) tindex[tms[i]] = i;

    // sym_power(bundle) sorts degrees; recover the permutation multiset->slot
    SplitBundle ssym = sym_power(g.src, n), tsym = sym_power(g.tgt, n);
    std::vector<int> sdeg_unsorted, tdeg_unsorted;
    for (const auto& ms : sms) {
        int s = 0;
        for (int i : ms) s += g.src.d[i];
        sdeg_unsorted.push_back(s);
    }
    for (const auto& ms : tms) {
        int s = 0;
        for (int i : ms) s += g.tgt.d[i];
        tdeg_unsorted.push_back(s);
    }
    auto perm_of = [](const std::vector<int>& unsorted, const std::vector<int>& sorted) {
        std::vector<int> perm(unsorted.size());
        std::vector<bool> used(unsorted.size(), false);
        for (size_t i = 0; i < unsorted.size(); ++i)
            for (size_t j = 0; j < sorted.size(); ++j)
                if (!used[j] && sorted[j] == unsorted[i]) {
                    perm[i] = static_cast<int>(j);
                    used[j] = true;
                    break;
                }
        return perm;
    };
    auto sperm = perm_of(sdeg_unsorted, ssym.d), tperm = perm_of(tdeg_unsorted, tsym.d);

    GradedMap<K> r(ssym, tsym);
    for (int col = 0; col < (int)sms.size(); ++col) {
        // product over the multiset of source indices
        std::map<std::vector<int>, BiForm<K>> acc;
        acc[{}] = BiForm<K>::constant(K(1));
        for (int jsrc : sms[col]) {
            std::map<std::vector<int>, BiForm<K>> next;
            for (const auto& [ms, f] : acc) {
                for (int i = 0; i < g.tgt.rank(); ++i) {
                    const BiForm<K>& e = g.at(i, jsrc);
                    if (e.zero_form()) continue;
                    std::vector<int> nms = ms;
                    nms.insert(std::lower_bound(nms.begin(), nms.end(), i), i);
                    BiForm<K> prod = f * e;
                    auto it = next.find(nms);
                    if (it == next.end()) next[nms] = prod;
                    else it->second = it->second + prod;
                }
            }
            acc = std::move(next);
        }
        for (const auto& [ms, f] : acc) {
            if (f.zero_form()) continue;
            r.m.at(tperm[tindex[ms]], sperm[col]) = f;
        }
    }
    r.validate();
    return r;
}

template <class K>
GradedMap<K> random_graded_map(const SplitBundle& src, const SplitBundle& tgt, Rng& rng,
                               int coeff_range = 5) {
    GradedMap<K> g(src, tgt);
    for (int i = 0; i < tgt.rank(); ++i)
        for (int j = 0; j < src.rank(); ++j) {
            int deg = tgt.d[i] - src.d[j];
            if (deg < 0) continue;
            std::vector<K> c(deg + 1, K(0));
            for (auto& x : c) x = K(static_cast<int>(rng.range(-coeff_range, coeff_range)));
            BiForm<K> f;
            bool allz = true;
            for (auto& x : c) allz = allz && is_zero(x);
            if (!allz) f = BiForm<K>(deg, c);
            g.m.at(i, j) = f;
        }
    return g;
}

}  // namespace fibrato

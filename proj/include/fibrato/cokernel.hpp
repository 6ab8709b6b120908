#pragma once

#include <optional>

#include "fibrato/gradedmap.hpp"
#include "fibrato/smith.hpp"

namespace fibrato {

// Finite-length sheaf on P^1: rational support points in homogeneous
// coordinates with their invariant-factor valuations, plus any part of the
// support we could not split into rational points (kept as a polynomial
// factor with its total length).
template <class K>
struct P1Torsion {
    struct Place {
        K p0, p1;                    // homogeneous coordinates (p0 : p1)
        std::vector<int> valuations; // ascending along the invariant-factor chain
        int length() const {
            int s = 0;
            for (int v : valuations) s += v;
            return s;
        }
    };
    std::vector<Place> places;
    std::vector<std::pair<UPoly<K>, int>> unresolved;  // (factor on chart t1=1, length)

    int length() const {
        int s = 0;
        for (const auto& pl : places) s += pl.length();
        for (const auto& [f, l] : unresolved) s += l;
        return s;
    }
    bool empty() const { return places.empty() && unresolved.empty(); }
};

template <class K>
std::vector<std::pair<K, int>> field_roots(const UPoly<K>& f);

template <>
inline std::vector<std::pair<Rat, int>> field_roots<Rat>(const UPoly<Rat>& f) {
    return rational_roots(f);
}
template <>
inline std::vector<std::pair<Fp, int>> field_roots<Fp>(const UPoly<Fp>& f) {
    Rng rng(0x5eedf00dULL);
    return fp_roots(f, rng);
}

template <class K>
struct CokernelAnalysis {
    bool injective = false;
    int generic_rank = 0;
    P1Torsion<K> torsion;
    SplitBundle locally_free;   // the cokernel modulo its torsion subsheaf
    bool cokernel_locally_free = false;  // no torsion at all
};

namespace detail {

template <class K>
Mat<UPoly<K>> chart_matrix(const GradedMap<K>& g, bool at_zero_chart) {
    Mat<UPoly<K>> m(g.tgt.rank(), g.src.rank());
    for (int i = 0; i < g.tgt.rank(); ++i)
        for (int j = 0; j < g.src.rank(); ++j)
            m.at(i, j) = at_zero_chart ? g.at(i, j).chart0() : g.at(i, j).chart1();
    return m;
}

// split an invariant factor into rational places + an unresolved rest
template <class K>
void collect_places(const UPoly<K>& f, int chain_pos, bool from_infinity_chart,
                    P1Torsion<K>& out) {
    if (f.zero() || f.degree() <= 0) return;
    UPoly<K> rest = f;
    for (const auto& [root, mult] : field_roots<K>(f)) {
        K p0 = from_infinity_chart ? K(1) : root;
        K p1 = from_infinity_chart ? root : K(1);
        if (from_infinity_chart && is_zero(root)) { p0 = K(1); p1 = K(0); }
        // merge into an existing place if present
        bool merged = false;
        for (auto& pl : out.places)
            if (pl.p0 == p0 && pl.p1 == p1) {
                while ((int)pl.valuations.size() <= chain_pos) pl.valuations.push_back(0);
                pl.valuations[chain_pos] += mult;
                merged = true;
            }
        if (!merged) {
            typename P1Torsion<K>::Place pl;
            pl.p0 = p0;
            pl.p1 = p1;
            pl.valuations.assign(chain_pos + 1, 0);
            pl.valuations[chain_pos] = mult;
            out.places.push_back(pl);
        }
        UPoly<K> lin(std::vector<K>{-root, K(1)});
        for (int i = 0; i < mult; ++i) rest = divexact(rest, lin);
    }
    if (rest.degree() > 0) out.unresolved.push_back({make_monic(rest), rest.degree()});
}

}  // namespace detail

// Kernel/cokernel bookkeeping for a graded map with known kernel bundle data.
// kernel_rank / kernel_degree describe the kernel subsheaf (zero for an
// injective map); the caller supplies them when the map sits in an exact
// complex whose kernel it understands. extra_h0_correction(m) is
// dim ker H1(psi at m) adjusted for the kernel's cohomology.
template <class K>
CokernelAnalysis<K> analyze_cokernel_with_kernel(const GradedMap<K>& g, int kernel_rank,
                                                 int kernel_degree,
                                                 const std::function<int(int)>& h0_correction) {
    CokernelAnalysis<K> out;
    const int s = g.src.rank(), t = g.tgt.rank();

    Mat<UPoly<K>> m0 = detail::chart_matrix(g, true);
    out.generic_rank = rank_domain(m0);
    out.injective = (out.generic_rank == s);
    if (out.generic_rank != s - kernel_rank)
        throw math_error("kernel rank does not match the generic rank drop");

    // torsion of the cokernel: invariant factors on both charts
    auto sm0 = smith_normal_form(m0);
    for (int i = 0; i < (int)sm0.invariant_factors.size(); ++i)
        detail::collect_places(sm0.invariant_factors[i], i, false, out.torsion);
    auto sm1 = smith_normal_form(detail::chart_matrix(g, false));
    for (int i = 0; i < (int)sm1.invariant_factors.size(); ++i) {
        // only the place at infinity is new on this chart
        const UPoly<K>& f = sm1.invariant_factors[i];
        int v = 0;
        while (v <= f.degree() && is_zero(f.coeff(v))) ++v;
        if (v > 0) {
            UPoly<K> tpow = UPoly<K>::monomial(K(1), v);
            detail::collect_places(tpow, i, true, out.torsion);
        }
    }
    const int ell = out.torsion.length();
    out.cokernel_locally_free = (ell == 0);

    const int q = t - out.generic_rank;
    if (q == 0) {
        if (ell != g.tgt.degree() - (g.src.degree() - kernel_degree))
            throw math_error("torsion length disagrees with degree additivity");
        return out;
    }

    const int deg_image = g.src.degree() - kernel_degree;
    const int deg_lf = g.tgt.degree() - deg_image - ell;
    int lo = g.tgt.d.empty() ? 0 : g.tgt.d.back();   // quotient bundle degrees are >= this
    int hi = deg_lf - (q - 1) * lo;
    std::map<int, int> profile;
    for (int m = -hi - 2; m <= -lo + 1; ++m) {
        int corr = h0_correction(m);
        int h = h0(g.tgt, m) - h0(g.src, m) + corr - ell;
        profile[m] = h;
    }
    out.locally_free = splitting_from_h0_profile(profile, q);
    if (out.locally_free.degree() != deg_lf)
        throw math_error("cokernel degree disagrees with degree additivity");
    return out;
}

// cokernel of an injective graded map
template <class K>
CokernelAnalysis<K> analyze_cokernel(const GradedMap<K>& g) {
    auto corr = [&](int m) { return kernel_dimension(h1_map(g, m)); };
    auto out = analyze_cokernel_with_kernel<K>(g, 0, 0, corr);
    if (!out.injective) throw math_error("map is not injective");
    return out;
}

// Cokernel of psi in a two-term complex  k --B--> e --psi--> f  with
// psi o B = 0, B fiberwise injective and ker(psi) = im(B) as sheaves.
// h0(coker(m)) = h0(F) - h0(E) + h0(K) - h1(K) + dim ker H1(psi).
template <class K>
CokernelAnalysis<K> analyze_cokernel_of_complex(const GradedMap<K>& b, const GradedMap<K>& psi) {
    if (!(b.tgt == psi.src)) throw math_error("complex shape mismatch");
    for (const auto& e : compose(psi, b).m.a)
        if (!e.zero_form()) throw math_error("not a complex: psi o B != 0");
    Mat<UPoly<K>> b0 = detail::chart_matrix(b, true);
    if (rank_domain(b0) != b.src.rank()) throw math_error("kernel map is not injective");
    auto corr = [&](int m) {
        return kernel_dimension(h1_map(psi, m)) + h0(b.src, m) - h1(b.src, m);
    };
    return analyze_cokernel_with_kernel<K>(psi, b.src.rank(), b.src.degree(), corr);
}

// gcd of the k x k minors of the graded matrix, content-normalised; the zero
// polynomial is returned when every k x k minor vanishes identically.
template <class K>
BiForm<K> minor_gcd(const GradedMap<K>& g, int k) {
    if (k > std::min(g.tgt.rank(), g.src.rank()))
        throw math_error("minor order exceeds matrix size");
    BiForm<K> acc;
    bool constant = false;
    for_each_minor<BiForm<K>>(g.m, k, [&](const BiForm<K>& d) {
        acc = gcd(acc, d);
        constant = !acc.zero_form() && acc.deg == 0;
        return !constant;
    });
    return acc;
}

}  // namespace fibrato

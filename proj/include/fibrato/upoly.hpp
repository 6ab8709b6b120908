#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "fibrato/rng.hpp"
#include "fibrato/scalar.hpp"

namespace fibrato {

// Dense univariate polynomial over a field. Zero is the empty coefficient
// vector; degree() of zero is -1.
template <class K>
struct UPoly {
    std::vector<K> c;  // c[i] * t^i

    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
    static UPoly constant(const K& k) {
        UPoly p;
        if (!is_zero(k)) p.c = {k};
        return p;
    }
    static UPoly monomial(const K& k, int e) {
        UPoly p;
        if (is_zero(k)) return p;
        p.c.assign(e + 1, K(0));
        p.c[e] = k;
        return p;
    }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const K& lead() const { return c.back(); }
    K coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : K(0); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < r.c.size(); ++i) {
            K s = K(0);
            if (i < a.c.size()) s += a.c[i];
            if (i < b.c.size()) s += b.c[i];
            r.c[i] = s;
        }
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < r.c.size(); ++i) {
            K s = K(0);
            if (i < a.c.size()) s += a.c[i];
            if (i < b.c.size()) s -= b.c[i];
            r.c[i] = s;
        }
        r.trim();
        return r;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.zero() || b.zero()) return UPoly();
        UPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    UPoly scaled(const K& k) const {
        if (is_zero(k)) return UPoly();
        UPoly r = *this;
        for (auto& x : r.c) x *= k;
        return r;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c.size() != b.c.size()) return false;
        for (size_t i = 0; i < a.c.size(); ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    K eval(const K& x) const {
        K r = K(0);
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }
};

template <class K>
inline bool is_zero(const UPoly<K>& p) { return p.zero(); }

template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.zero()) throw math_error("polynomial division by zero");
    UPoly<K> q, r = a;
    if (r.degree() < b.degree()) return {q, r};
    q.c.assign(r.degree() - b.degree() + 1, K(0));
    K binv = K(1) / b.lead();
    while (!r.zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        K f = r.lead() * binv;
        q.c[d] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[d + i] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class K>
UPoly<K> divexact(const UPoly<K>& a, const UPoly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.zero()) throw math_error("inexact polynomial division");
    return q;
}

template <class K>
UPoly<K> make_monic(UPoly<K> p) {
    if (p.zero()) return p;
    K inv = K(1) / p.lead();
    for (auto& x : p.c) x *= inv;
    return p;
}

template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// multiplicity of the root x in p, by repeated exact division by (t - x)
template <class K>
int root_multiplicity(UPoly<K> p, const K& x) {
    if (p.zero()) throw math_error("root multiplicity of zero polynomial");
    K one = x * K(0) + K(1);  // unit in the same field as x
    UPoly<K> lin(std::vector<K>{-x, one});
    int m = 0;
    while (!p.zero() && is_zero(p.eval(x))) {
        p = divexact(p, lin);
        ++m;
    }
    return m;
}

// --- root finding over a prime field (Cantor-Zassenhaus, linear factors) ---

inline UPoly<Fp> powmod(UPoly<Fp> base, uint64_t e, const UPoly<Fp>& mod) {
    uint32_t p = mod.lead().p;
    UPoly<Fp> r = UPoly<Fp>::constant(Fp(1, p));
    base = divmod(base, mod).second;
    while (e) {
        if (e & 1) r = divmod(r * base, mod).second;
        base = divmod(base * base, mod).second;
        e >>= 1;
    }
    return r;
}

// all roots in F_p with multiplicity, as (root, multiplicity)
inline std::vector<std::pair<Fp, int>> fp_roots(const UPoly<Fp>& f, Rng& rng) {
    std::vector<std::pair<Fp, int>> out;
    if (f.zero() || f.degree() == 0) return out;
    uint32_t p = f.lead().p;
    UPoly<Fp> g = make_monic(f);

    // strip multiplicities later; first isolate the product of distinct linear factors
    UPoly<Fp> x = UPoly<Fp>::monomial(Fp(1, p), 1);
    UPoly<Fp> xp = powmod(x, p, g);
    UPoly<Fp> lin = gcd(g, xp - x);  // splits into distinct linear factors

    std::vector<UPoly<Fp>> stack;
    if (lin.degree() >= 1) stack.push_back(lin);
    std::vector<Fp> roots;
    while (!stack.empty()) {
        UPoly<Fp> h = stack.back();
        stack.pop_back();
        if (h.degree() == 1) {
            roots.push_back(-h.c[0]);  // monic t + c0
            continue;
        }
        if (h.degree() == 0) continue;
        // random split: gcd(h, (t + r)^((p-1)/2) - 1)
        while (true) {
            Fp r(static_cast<int64_t>(rng.below(p)), p);
            UPoly<Fp> shift(std::vector<Fp>{r, Fp(1, p)});
            UPoly<Fp> w = powmod(shift, (p - 1) / 2, h) - UPoly<Fp>::constant(Fp(1, p));
            UPoly<Fp> d = gcd(h, w);
            if (d.degree() >= 1 && d.degree() < h.degree()) {
                stack.push_back(d);
                stack.push_back(divexact(h, d));
                break;
            }
        }
    }
    for (const Fp& r : roots) out.push_back({r, root_multiplicity(g, r)});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first.v < b.first.v; });
    return out;
}

// Rational roots of a Q[t] polynomial found via the rational root theorem on
// the primitive integer model. Pairs (root, multiplicity). Huge lead/trail
// coefficients only lose us the factorisation, never correctness: callers
// treat unfound factors as unresolved places.
inline std::vector<std::pair<Rat, int>> rational_roots(const UPoly<Rat>& f) {
    std::vector<std::pair<Rat, int>> out;
    if (f.zero() || f.degree() == 0) return out;
    UPoly<Rat> g = f;
    // clear denominators
    mpz_class den = 1;
    for (const auto& x : g.c) den = lcm(den, x.get_den());
    std::vector<mpz_class> ic;
    for (const auto& x : g.c) ic.push_back(mpz_class(x * Rat(den)));
    // strip t^k
    int k = 0;
    while (k < (int)ic.size() && ic[k] == 0) ++k;
    if (k > 0) out.push_back({Rat(0), k});
    if (k >= (int)ic.size() - 1) return out;
    mpz_class a0 = abs(ic[k]), an = abs(ic.back());

    auto divisors = [](mpz_class n) {
        std::vector<mpz_class> ds;
        if (!n.fits_slong_p() || std::abs(n.get_si()) > 2000000) return ds;  // give up, caller copes
        long m = std::labs(n.get_si());
        for (long d = 1; (long long)d * d <= m; ++d)
            if (m % d == 0) {
                ds.push_back(d);
                ds.push_back(m / d);
            }
        return ds;
    };
    auto ps = divisors(a0), qs = divisors(an);
    for (const auto& p : ps)
        for (const auto& q : qs)
            for (int s : {1, -1}) {
                Rat cand(s * p, q);
                cand.canonicalize();
                if (is_zero(f.eval(cand))) {
                    bool seen = false;
                    for (auto& e : out) seen = seen || e.first == cand;
                    if (!seen) out.push_back({cand, root_multiplicity(f, cand)});
                }
            }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace fibrato

#pragma once

#include <limits>
#include <sstream>
#include <vector>

#include "fibrato/upoly.hpp"

namespace fibrato {

inline constexpr int kNegInf = std::numeric_limits<int>::min() / 2;

// Homogeneous form in t0, t1 over a field. coeff[i] multiplies t0^i t1^(d-i).
// The zero form has degree tag -infinity and no coefficients.
template <class K>
struct BiForm {
    int deg = kNegInf;
    std::vector<K> c;

    BiForm() = default;
    BiForm(int d, std::vector<K> coeffs) : deg(d), c(std::move(coeffs)) {
        if (deg < 0) throw internal_error("negative form degree");
        if ((int)c.size() != deg + 1) throw internal_error("form coefficient count mismatch");
        if (all_zero()) { deg = kNegInf; c.clear(); }
    }
    static BiForm zero() { return BiForm(); }
    static BiForm constant(const K& k) {
        if (is_zero(k)) return BiForm();
        return BiForm(0, {k});
    }
    static BiForm t0(const K& one = K(1)) { return BiForm(1, {K(0), one}); }
    static BiForm t1(const K& one = K(1)) { return BiForm(1, {one, K(0)}); }
    static BiForm monomial(const K& k, int e0, int e1) {
        if (is_zero(k)) return BiForm();
        std::vector<K> cs(e0 + e1 + 1, K(0));
        cs[e0] = k;
        return BiForm(e0 + e1, cs);
    }

    bool zero_form() const { return deg == kNegInf; }
    bool all_zero() const {
        for (const auto& x : c)
            if (!is_zero(x)) return false;
        return true;
    }
    K coeff_t0(int e0) const { return (e0 >= 0 && e0 <= deg) ? c[e0] : K(0); }

    friend BiForm operator+(const BiForm& a, const BiForm& b) {
        if (a.zero_form()) return b;
        if (b.zero_form()) return a;
        if (a.deg != b.deg) throw math_error("adding forms of different degrees");
        std::vector<K> cs(a.c);
        for (int i = 0; i <= a.deg; ++i) cs[i] += b.c[i];
        BiForm r;
        r.deg = a.deg;
        r.c = std::move(cs);
        if (r.all_zero()) return BiForm();
        return r;
    }
    friend BiForm operator-(const BiForm& a, const BiForm& b) { return a + (-b); }
    BiForm operator-() const {
        BiForm r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    BiForm& operator+=(const BiForm& o) { return *this = *this + o; }
    BiForm& operator-=(const BiForm& o) { return *this = *this - o; }
    BiForm& operator*=(const BiForm& o) { return *this = *this * o; }
    friend BiForm operator*(const BiForm& a, const BiForm& b) {
        if (a.zero_form() || b.zero_form()) return BiForm();
        std::vector<K> cs(a.deg + b.deg + 1, K(0));
        for (int i = 0; i <= a.deg; ++i) {
            if (is_zero(a.c[i])) continue;
            for (int j = 0; j <= b.deg; ++j) cs[i + j] += a.c[i] * b.c[j];
        }
        BiForm r;
        r.deg = a.deg + b.deg;
        r.c = std::move(cs);
        if (r.all_zero()) return BiForm();
        return r;
    }
    BiForm scaled(const K& k) const {
        if (zero_form() || is_zero(k)) return BiForm();
        BiForm r = *this;
        for (auto& x : r.c) x *= k;
        return r;
    }
    friend bool operator==(const BiForm& a, const BiForm& b) {
        if (a.deg != b.deg) return false;
        for (size_t i = 0; i < a.c.size(); ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }
    friend bool operator!=(const BiForm& a, const BiForm& b) { return !(a == b); }

    K eval(const K& x0, const K& x1) const {
        K r = K(0);
        if (zero_form()) return r;
        // Horner in t0 with t1 powers
        K p1 = K(1);
        std::vector<K> pow1(deg + 1, K(1));
        for (int i = 1; i <= deg; ++i) pow1[i] = pow1[i - 1] * x1;
        K p0 = K(1);
        for (int i = 0; i <= deg; ++i) {
            r += c[i] * p0 * pow1[deg - i];
            p0 = p0 * x0;
        }
        return r;
    }

    // restriction to the chart t1 = 1 (polynomial in t = t0)
    UPoly<K> chart0() const {
        if (zero_form()) return UPoly<K>();
        return UPoly<K>(std::vector<K>(c));
    }
    // restriction to the chart t0 = 1 (polynomial in u = t1)
    UPoly<K> chart1() const {
        if (zero_form()) return UPoly<K>();
        std::vector<K> rev(c.rbegin(), c.rend());
        return UPoly<K>(rev);
    }
    static BiForm from_chart0(const UPoly<K>& p, int homdeg) {
        if (p.zero()) return BiForm();
        if (p.degree() > homdeg) throw internal_error("cannot homogenise to requested degree");
        std::vector<K> cs(homdeg + 1, K(0));
        for (int i = 0; i <= p.degree(); ++i) cs[i] = p.c[i];
        return BiForm(homdeg, cs);
    }

    std::string str() const {
        if (zero_form()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = deg; i >= 0; --i) {
            if (is_zero(c[i])) continue;
            std::string cs = to_string(c[i]);
            bool neg = cs.size() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            int e0 = i, e1 = deg - i;
            if (e0 == 0 && e1 == 0) os << mag;
            else {
                if (mag != "1") os << mag << "*";
                if (e0) { os << "t0"; if (e0 > 1) os << "^" << e0; }
                if (e0 && e1) os << "*";
                if (e1) { os << "t1"; if (e1 > 1) os << "^" << e1; }
            }
            first = false;
        }
        return os.str();
    }
};

template <class K>
inline bool is_zero(const BiForm<K>& f) { return f.zero_form(); }

// exact division of forms; throws when not divisible
template <class K>
BiForm<K> divexact(const BiForm<K>& a, const BiForm<K>& b) {
    if (b.zero_form()) throw math_error("form division by zero");
    if (a.zero_form()) return a;
    UPoly<K> pa = a.chart0(), pb = b.chart0();
    // powers of t1 are invisible on this chart; compare them via degree drops
    if ((a.deg - pa.degree()) < (b.deg - pb.degree()))
        throw math_error("inexact form division");
    auto [q, r] = divmod(pa, pb);
    if (!r.zero()) throw math_error("inexact form division");
    return BiForm<K>::from_chart0(q, a.deg - b.deg);
}

template <class K>
BiForm<K> dom_divexact(const BiForm<K>& a, const BiForm<K>& b) { return divexact(a, b); }

// t1-adic valuation, read off as the degree drop on the chart t1 = 1
template <class K>
int t1_valuation(const BiForm<K>& f) {
    if (f.zero_form()) throw internal_error("valuation of the zero form");
    return f.deg - f.chart0().degree();
}

// Homogeneous gcd. The chart t1 = 1 sees every factor except powers of t1,
// which are restored from the degree drop. Result is monic in t0.
template <class K>
BiForm<K> gcd(const BiForm<K>& a, const BiForm<K>& b) {
    if (a.zero_form() && b.zero_form()) return BiForm<K>();
    auto normalized = [](const BiForm<K>& f) {
        UPoly<K> p = make_monic(f.chart0());
        return BiForm<K>::from_chart0(p, f.deg);
    };
    if (a.zero_form()) return normalized(b);
    if (b.zero_form()) return normalized(a);
    int v1 = std::min(t1_valuation(a), t1_valuation(b));
    UPoly<K> g = gcd(a.chart0(), b.chart0());
    return BiForm<K>::from_chart0(g, g.degree() + v1);
}

}  // namespace fibrato

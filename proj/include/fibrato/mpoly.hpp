#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fibrato/upoly.hpp"

namespace fibrato {

// Sparse multivariate polynomial over a field, with a fixed variable count.
// Variable names live with the caller; printing takes them as an argument.
template <class K>
struct MPoly {
    using Mono = std::vector<uint16_t>;
    int nvars = 0;
    std::map<Mono, K> t;

    MPoly() = default;
    explicit MPoly(int n) : nvars(n) {}
    static MPoly constant(int n, const K& k) {
        MPoly p(n);
        if (!is_zero(k)) p.t[Mono(n, 0)] = k;
        return p;
    }
    static MPoly var(int n, int i, const K& one = K(1)) {
        MPoly p(n);
        Mono m(n, 0);
        m[i] = 1;
        p.t[m] = one;
        return p;
    }

    bool zero() const { return t.empty(); }
    void prune() {
        for (auto it = t.begin(); it != t.end();)
            it = is_zero(it->second) ? t.erase(it) : std::next(it);
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : t) {
            int s = 0;
            for (auto e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }
    int degree_in(int i) const {
        int d = -1;
        for (const auto& [m, c] : t) d = std::max(d, (int)m[i]);
        return d;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [m, c] : b.t) {
            auto it = r.t.find(m);
            if (it == r.t.end()) r.t[m] = c;
            else {
                it->second += c;
                if (is_zero(it->second)) r.t.erase(it);
            }
        }
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [m, c] : r.t) c = -c;
        return r;
    }
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.nvars ? a.nvars : b.nvars);
        for (const auto& [ma, ca] : a.t)
            for (const auto& [mb, cb] : b.t) {
                Mono m(ma);
                for (int i = 0; i < (int)m.size(); ++i) m[i] += mb[i];
                auto it = r.t.find(m);
                if (it == r.t.end()) r.t[m] = ca * cb;
                else it->second += ca * cb;
            }
        r.prune();
        return r;
    }
    MPoly scaled(const K& k) const {
        MPoly r(nvars);
        if (is_zero(k)) return r;
        r = *this;
        for (auto& [m, c] : r.t) c *= k;
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.t.size() != b.t.size()) return false;
        auto ia = a.t.begin();
        for (const auto& [m, c] : b.t) {
            if (ia->first != m || !(ia->second == c)) return false;
            ++ia;
        }
        return true;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    K eval(const std::vector<K>& x) const {
        K r = K(0);
        for (const auto& [m, c] : t) {
            K term = c;
            for (int i = 0; i < nvars; ++i)
                for (int e = 0; e < m[i]; ++e) term *= x[i];
            r += term;
        }
        return r;
    }

    // substitute variable i -> a + b*t, all others -> their value; result in K[t]
    UPoly<K> eval_line(const std::vector<K>& base, const std::vector<K>& dir) const {
        UPoly<K> r;
        for (const auto& [m, c] : t) {
            UPoly<K> term = UPoly<K>::constant(c);
            for (int i = 0; i < nvars; ++i)
                for (int e = 0; e < m[i]; ++e)
                    term = term * UPoly<K>(std::vector<K>{base[i], dir[i]});
            r = r + term;
        }
        return r;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (t.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = t.rbegin(); it != t.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string cs = to_string(c);
            if (!first) os << (cs.size() && cs[0] == '-' ? " - " : " + ");
            else if (cs.size() && cs[0] == '-') os << "-";
            std::string mag = (cs.size() && cs[0] == '-') ? cs.substr(1) : cs;
            bool any = false;
            for (int i = 0; i < nvars; ++i) any = any || m[i];
            if (!any) os << mag;
            else {
                if (mag != "1") os << mag << "*";
                bool started = false;
                for (int i = 0; i < nvars; ++i) {
                    if (!m[i]) continue;
                    if (started) os << "*";
                    os << names[i];
                    if (m[i] > 1) os << "^" << (int)m[i];
                    started = true;
                }
            }
            first = false;
        }
        return os.str();
    }
};

template <class K>
inline bool is_zero(const MPoly<K>& p) { return p.zero(); }

// --- recursive gcd via primitive polynomial remainder sequences -----------

// view as univariate in variable `v` with MPoly coefficients
template <class K>
std::vector<MPoly<K>> mp_coeffs_in(const MPoly<K>& p, int v) {
    std::vector<MPoly<K>> out(std::max(0, p.degree_in(v)) + 1, MPoly<K>(p.nvars));
    if (p.zero()) return {};
    for (const auto& [m, c] : p.t) {
        auto mm = m;
        int e = mm[v];
        mm[v] = 0;
        MPoly<K> term(p.nvars);
        term.t[mm] = c;
        out[e] = out[e] + term;
    }
    while (!out.empty() && out.back().zero()) out.pop_back();
    return out;
}

template <class K>
MPoly<K> mp_assemble(const std::vector<MPoly<K>>& cs, int v, int nvars) {
    MPoly<K> r(nvars);
    for (int e = 0; e < (int)cs.size(); ++e)
        for (const auto& [m, c] : cs[e].t) {
            auto mm = m;
            mm[v] += e;
            r.t[mm] = c;
        }
    return r;
}

template <class K>
MPoly<K> mp_gcd(const MPoly<K>& a, const MPoly<K>& b);

// exact division; throws if not divisible
template <class K>
MPoly<K> mp_divexact(const MPoly<K>& a, const MPoly<K>& b) {
    if (b.zero()) throw math_error("polynomial division by zero");
    MPoly<K> rem = a, q(a.nvars);
    // pick the last variable actually occurring in b as main, else scalar divide
    int v = -1;
    for (const auto& [m, c] : b.t)
        for (int i = 0; i < b.nvars; ++i)
            if (m[i]) v = std::max(v, i);
    if (v < 0) {
        K inv = K(1) / b.t.begin()->second;
        return a.scaled(inv);
    }
    auto bc = mp_coeffs_in(b, v);
    int db = static_cast<int>(bc.size()) - 1;
    while (!rem.zero()) {
        auto rc = mp_coeffs_in(rem, v);
        int dr = static_cast<int>(rc.size()) - 1;
        if (dr < db) throw math_error("inexact polynomial division");
        MPoly<K> f = mp_divexact(rc[dr], bc[db]);
        MPoly<K> shift = MPoly<K>::var(a.nvars, v);
        MPoly<K> mono = f;
        for (int i = 0; i < dr - db; ++i) mono = mono * shift;
        q = q + mono;
        rem = rem - mono * b;
    }
    return q;
}

template <class K>
MPoly<K> mp_content_in(const MPoly<K>& p, int v) {
    auto cs = mp_coeffs_in(p, v);
    MPoly<K> g(p.nvars);
    for (const auto& c : cs) g = mp_gcd(g, c);
    return g;
}

// pseudo-remainder of a by b in variable v
template <class K>
MPoly<K> mp_prem(const MPoly<K>& a, const MPoly<K>& b, int v) {
    auto bc = mp_coeffs_in(b, v);
    int db = static_cast<int>(bc.size()) - 1;
    MPoly<K> rem = a;
    MPoly<K> lead_b = bc[db];
    while (true) {
        auto rc = mp_coeffs_in(rem, v);
        int dr = static_cast<int>(rc.size()) - 1;
        if (rem.zero() || dr < db) return rem;
        MPoly<K> shift = MPoly<K>::var(a.nvars, v);
        MPoly<K> mono = rc[dr];
        for (int i = 0; i < dr - db; ++i) mono = mono * shift;
        rem = rem * lead_b - mono * b;
    }
}

template <class K>
MPoly<K> mp_normalize(MPoly<K> p) {
    if (p.zero()) return p;
    K inv = K(1) / p.t.rbegin()->second;
    return p.scaled(inv);
}

template <class K>
MPoly<K> mp_gcd(const MPoly<K>& a, const MPoly<K>& b) {
    if (a.zero()) return mp_normalize(b);
    if (b.zero()) return mp_normalize(a);
    // main variable: highest one occurring in either
    int v = -1;
    for (const auto* p : {&a, &b})
        for (const auto& [m, c] : p->t)
            for (int i = 0; i < p->nvars; ++i)
                if (m[i]) v = std::max(v, i);
    if (v < 0) return MPoly<K>::constant(a.nvars, K(1));  // both constants

    MPoly<K> ca = mp_content_in(a, v), cb = mp_content_in(b, v);
    MPoly<K> cg = mp_gcd(ca, cb);
    MPoly<K> pa = mp_divexact(a, ca), pb = mp_divexact(b, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.zero()) {
        MPoly<K> r = mp_prem(pa, pb, v);
        pa = pb;
        if (!r.zero()) r = mp_divexact(r, mp_content_in(r, v));
        pb = r;
    }
    return mp_normalize(cg * pa);
}

}  // namespace fibrato

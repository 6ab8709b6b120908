#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fibrato {

// Error classification shared by the whole library. The CLI maps the kinds
// onto its exit codes.
struct Error : std::runtime_error {
    enum class Kind { schema, math, out_of_scope, internal };
    Kind kind;
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error schema_error(const std::string& m) { return Error(Error::Kind::schema, m); }
inline Error math_error(const std::string& m) { return Error(Error::Kind::math, m); }
inline Error out_of_scope(const std::string& m) { return Error(Error::Kind::out_of_scope, m); }
inline Error internal_error(const std::string& m) { return Error(Error::Kind::internal, m); }

// Exact rational scalar.
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline Rat rat_from_string(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw schema_error("bad rational literal: " + s);
    }
}
inline std::string to_string(const Rat& x) { return x.get_str(); }
inline double to_double(const Rat& x) { return x.get_d(); }

// Largest prime below 2^32 would overflow the product bound; we keep the
// modulus under 2^31 so products fit comfortably in 64 bits.
inline constexpr uint32_t kDefaultPrime = 2147483647u;  // 2^31 - 1

inline bool is_prime_u32(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Prime-field element. p == 0 marks an integer literal that adopts the
// modulus of whatever it first meets; this keeps generic code like K(1)
// usable without threading a field context everywhere.
struct Fp {
    int64_t v = 0;
    uint32_t p = 0;

    Fp() = default;
    Fp(int64_t value) : v(value), p(0) {}
    Fp(int64_t value, uint32_t mod) : v(value), p(mod) { normalize(); }

    void normalize() {
        if (p) {
            v %= static_cast<int64_t>(p);
            if (v < 0) v += p;
        }
    }

    static uint32_t join(const Fp& a, const Fp& b) {
        if (a.p && b.p) {
            if (a.p != b.p) throw internal_error("prime-field modulus mismatch");
            return a.p;
        }
        return a.p ? a.p : b.p;
    }

    Fp lift(uint32_t mod) const {
        if (p == mod) return *this;
        if (p != 0) throw internal_error("prime-field modulus mismatch");
        return Fp(v, mod);
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        uint32_t m = join(a, b);
        if (!m) return Fp(a.v + b.v);
        return Fp(a.lift(m).v + b.lift(m).v, m);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        uint32_t m = join(a, b);
        if (!m) return Fp(a.v - b.v);
        return Fp(a.lift(m).v - b.lift(m).v, m);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        uint32_t m = join(a, b);
        if (!m) return Fp(a.v * b.v);
        return Fp(a.lift(m).v * b.lift(m).v, m);
    }
    Fp operator-() const { return p ? Fp(p - v, p) : Fp(-v); }

    Fp inv() const {
        if (!p) throw internal_error("inverse of integer literal");
        if (v == 0) throw math_error("division by zero in prime field");
        // extended Euclid
        int64_t a = v, b = p, x0 = 1, x1 = 0;
        while (b) {
            int64_t q = a / b;
            a -= q * b; std::swap(a, b);
            x0 -= q * x1; std::swap(x0, x1);
        }
        return Fp(x0, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) {
        uint32_t m = join(a, b);
        if (!m) throw internal_error("division of integer literals");
        return a.lift(m) * b.lift(m).inv();
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        uint32_t m = join(a, b);
        if (!m) return a.v == b.v;
        return a.lift(m).v == b.lift(m).v;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline bool is_zero(const Fp& x) { return x.p ? x.v == 0 : x.v == 0; }
inline std::string to_string(const Fp& x) { return std::to_string(x.v); }

inline Fp fp_pow(Fp base, uint64_t e) {
    Fp r(1, base.p ? base.p : 1);
    if (base.p) r = Fp(1, base.p);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace fibrato

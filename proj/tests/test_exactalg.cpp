#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibrato/matrix.hpp"
#include "fibrato/mpoly.hpp"
#include "fibrato/rng.hpp"
#include "fibrato/smith.hpp"

using namespace fibrato;

namespace {

UPoly<Rat> upoly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long x : coeffs) c.push_back(Rat(x));
    return UPoly<Rat>(c);
}

Mat<Rat> rat_mat(int r, int c, std::initializer_list<long> entries) {
    Mat<Rat> m(r, c, Rat(0));
    auto it = entries.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Rat(*it++);
    return m;
}

Mat<UPoly<Rat>> random_upoly_mat(int r, int c, int maxdeg, Rng& rng) {
    Mat<UPoly<Rat>> m(r, c);
    for (auto& e : m.a) {
        int d = static_cast<int>(rng.below(maxdeg + 1));
        std::vector<Rat> cs(d + 1);
        for (auto& x : cs) x = Rat(rng.range(-4, 4));
        e = UPoly<Rat>(cs);
    }
    return m;
}

}  // namespace

TEST_CASE("field rank basics") {
    CHECK(rank(Mat<Rat>::identity(2, Rat(1))) == 2);
    CHECK(rank(Mat<Rat>(3, 5, Rat(0))) == 0);
    CHECK(rank(Mat<Rat>(0, 4)) == 0);
    CHECK(rank(Mat<Rat>(4, 0)) == 0);
    CHECK(rank(rat_mat(2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(Mat<Rat>::identity(3, Rat(1))).empty());
    auto b = kernel_basis(rat_mat(1, 2, {1, 1}));
    REQUIRE(b.size() == 1);
    CHECK(b[0][0] == -b[0][1]);
    // kernel vectors actually die under the matrix
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int r = 1 + rng.below(4), c = 1 + rng.below(5);
        Mat<Rat> m(r, c, Rat(0));
        for (auto& e : m.a) e = Rat(rng.range(-3, 3));
        auto ker = kernel_basis(m);
        CHECK((int)ker.size() == c - rank(m));
        for (const auto& v : ker)
            for (int i = 0; i < r; ++i) {
                Rat s(0);
                for (int j = 0; j < c; ++j) s += m.at(i, j) * v[j];
                CHECK(is_zero(s));
            }
    }
}

TEST_CASE("rank plus kernel dimension equals column count") {
    Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        int r = rng.below(5), c = rng.below(6);
        Mat<Rat> m(r, c, Rat(0));
        for (auto& e : m.a) e = Rat(rng.range(-5, 5));
        CHECK(rank(m) + (int)kernel_basis(m).size() == c);
    }
}

TEST_CASE("prime field arithmetic") {
    uint32_t p = 10007;
    Fp a(3, p), b(10010, p);
    CHECK(b == Fp(3, p));
    CHECK(a * a.inv() == Fp(1, p));
    CHECK((a / b) == Fp(1, p));
    CHECK(is_prime_u32(kDefaultPrime));
    Mat<Fp> id = Mat<Fp>::identity(4, Fp(1, p));
    CHECK(rank(id) == 4);
}

TEST_CASE("smith normal form: stated cases") {
    // diag(1, t) keeps invariant factors (1, t)
    Mat<UPoly<Rat>> m(2, 2);
    m.at(0, 0) = upoly({1});
    m.at(1, 1) = upoly({0, 1});
    auto sf = smith_normal_form(m);
    REQUIRE(sf.invariant_factors.size() == 2);
    CHECK(sf.invariant_factors[0] == upoly({1}));
    CHECK(sf.invariant_factors[1] == upoly({0, 1}));
    CHECK(smith_verifies(m, sf));

    // elementary divisors (t, t^2) from a non-diagonal presentation
    Mat<UPoly<Rat>> c(2, 2);
    c.at(0, 0) = upoly({0, 1});
    c.at(0, 1) = upoly({0, 0, 1});
    c.at(1, 0) = upoly({0, 0, 1});
    c.at(1, 1) = upoly({0, 1}) + upoly({0, 0, 0, 1});
    auto sc = smith_normal_form(c);
    REQUIRE(sc.invariant_factors.size() == 2);
    CHECK(sc.invariant_factors[0] == upoly({0, 1}));
    // cross-check against the minor-gcd oracle: d1*d2 = gcd of 2x2 minors
    auto g2 = minor_gcd_upoly(c, 2);
    CHECK(sc.invariant_factors[0] * sc.invariant_factors[1] == g2);
    CHECK(smith_verifies(c, sc));
}

TEST_CASE("relation matrix of a double-cover stalk") {
    // ((-t^s*G, Q), (-Q, t^s)) with Q divisible by t: the determinant
    // generates the principal ideal cutting out the image curve
    for (int s : {1, 2, 3}) {
        Mat<UPoly<Rat>> m(2, 2);
        UPoly<Rat> ts = UPoly<Rat>::monomial(Rat(1), s);
        UPoly<Rat> G = upoly({2, 0, 1});        // unit at t=0
        UPoly<Rat> Q = upoly({0, 3, 1});        // Q = 3t + t^2, Q(0) = 0
        m.at(0, 0) = -(ts * G);
        m.at(0, 1) = Q;
        m.at(1, 0) = -Q;
        m.at(1, 1) = ts;
        auto sf = smith_normal_form(m);
        CHECK(smith_verifies(m, sf));
        REQUIRE(sf.invariant_factors.size() == 2);
        // the product of the invariant factors is the determinant up to units
        UPoly<Rat> det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        UPoly<Rat> prod = sf.invariant_factors[0] * sf.invariant_factors[1];
        CHECK(make_monic(det) == make_monic(prod));
        CHECK(!is_zero(det));
    }
}

TEST_CASE("smith randomized: chain, reconstruction, minor-gcd cross-check") {
    Rng rng(2024);
    int cases = 0;
    while (cases < 500) {
        int r = 1 + rng.below(4), c = 1 + rng.below(4);
        auto m = random_upoly_mat(r, c, 2, rng);
        auto sf = smith_normal_form(m);
        CHECK(smith_verifies(m, sf));
        // d1...dk = gcd of k x k minors up to units (matrices up to 6x6)
        UPoly<Rat> prod = UPoly<Rat>::constant(Rat(1));
        for (int k = 1; k <= (int)sf.invariant_factors.size(); ++k) {
            prod = prod * sf.invariant_factors[k - 1];
            auto g = minor_gcd_upoly(m, k);
            CHECK(make_monic(prod) == make_monic(g));
        }
        ++cases;
    }
}

TEST_CASE("bareiss rank over polynomials matches specialization") {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + rng.below(4), c = 1 + rng.below(4);
        auto m = random_upoly_mat(r, c, 2, rng);
        int rk = rank_domain(m);
        // evaluation at a random point can only lose rank
        Mat<Rat> mv(r, c, Rat(0));
        Rat x(rng.range(-30, 30));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) mv.at(i, j) = m.at(i, j).eval(x);
        CHECK(rank(mv) <= rk);
    }
}

TEST_CASE("multivariate gcd and exact division") {
    using P = MPoly<Rat>;
    int n = 3;
    P x = P::var(n, 0), y = P::var(n, 1), z = P::var(n, 2);
    P one = P::constant(n, Rat(1));
    P f = (x + y) * (x - z) * (x - z);
    P g = (x + y) * (y + z);
    P d = mp_gcd(f, g);
    CHECK(d == mp_normalize(x + y));
    CHECK(mp_divexact(f, x + y) == (x - z) * (x - z));
    CHECK(mp_gcd(x * y, z * z + one) == one);
}

TEST_CASE("generic rank by sampling: parameter matrices") {
    // (a) 1x1
    using P = MPoly<Rat>;
    P a = P::var(2, 0), b = P::var(2, 1);
    Mat<P> m1(1, 1, P(2));
    m1.at(0, 0) = a;
    CHECK(rank_domain(m1) == 1);
    // diag(a, ab - 1)
    Mat<P> m2(2, 2, P(2));
    m2.at(0, 0) = a;
    m2.at(1, 1) = a * b - P::constant(2, Rat(1));
    CHECK(rank_domain(m2) == 2);
    // sampled specialisations agree here
    Rng rng(5);
    uint32_t p = 10007;
    int best = 0;
    for (int t = 0; t < 4; ++t) {
        Mat<Fp> mv(2, 2, Fp(0, p));
        std::vector<Fp> vals = {Fp((int64_t)rng.below(p), p), Fp((int64_t)rng.below(p), p)};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                std::vector<Fp> xs = vals;
                Rat c0(0);
                Fp acc(0, p);
                for (const auto& [mono, coef] : m2.at(i, j).t) {
                    Fp term((long)(mpz_class(coef.get_num() % (long)p).get_si()), p);
                    Fp den((long)(mpz_class(coef.get_den() % (long)p).get_si()), p);
                    term = term / den;
                    for (int v = 0; v < 2; ++v)
                        for (int e = 0; e < mono[v]; ++e) term *= xs[v];
                    acc += term;
                }
                mv.at(i, j) = acc;
            }
        best = std::max(best, rank(mv));
    }
    CHECK(best == 2);
}

TEST_CASE("fp polynomial roots") {
    uint32_t p = 10007;
    Rng rng(42);
    // (t - 3)(t - 5)^2 (t^2 + 1 irreducible mod p? not necessarily; build from roots)
    UPoly<Fp> f = UPoly<Fp>::constant(Fp(1, p));
    auto lin = [&](int64_t r) { return UPoly<Fp>(std::vector<Fp>{Fp(-r, p), Fp(1, p)}); };
    f = f * lin(3) * lin(5) * lin(5);
    auto roots = fp_roots(f, rng);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first == Fp(3, p));
    CHECK(roots[0].second == 1);
    CHECK(roots[1].first == Fp(5, p));
    CHECK(roots[1].second == 2);
}

TEST_CASE("rational roots") {
    // 2(t - 1/2)(t + 3) t^2
    UPoly<Rat> f = UPoly<Rat>(std::vector<Rat>{Rat(-1, 2), Rat(1)}) *
                   upoly({3, 1}) * UPoly<Rat>::monomial(Rat(2), 2);
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].first == Rat(-3));
    CHECK(roots[1].first == Rat(0));
    CHECK(roots[1].second == 2);
    CHECK(roots[2].first == Rat(1, 2));
}

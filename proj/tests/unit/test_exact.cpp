#include "modgal/exact/int_poly.hpp"
#include "modgal/exact/mod_poly.hpp"

#include "doctest.h"
#include "support.hpp"

#include <random>

using namespace modgal;

TEST_CASE("poly arithmetic")
{
    IntPoly a{1, 1};
    IntPoly b{-1, 1};
    CHECK(a * b == IntPoly{-1, 0, 1});

    auto qr = divrem(IntPoly{-1, 0, 1}, IntPoly{-1, 1});
    CHECK(qr.quotient == RatPoly(IntPoly{1, 1}));
    CHECK(qr.remainder.is_zero());

    auto qr2 = divrem(IntPoly{0, 0, 0, 1}, IntPoly{1, 0, 1});
    CHECK(qr2.quotient == RatPoly(IntPoly{0, 1}));
    CHECK(qr2.remainder == RatPoly(IntPoly{0, -1}));

    CHECK_THROWS_AS(divrem(a, IntPoly{}), DomainError);
    CHECK_THROWS_AS(IntPoly{}.degree(), DomainError);
}

TEST_CASE("divrem over Q with non-monic divisor round-trips")
{
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        IntPoly a = test::random_poly(rng, 1 + iter % 7, 50);
        IntPoly b = test::random_poly(rng, 1 + iter % 4, 9);
        if (b.is_zero()) continue;
        auto qr = divrem(a, b);
        RatPoly back = qr.quotient * RatPoly(b) + qr.remainder;
        CHECK(back == RatPoly(a));
        if (!qr.remainder.is_zero()) CHECK(qr.remainder.degree() < b.degree());
        auto pd = pseudo_divrem(a, b);
        if (!a.is_zero() && a.degree() >= b.degree()) {
            IntPoly lhs = pow(b.lead(), pd.multiplier_exponent) * a;
            CHECK(lhs == pd.quotient * b + pd.remainder);
        }
    }
}

TEST_CASE("resultant sign convention and small cases")
{
    CHECK(resultant(IntPoly{-1, 0, 1}, IntPoly{-2, 1}) == 3);
    // lc(b)^deg a * a(beta): Res(x - a, x - b) = b - a
    CHECK(resultant(IntPoly{-3, 1}, IntPoly{-7, 1}) == 4);
    CHECK(resultant(IntPoly{-7, 1}, IntPoly{-3, 1}) == -4);
    // constant second argument: Res(a, c) = c^deg a
    CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{3}) == 9);
    CHECK(resultant(IntPoly{3}, IntPoly{1, 0, 1}) == 9);
    CHECK(resultant(IntPoly{-1, 0, 1}, IntPoly{-1, 1}) == 0);
}

TEST_CASE("resultant agrees with the product formula over known roots")
{
    // a = prod (x - r_i) * ca, b = prod (x - s_j) * cb:
    // lc(b)^deg a * prod_j a(s_j)
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> root(-9, 9);
    for (int iter = 0; iter < 100; ++iter) {
        int m = 1 + iter % 4, n = 1 + (iter / 4) % 4;
        IntPoly a{static_cast<long>(1 + iter % 3)};
        IntPoly b{static_cast<long>(-1 - iter % 2)};
        std::vector<long> sroots;
        for (int i = 0; i < m; ++i) a = a * IntPoly::linear(root(rng));
        for (int j = 0; j < n; ++j) {
            long s = root(rng);
            sroots.push_back(s);
            b = b * IntPoly::linear(s);
        }
        Integer expect = pow(b.lead(), static_cast<unsigned long>(m));
        for (long s : sroots) expect *= a.eval(s);
        CHECK(resultant(a, b) == expect);
    }
}

TEST_CASE("resultant multiplicativity")
{
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 150; ++iter) {
        IntPoly a = test::random_poly(rng, 1 + iter % 5, 20);
        IntPoly b = test::random_poly(rng, 1 + (iter / 5) % 4, 20);
        IntPoly c = test::random_poly(rng, 1 + (iter / 3) % 6, 20);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        CHECK(resultant(a * b, c) == resultant(a, c) * resultant(b, c));
    }
}

TEST_CASE("discriminant")
{
    for (long b = -6; b <= 6; ++b)
        for (long c = -6; c <= 6; ++c) CHECK(discriminant(IntPoly{c, b, 1}) == b * b - 4 * c);
    CHECK(discriminant(IntPoly{-2, 0, 1}) == 8);
    // cubic x^3 + p x + q: -4p^3 - 27q^2
    for (long p = -4; p <= 4; ++p)
        for (long q = -4; q <= 4; ++q) CHECK(discriminant(IntPoly{q, p, 0, 1}) == -4 * p * p * p - 27 * q * q);
}

TEST_CASE("discriminant of the first PSL2(F25) polynomial")
{
    IntPoly P = read_poly_file(test::poly_path("psl25_1"));
    Integer d = discriminant(P);
    // frozen from an independent sympy computation of the discriminant
    CHECK(valuation(d, 5) == 28);
    CHECK(valuation(d, 29) == 20);
    CHECK(valuation(resultant(P, P.derivative()), 29) >= 20);
}

TEST_CASE("squarefree part")
{
    IntPoly a = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{1, 1};
    CHECK(squarefree_part(a) == IntPoly{-1, 0, 1});
    CHECK(squarefree_part(IntPoly{-2, 0, 1}) == IntPoly{-2, 0, 1});
    CHECK_FALSE(is_squarefree(a));
    CHECK(is_squarefree(IntPoly{1, 0, 1}));
}

TEST_CASE("real root count")
{
    CHECK(real_root_count(IntPoly{1, 0, 1}) == 0);
    CHECK(real_root_count(IntPoly{-2, 0, 1}) == 2);
    CHECK_THROWS_AS(real_root_count(IntPoly{1, 2, 1}), DomainError);
    CHECK(real_roots_above(IntPoly{-2, 0, 1}, Rational(0)) == 1);
    CHECK(real_roots_above(IntPoly{-2, 0, 1}, Rational(3, 2)) == 0);
    CHECK(real_roots_above(IntPoly{-2, 0, 1}, Rational(-3, 2)) == 2);
}

TEST_CASE("real root count matches construction from real and complex factors")
{
    // distinct integer roots plus irreducible quadratics with negative discriminant
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> small(-20, 20);
    for (int iter = 0; iter < 200; ++iter) {
        int nreal = iter % 4;
        int ncomplex = (iter / 4) % 3;
        if (nreal + ncomplex == 0) continue;
        IntPoly p{1};
        std::vector<long> used;
        while (static_cast<int>(used.size()) < nreal) {
            long r = small(rng);
            if (std::find(used.begin(), used.end(), r) != used.end()) continue;
            used.push_back(r);
            p = p * IntPoly::linear(r);
        }
        std::vector<std::pair<long, long>> quads;
        while (static_cast<int>(quads.size()) < ncomplex) {
            long b = small(rng), c = small(rng);
            if (b * b - 4 * c >= 0) continue;
            if (std::find(quads.begin(), quads.end(), std::make_pair(b, c)) != quads.end()) continue;
            quads.emplace_back(b, c);
            p = p * IntPoly{c, b, 1};
        }
        const int deg = p.degree();
        const int rr = real_root_count(p);
        CHECK(rr == nreal);
        CHECK((deg - rr) % 2 == 0);
        // a scaled, sign-flipped copy has the same roots
        CHECK(real_root_count(Integer(-3) * p) == nreal);
    }
}

TEST_CASE("ten bundled polynomials are not totally real")
{
    for (const auto& name : test::all_rows()) {
        IntPoly P = read_poly_file(test::poly_path(name));
        REQUIRE(is_squarefree(P));
        int rr = real_root_count(P);
        CHECK(rr < P.degree());
        CHECK((P.degree() - rr) % 2 == 0);
    }
}

TEST_CASE("polynomial text format round-trips")
{
    std::mt19937_64 rng(1);
    for (int iter = 0; iter < 50; ++iter) {
        IntPoly a = test::random_poly(rng, iter % 9, 1000000);
        if (a.is_zero()) continue;
        std::string text = format_poly(a);
        CHECK(parse_poly(text) == a);
        CHECK(format_poly(parse_poly(text)) == text);
    }
    CHECK(parse_poly("# comment\n  1 2 3\n") == IntPoly{1, 2, 3});
    CHECK_THROWS_AS(parse_poly("1 2 x\n"), DataError);
    CHECK_THROWS_AS(parse_poly("# only a comment\n"), DataError);
    CHECK_THROWS_AS(parse_poly("1 2\n3 4\n"), DataError);
}

TEST_CASE("mod p resultant matches reduction of the integer resultant")
{
    std::mt19937_64 rng(13);
    for (std::uint64_t p : {2ull, 3ull, 7ull, 101ull}) {
        for (int iter = 0; iter < 40; ++iter) {
            IntPoly a = test::random_poly(rng, 1 + iter % 5, 30);
            IntPoly b = test::random_poly(rng, 1 + iter % 3, 30);
            if (a.is_zero() || b.is_zero()) continue;
            ModPoly am(p, a), bm(p, b);
            // degrees must survive reduction for the identity to hold
            if (am.is_zero() || bm.is_zero() || am.degree() != a.degree() || bm.degree() != b.degree()) continue;
            CHECK(resultant(am, bm) == mod_u64(resultant(a, b), p));
        }
    }
}

TEST_CASE("irreducibility over F_p and least irreducible moduli")
{
    CHECK(is_irreducible(ModPoly(5, {2, 4, 1})));
    CHECK_FALSE(is_irreducible(ModPoly(5, {4, 0, 1})));
    CHECK(least_irreducible(2, 5) == ModPoly(2, {1, 0, 1, 0, 0, 1}));
    CHECK(least_irreducible(3, 1) == ModPoly(3, {0, 1}));
    // x^2 + 2 is the first irreducible quadratic over F_5 (2 is a non-residue)
    CHECK(least_irreducible(5, 2) == ModPoly(5, {2, 0, 1}));
}

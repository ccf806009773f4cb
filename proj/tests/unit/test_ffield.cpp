#include "modgal/ffield/dickson.hpp"
#include "modgal/ffield/fq_field.hpp"
#include "modgal/ffield/pgl2.hpp"
#include "modgal/ffield/projective_group.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace modgal;
using namespace test;

TEST_CASE("field construction")
{
    auto F25 = make_field(5, 2, ModPoly(5, {2, 4, 1}));
    CHECK(F25->order() == 25);
    // irreducible: no root in F_5
    for (std::uint64_t x = 0; x < 5; ++x) CHECK(ModPoly(5, {2, 4, 1}).eval(x) != 0);

    auto F32 = make_field(2, 5);
    CHECK(F32->order() == 32);
    CHECK(is_irreducible(F32->modulus()));
    // x^(2^5) = x mod m and gcd(x^2 - x, m) = 1: degree-5 irreducible
    ModPoly x = ModPoly::x(2);
    CHECK(powmod(x, 32, F32->modulus()) == x);
    CHECK(gcd(powmod(x, 2, F32->modulus()) - x, F32->modulus()).is_one());

    CHECK_THROWS_AS(make_field(5, 2, ModPoly(5, {4, 0, 1})), DomainError);
    CHECK_THROWS_AS(make_field(6, 1), DomainError);
}

TEST_CASE("field arithmetic: x^q = x and Frobenius is a ring map")
{
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}, {7, 2}, {3, 3}, {2, 5}, {13, 1}}) {
        FqField F(p, k);
        const std::uint64_t q = F.order();
        auto el = F.elements();
        for (const auto& a : el) {
            CHECK(a.pow(q) == a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
        std::mt19937_64 rng(q);
        for (int i = 0; i < 200; ++i) {
            FqElement a = random_element(F, rng), b = random_element(F, rng);
            CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
            CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
        }
        // squares are exactly half the units for odd q
        std::size_t squares = 0;
        for (const auto& a : el)
            if (!a.is_zero() && a.is_square()) ++squares;
        CHECK(squares == (p == 2 ? q - 1 : (q - 1) / 2));
    }
}

TEST_CASE("theta examples")
{
    FqField F5(5, 1);
    CHECK(theta({F5.from_int(2), F5.one()}) == F5.from_int(4));
    CHECK(theta({F5.from_int(3), F5.from_int(2)}) == F5.from_int(2));
    FqField F8(2, 3);
    CHECK(theta({F8.from_int(2), F8.one()}).is_zero());
    CHECK_THROWS_AS(theta({F5.one(), F5.zero()}), DomainError);
    // scaling (t, d) -> (c t, c^2 d) leaves theta fixed
    FqElement c = F5.from_int(3);
    CHECK(theta({c * F5.from_int(3), c * c * F5.from_int(2)}) == F5.from_int(2));
}

TEST_CASE("theta is conjugation invariant")
{
    std::mt19937_64 rng(42);
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{{5, 2}, {2, 5}, {7, 2}, {3, 3}}) {
        FqField F(p, k);
        for (int i = 0; i < 200; ++i) {
            Mat2 g = random_invertible(F, rng);
            Mat2 h = random_invertible(F, rng);
            CHECK(theta((h * g * h.inverse()).cls()) == theta(g.cls()));
        }
    }
}

TEST_CASE("trace_power matches matrix powers")
{
    FqField F(7, 2);
    FqElement t = F.from_int(3), d = F.from_int(5);
    auto r1 = trace_power(t, d, 1);
    CHECK(r1.trace == t);
    CHECK(r1.det == d);
    auto r2 = trace_power(t, d, 2);
    CHECK(r2.trace == t * t - F.from_int(2) * d);
    auto r3 = trace_power(t, d, 3);
    CHECK(r3.trace == t * t * t - F.from_int(3) * t * d);
    CHECK(trace_power(t, d, 0).trace == F.from_int(2));

    std::mt19937_64 rng(9);
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{{5, 2}, {2, 5}, {3, 3}, {101, 1}}) {
        FqField G(p, k);
        for (int i = 0; i < 40; ++i) {
            Mat2 m = random_invertible(G, rng);
            Mat2 power = Mat2::identity(G);
            for (std::uint64_t n = 0; n <= 30; ++n) {
                auto r = trace_power(m.trace(), m.det(), n);
                CHECK(r.trace == power.trace());
                CHECK(r.det == power.det());
                power = power * m;
            }
        }
    }
}

TEST_CASE("theta coverage verdict")
{
    FqField F4(2, 2);
    CHECK(theta_coverage_verdict(F4.elements(), F4).full);
    FqField F8(2, 3);
    std::vector<FqElement> nonzero;
    for (const auto& a : F8.elements())
        if (!a.is_zero()) nonzero.push_back(a);
    auto v = theta_coverage_verdict(nonzero, F8);
    CHECK_FALSE(v.full);
    REQUIRE(v.missing.size() == 1);
    CHECK(v.missing[0].is_zero());
    FqField F3(3, 1);
    CHECK_THROWS_AS(theta_coverage_verdict(F3.elements(), F3), DomainError);

    // thetas of all 60 elements of PSL2(F_5), via explicit matrices of square determinant
    FqField F5(5, 1);
    std::vector<FqElement> seen;
    std::size_t count = 0;
    for (const auto& a : F5.elements())
        for (const auto& b : F5.elements())
            for (const auto& c : F5.elements())
                for (const auto& d : F5.elements()) {
                    Mat2 m{a, b, c, d};
                    if (m.det().is_one()) {
                        ++count;
                        seen.push_back(theta(m.cls()));
                    }
                }
    CHECK(count == 120);  // SL2(F_5), two lifts per element
    auto sweep = theta_coverage_verdict(seen, F5);
    // only the squares 0, 1, 4 occur; 2 and 3 are missing
    CHECK_FALSE(sweep.full);
    REQUIRE(sweep.missing.size() == 2);
    CHECK(sweep.missing[0] == F5.from_int(2));
    CHECK(sweep.missing[1] == F5.from_int(3));
    // adding a non-square determinant class (PGL2 \ PSL2) completes the set
    seen.push_back(theta({F5.one(), F5.from_int(2)}));
    seen.push_back(theta({F5.from_int(2), F5.from_int(2)}));
    CHECK(theta_coverage_verdict(seen, F5).full);
}

TEST_CASE("projective group orders")
{
    for (std::uint64_t q : {4ull, 5ull, 7ull, 8ull, 9ull, 25ull, 27ull}) {
        PrimePower pp = prime_power(q);
        FqField F(pp.prime, static_cast<int>(pp.exponent));
        ProjectiveGroup pgl(F, GroupKind::PGL2);
        ProjectiveGroup psl(F, GroupKind::PSL2);
        CHECK(pgl.order() == q * q * q - q);
        CHECK(psl.order() == (q % 2 ? (q * q * q - q) / 2 : q * q * q - q));
    }
}

TEST_CASE("cycle type fingerprints")
{
    FqField F5(5, 1);
    auto pgl5 = cycle_type_fingerprint(F5, GroupKind::PGL2);
    CHECK(pgl5.count({1, 1, 4}) == 1);
    CHECK(pgl5.count({6}) == 1);
    CHECK(pgl5.count({1, 1, 1, 1, 1, 1}) == 1);

    FqField F25(5, 2);
    auto psl25 = cycle_type_fingerprint(F25, GroupKind::PSL2);
    auto pgl25 = cycle_type_fingerprint(F25, GroupKind::PGL2);
    CHECK(psl25.count({1, 5, 5, 5, 5, 5}) == 1);
    CHECK(std::includes(pgl25.begin(), pgl25.end(), psl25.begin(), psl25.end()));
    CHECK(psl25.size() < pgl25.size());

    for (std::uint64_t q : {4ull, 7ull, 8ull, 9ull, 16ull, 27ull, 32ull, 49ull}) {
        PrimePower pp = prime_power(q);
        FqField F(pp.prime, static_cast<int>(pp.exponent));
        auto psl = cycle_type_fingerprint(F, GroupKind::PSL2);
        auto pgl = cycle_type_fingerprint(F, GroupKind::PGL2);
        CHECK(std::includes(pgl.begin(), pgl.end(), psl.begin(), psl.end()));
        for (const auto& t : pgl) CHECK(std::accumulate(t.begin(), t.end(), 0) == static_cast<int>(q + 1));
        CHECK(psl.count(CycleType(q + 1, 1)) == 1);
    }
}

TEST_CASE("fingerprint text format")
{
    std::set<CycleType> s{{1, 1, 4}, {6}, {2, 2, 2}, {1, 1, 1, 1, 1, 1}};
    CHECK(format_fingerprint(s) == "1,1,1,1,1,1\n1,1,4\n2,2,2\n6\n");
    // string order, not numeric order
    std::set<CycleType> t{{2, 10}, {12}};
    CHECK(format_fingerprint(t) == "12\n2,10\n");
}

TEST_CASE("subgroup enumeration and theta surjectivity")
{
    // subgroup counts of A5, A5, PSL2(7), PSL2(8), A6
    const std::vector<std::pair<std::uint64_t, std::size_t>> expect{{4, 59}, {5, 59}, {7, 179}, {8, 386}, {9, 501}};
    for (auto [q, count] : expect) {
        CAPTURE(q);
        auto rep = dickson_prop1_bruteforce(q);
        CHECK(rep.subgroup_count == count);
        CHECK(rep.group_order == (q % 2 ? (q * q * q - q) / 2 : q * q * q - q));
        if (q % 2 == 0) {
            // characteristic 2: every element is a square and the statement holds
            CHECK(rep.verified);
            CHECK(rep.full_theta_count == 1);
            CHECK(rep.theta_image_size == q);
        } else {
            // tr^2/det of a determinant-one lift is a square, so the whole
            // group reaches only the (q+1)/2 squares and is itself the lone
            // counterexample to the literal statement
            CHECK_FALSE(rep.verified);
            CHECK(rep.full_theta_count == 0);
            CHECK(rep.theta_image_size == (q + 1) / 2);
            CHECK(rep.counterexamples == std::vector<std::size_t>{rep.group_order});
        }
    }
    CHECK_THROWS_AS(dickson_prop1_bruteforce(11), DomainError);
}

TEST_CASE("theta image of PSL2 over odd fields is the squares")
{
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{{5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
        FqField F(p, k);
        ProjectiveGroup G(F, GroupKind::PSL2);
        std::set<std::uint64_t> image;
        for (std::size_t i = 0; i < G.order(); ++i) image.insert(G.theta(i));
        std::set<std::uint64_t> squares;
        for (const auto& a : F.elements())
            if (a.is_square()) squares.insert(a.index());
        CHECK(image == squares);
    }
}

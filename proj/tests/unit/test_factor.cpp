#include "modgal/factor/certificate.hpp"
#include "modgal/factor/finite_factor.hpp"
#include "modgal/factor/rational_factor.hpp"
#include "modgal/factor/resolvent.hpp"
#include "modgal/ffield/projective_group.hpp"

#include "doctest.h"
#include "support.hpp"

#include <map>
#include <random>

using namespace modgal;

namespace {

ModPoly random_mod_poly(std::mt19937_64& rng, std::uint64_t p, int degree)
{
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = d(rng);
    if (c.back() == 0) c.back() = 1;
    return ModPoly(p, std::move(c));
}

}  // namespace

TEST_CASE("factor_mod_p examples")
{
    auto f5 = factor_mod_p(IntPoly{1, 0, 1}, 5);
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0].factor == ModPoly(5, {2, 1}));  // x - 3
    CHECK(f5.factors[1].factor == ModPoly(5, {3, 1}));  // x - 2
    CHECK(f5.pattern == FactorPattern::from_degrees({1, 1}));

    auto f3 = factor_mod_p(IntPoly{1, 0, 1}, 3);
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.pattern.to_string() == "2");

    CHECK_THROWS_AS(factor_mod_p(IntPoly{5, 0, 10}, 5), DomainError);
    auto sq = factor_mod_p(IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{1, 0, 1}, 3);
    CHECK(sq.pattern.to_string() == "1^2 2");
}

TEST_CASE("factorisation products reproduce the input")
{
    std::mt19937_64 rng(17);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull, 101ull, 65521ull}) {
        for (int iter = 0; iter < 30; ++iter) {
            ModPoly a = random_mod_poly(rng, p, 1 + iter % 12);
            // force repeated factors now and then
            if (iter % 3 == 0) a = a * random_mod_poly(rng, p, 1 + iter % 3) * random_mod_poly(rng, p, 1);
            if (iter % 5 == 0) a = a * a;
            ModFactorization fac = factor(a);
            CHECK(fac.expand(p) == a);
            CHECK(fac.pattern.total_degree() == a.degree());
            for (const auto& f : fac.factors) CHECK(is_irreducible(f.factor));
            CHECK(factor_pattern(a) == fac.pattern);
            // reproducible with the same seed
            CHECK(factor(a).factors.size() == fac.factors.size());
        }
    }
}

TEST_CASE("Frobenius-matrix pattern agrees with full factorisation at large degree")
{
    std::mt19937_64 rng(23);
    for (std::uint64_t p : {2ull, 3ull, 31ull, 499ull, 1009ull}) {
        for (int iter = 0; iter < 4; ++iter) {
            ModPoly a = random_mod_poly(rng, p, 45 + 13 * iter).monic();
            if (!is_squarefree(a)) continue;
            FactorPattern fast = squarefree_pattern(a);
            CHECK(fast == factor(a).pattern);
            CHECK(fast.total_degree() == a.degree());
        }
    }
}

TEST_CASE("unramified splitting")
{
    IntPoly f{-2, 0, 1};
    CHECK(splitting_unramified(f, 7).to_string() == "1^1 1^1");
    CHECK(splitting_unramified(f, 5).to_string() == "2^1");
    CHECK_THROWS_AS(splitting_unramified(f, 2), DomainError);
}

TEST_CASE("splitting type notation")
{
    for (std::string s : {"1^1 1^5 1^20", "1^1 1^5 2^5 2^5", "1^1 (2^2)^8", "1^1 1^3 (2^3)^4", "1^1 1^1 3^8"}) {
        SplittingType t = parse_splitting_type(s);
        CHECK(t.to_string() == s);
    }
    CHECK(parse_splitting_type("1^1 (2^2)^8").degree() == 33);
    CHECK(parse_splitting_type("2^3 2^3 2^3").to_string() == "(2^3)^3");
    CHECK_THROWS_AS(parse_splitting_type("1^1 2"), DataError);
}

TEST_CASE("degree sieve")
{
    DegreeSieve s(26);
    s.add(FactorPattern::from_degrees({13, 13}));
    CHECK_FALSE(s.collapsed());
    s.add(FactorPattern::from_degrees({1, 25}));
    CHECK(s.collapsed());
    CHECK(s.remaining() == std::vector<int>{0, 26});

    CHECK_FALSE(irreducibility_certificate(IntPoly{-1, 0, 1}, 200).certified());
    CHECK(irreducibility_certificate(IntPoly{-2, 0, 1}, 200).certified());
}

TEST_CASE("degree sieve is monotone")
{
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> part(1, 6);
    for (int iter = 0; iter < 50; ++iter) {
        DegreeSieve s(30);
        std::size_t prev = s.remaining().size();
        for (int k = 0; k < 6; ++k) {
            std::vector<int> degs;
            int left = 30;
            while (left > 0) {
                int d = std::min(left, part(rng));
                degs.push_back(d);
                left -= d;
            }
            s.add(FactorPattern::from_degrees(degs));
            CHECK(s.remaining().size() <= prev);
            prev = s.remaining().size();
        }
    }
}

TEST_CASE("the ten polynomials are certified irreducible with p <= 200")
{
    for (const auto& id : test::all_rows()) {
        CAPTURE(id);
        auto cert = irreducibility_certificate(test::row_poly(id), 200);
        CHECK(cert.certified());
        CHECK(cert.remaining == std::vector<int>{0, test::row_poly(id).degree()});
    }
}

TEST_CASE("mod p patterns lie in the fingerprint of the claimed group")
{
    std::map<std::pair<int, std::uint64_t>, std::set<CycleType>> cache;
    for (const auto& row : test::table_rows()) {
        CAPTURE(row.id);
        IntPoly P = test::row_poly(row.id);
        REQUIRE(P.degree() == static_cast<int>(row.q + 1));
        auto key = std::make_pair(static_cast<int>(row.kind), row.q);
        if (!cache.count(key)) {
            FqField F(row.ell(), row.field_degree());
            cache[key] = cycle_type_fingerprint(F, row.kind);
        }
        const auto& fp = cache[key];
        int checked = 0;
        for (std::uint64_t p : primes_between(2, 200)) {
            ModPoly pm(p, P);
            if (!is_squarefree(pm)) continue;
            CAPTURE(p);
            CHECK(fp.count(squarefree_pattern(pm).degrees()) == 1);
            ++checked;
        }
        CHECK(checked > 30);
    }
}

TEST_CASE("pair resolvent small cases")
{
    auto r = pair_resolvent_mod_p(IntPoly{-2, 0, 1}, 1, 2, 7);
    REQUIRE(r.ok());
    CHECK(*r.resolvent == ModPoly(7, IntPoly{-2, 0, 1}));
    CHECK(r.pattern == FactorPattern::from_degrees({1, 1}));

    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull}) {
        auto q = pair_resolvent_mod_p(IntPoly{-1, 0, 1}, 1, 2, p);
        REQUIRE(q.ok());
        CHECK(*q.resolvent == ModPoly(p, IntPoly{-1, 0, 1}));
    }
    CHECK_FALSE(pair_resolvent_mod_p(IntPoly{-2, 0, 1}, 1, 2, 2).ok());
}

TEST_CASE("pair resolvent matches the product over integer roots")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> root(-12, 12);
    for (int iter = 0; iter < 25; ++iter) {
        const int n = 2 + iter % 4;
        std::vector<long> roots;
        while (static_cast<int>(roots.size()) < n) {
            long r0 = root(rng);
            if (std::find(roots.begin(), roots.end(), r0) == roots.end()) roots.push_back(r0);
        }
        IntPoly P{1};
        for (long r0 : roots) P = P * IntPoly::linear(r0);
        const long s = 1 + iter % 2, t = 2 + iter % 3;
        IntPoly Q{1};
        for (long a : roots)
            for (long b : roots)
                if (a != b) Q = Q * IntPoly::linear(s * a + t * b);
        for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 29ull}) {
            auto r = pair_resolvent_mod_p(P, s, t, p);
            if (r.skip_reason == "polynomial not squarefree" || r.skip_reason == "p divides s t") continue;
            REQUIRE(r.resolvent);
            CHECK(*r.resolvent == ModPoly(p, Q));
        }
    }
}

TEST_CASE("pair resolvent patterns agree with the root-pattern prediction")
{
    IntPoly P = test::row_poly("pgl25");
    for (std::uint64_t p : {11ull, 13ull, 19ull, 23ull}) {
        auto r = pair_resolvent_mod_p(P, 1, 2, p);
        if (!r.ok()) continue;
        CHECK(r.pattern.total_degree() == 26 * 25);
        CHECK(r.pattern == predicted_pair_pattern(r.root_pattern));
    }
    // a 3-cycle on three roots: pairs fall into two 3-cycles
    CHECK(predicted_pair_pattern(FactorPattern::from_degrees({3})) == FactorPattern::from_degrees({3, 3}));
    // a transposition fixing one root: three 2-cycles
    CHECK(predicted_pair_pattern(FactorPattern::from_degrees({1, 2})) == FactorPattern::from_degrees({2, 2, 2}));
}

TEST_CASE("double transitivity small cases")
{
    auto ok = double_transitivity_certificate(IntPoly{-2, 0, 1}, 1, 2, 100);
    CHECK(ok.verdict == DoubleTransitivityReport::Verdict::certified);
    auto bad = double_transitivity_certificate(IntPoly{-1, 0, 1}, 1, 2, 100);
    CHECK(bad.verdict == DoubleTransitivityReport::Verdict::failed);
    // S3 on three points is doubly transitive
    auto s3 = double_transitivity_certificate(IntPoly{-2, 0, 0, 1}, 1, 2, 100);
    CHECK(s3.verdict == DoubleTransitivityReport::Verdict::certified);
    // D4 on four points is not
    auto d4 = double_transitivity_certificate(IntPoly{-2, 0, 0, 0, 1}, 1, 2, 200);
    CHECK(d4.verdict == DoubleTransitivityReport::Verdict::evidence);
    CHECK(d4.contradictions.empty());
    for (const auto& [p, pat] : d4.patterns) CHECK(pat.total_degree() == 12);
}

TEST_CASE("factorisation over Q")
{
    IntPoly a{-2, 0, 1}, b{1, 1, 0, 1}, c{-3, 1};
    auto f = factor_over_q(a * b * c * c);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::make_pair(c, 2));
    CHECK(f[1] == std::make_pair(a, 1));
    CHECK(f[2] == std::make_pair(b, 1));
    // Swinnerton-Dyer style: x^4 - 10x^2 + 1 is irreducible but splits mod every prime
    auto sd = factor_over_q(IntPoly{1, 0, -10, 0, 1});
    REQUIRE(sd.size() == 1);
    CHECK(sd[0].first.degree() == 4);

    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 30; ++iter) {
        IntPoly prod{1};
        int pieces = 0;
        for (int k = 0; k < 3; ++k) {
            IntPoly g = test::random_poly(rng, 1 + (iter + k) % 4, 6);
            std::vector<Integer> gc(g.coeffs().begin(), g.coeffs().end());
            gc.back() = 1;
            prod = prod * IntPoly(gc);
            ++pieces;
        }
        auto fac = factor_over_q(prod);
        IntPoly back{1};
        for (const auto& [g, m] : fac)
            for (int i = 0; i < m; ++i) back = back * g;
        CHECK(back == prod);
        for (const auto& [g, m] : fac) CHECK(irreducibility_certificate(g, 300).certified() == true);
    }
}

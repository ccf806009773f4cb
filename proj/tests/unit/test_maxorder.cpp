#include "modgal/exact/mod_poly.hpp"
#include "modgal/factor/finite_factor.hpp"
#include "modgal/maxorder/order.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace modgal;
using namespace test;

namespace {

SplittingType kummer_splitting(const IntPoly& P, std::uint64_t p)
{
    std::vector<std::pair<int, int>> parts;
    for (const auto& f : factor_mod_p(P, p).factors) parts.emplace_back(f.factor.degree(), f.multiplicity);
    return SplittingType(parts);
}

}  // namespace

TEST_CASE("Dedekind test on quadratic examples")
{
    auto d = dedekind_test(IntPoly{3, 0, 1}, 2);
    CHECK_FALSE(d.maximal);
    CHECK(d.order.index_valuation() == 1);
    CHECK(p_maximal_order(IntPoly{3, 0, 1}, 2).index_valuation() == 1);
    CHECK(disc_valuation(IntPoly{3, 0, 1}, 2) == 0);

    CHECK(dedekind_test(IntPoly{-2, 0, 1}, 2).maximal);
    CHECK(disc_valuation(IntPoly{-2, 0, 1}, 2) == 3);
    CHECK(dedekind_test(IntPoly{-5, 0, 1}, 5).maximal);
    CHECK(disc_valuation(IntPoly{-5, 0, 1}, 5) == 1);
    CHECK(prime_splitting(IntPoly{3, 0, 1}, 2).to_string() == "2^1");
    CHECK(prime_splitting(IntPoly{-17, 0, 1}, 2).to_string() == "1^1 1^1");
}

TEST_CASE("random quadratics against the closed form")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-300, 300);
    int checked = 0;
    while (checked < 150) {
        const IntPoly P{d(rng), d(rng), 1};
        const Integer D = P[1] * P[1] - 4 * P[0];
        if (D == 0) continue;
        Integer s;
        if (D > 0 && mpz_perfect_square_p(D.get_mpz_t())) continue;
        const Integer dK = quadratic_field_disc(D);
        for (std::uint64_t p : {2, 3, 5, 7}) {
            const int expected = dK % p == 0 ? valuation(dK, p) : 0;
            CHECK(disc_valuation(P, p) == expected);
            CHECK(prime_splitting(P, p).to_string() == quadratic_splitting(dK, p));
        }
        ++checked;
    }
}

TEST_CASE("random cubics and quartics against a brute-force index")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> d(-40, 40);
    int checked = 0;
    while (checked < 60) {
        const int n = checked % 3 == 2 ? 4 : 3;
        std::vector<Integer> c(n + 1);
        for (int i = 0; i < n; ++i) c[i] = d(rng) * (checked % 2 ? 4 : 1);
        c[n] = 1;
        const IntPoly P(c);
        if (discriminant(P) == 0) continue;
        for (std::uint64_t p : {2, 3}) {
            if (n == 4 && p == 3 && checked % 4) continue;
            const int idx = p_maximal_order(P, p).index_valuation();
            CHECK(idx == brute_index(P, p));
            CHECK(disc_valuation(P, p) == valuation(discriminant(P), p) - 2 * idx);
        }
        ++checked;
    }
}

TEST_CASE("general splitting agrees with Kummer when Z[x] is p-maximal")
{
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 40) {
        IntPoly P = test::random_poly(rng, 3 + checked % 4, 30);
        std::vector<Integer> c(P.coeffs().begin(), P.coeffs().end());
        c.back() = 1;
        P = IntPoly(c);
        if (discriminant(P) == 0) continue;
        for (std::uint64_t p : {2, 3, 5}) {
            if (!dedekind_test(P, p).maximal) continue;
            CHECK(prime_splitting(P, p) == kummer_splitting(P, p));
        }
        ++checked;
    }
}

TEST_CASE("order serialization round-trip")
{
    const OrderBasis O = p_maximal_order(IntPoly{-4, 0, 0, 1}, 2);
    const OrderBasis back = OrderBasis::deserialize(O.serialize());
    CHECK(back == O);
    CHECK_THROWS_AS(OrderBasis::deserialize("order\nprime 2\nbogus 1\nend\n"), DataError);
    CHECK_THROWS_AS(OrderBasis::deserialize("order\nprime 2\n"), DataError);
}

TEST_CASE("structure constants close under multiplication")
{
    const OrderBasis O = p_maximal_order(IntPoly{-4, 0, 0, 1}, 2);
    const auto c = structure_constants(O, 3);
    CHECK(c.size() == 27);
    CHECK(O.index_valuation() > 0);
}

TEST_CASE("table discriminant valuations and splittings")
{
    for (const auto& row : test::table_rows()) {
        const IntPoly P = test::row_poly(row.id);
        for (const auto& [p, v] : row.disc) {
            CAPTURE(row.id);
            CAPTURE(p);
            const OrderBasis O = p_maximal_order(P, p);
            CHECK(valuation(discriminant(P), p) - 2 * O.index_valuation() == v);
            const auto comps = prime_components(O);
            std::vector<std::pair<int, int>> fe;
            int tame = 0;
            bool all_tame = true;
            for (const auto& comp : comps) {
                fe.emplace_back(comp.f, comp.e);
                tame += (comp.e - 1) * comp.f;
                all_tame = all_tame && comp.e % static_cast<int>(p) != 0;
            }
            const SplittingType st(fe);
            if (row.splitting.count(p)) CHECK(st == row.splitting.at(p));
            if (all_tame) CHECK(tame == v);
            if (O.index_valuation() == 0) CHECK(st == kummer_splitting(P, p));
        }
    }
}

#include "modgal/serre/serre.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace modgal;

TEST_CASE("tame level exponent")
{
    CHECK(level_exponent_tame(parse_splitting_type("1^1 1^5 2^5 2^5"), 29, 5) == 1);
    CHECK(level_exponent_tame(parse_splitting_type("1^1 2^1 3^1"), 29, 5) == 0);
    CHECK(level_exponent_tame(parse_splitting_type("2^5 2^5"), 29, 5) == 2);
    CHECK_THROWS_AS(level_exponent_tame(parse_splitting_type("1^1 1^3"), 3, 5), DomainError);
    CHECK_THROWS_AS(level_exponent_tame(parse_splitting_type("1^1 1^5"), 5, 5), DomainError);
}

TEST_CASE("wild index")
{
    CHECK(wild_index(parse_splitting_type("1^1 1^5 1^20"), 5) == 1);
    CHECK(wild_index(parse_splitting_type("1^1 1^25"), 5) == 2);
    CHECK(wild_index(parse_splitting_type("1^1 1^1 3^8"), 5) == 0);
    CHECK(wild_index(parse_splitting_type("1^1 1^32"), 2) == 5);
}

TEST_CASE("wild weight formula")
{
    CHECK(weight_wild(28, 25, 5, 1) == 2);
    CHECK(weight_wild(62, 32, 2, 5) == 2);
    CHECK(weight_wild(56, 49, 7, 2) == 2);
    CHECK(weight_wild(30, 25, 5, 2) == 2);
    CHECK(weight_wild(39, 27, 3, 3) == 2);
    // boundary v = q - 1 gives ceil(0)
    CHECK(weight_wild(24, 25, 5, 1) == 1);
    CHECK_THROWS_AS(weight_wild(23, 25, 5, 1), DomainError);
    CHECK_THROWS_AS(weight_wild(28, 25, 5, 0), DomainError);
    CHECK_THROWS_AS(weight_wild(28, 25, 5, 3), DomainError);
    CHECK_THROWS_AS(weight_wild(28, 25, 3, 1), DomainError);
    int prev = 0;
    for (int v = 24; v <= 34; ++v) {
        const int k = weight_wild(v, 25, 5, 1);
        CHECK(k >= prev);
        prev = k;
    }
}

TEST_CASE("tame weight bound")
{
    CHECK(weight_tame_bound(5).hi == 4);
    CHECK(weight_tame_bound(3).hi == 3);
    CHECK(weight_tame_bound(2).hi == 2);
    CHECK(weight_tame_bound(2).ell2_caveat);
    CHECK(weight_tame_bound(5).lo == 1);
}

TEST_CASE("oddness")
{
    CHECK(oddness(IntPoly{1, 0, 1}, 25));
    CHECK_FALSE(oddness(IntPoly{-2, 0, 1}, 25));
    CHECK(oddness(IntPoly{-2, 0, 1}, 32));
    for (const auto& id : test::all_rows()) CHECK(oddness(test::row_poly(id), test::table_row(id).q));
}

TEST_CASE("Serre reports reproduce the table")
{
    for (const auto& row : test::table_rows()) {
        CAPTURE(row.id);
        const auto r = serre_report(test::row_poly(row.id), row.q, row.kind, row.splitting, row.disc.at(row.ell()));
        CHECK(r.level == row.level);
        REQUIRE(r.weight.has_value());
        CHECK(*r.weight == row.weight);
        CHECK(r.odd);
        CHECK(r.level_squarefree);
    }
    const auto r = serre_report(test::row_poly("psl25_1"), 25, GroupKind::PSL2, test::table_row("psl25_1").splitting);
    CHECK(r.format_row() == "q=25 N=29 k=2 m=1 odd");
}

#include "modgal/attach/attach.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace modgal;

namespace {

struct Level157 {
    ModSymSpace sp = build_space(157);
    std::vector<EigenSystem> es = eigen_systems(sp, 27);
    const EigenSystem& plus() const { return es[0].atkin_lehner == 1 ? es[0] : es[1]; }
};

const Level157& level157()
{
    static const Level157 L;
    return L;
}

const FormData& form157()
{
    static const FormData f = [] {
        const auto& L = level157();
        return FormData::from_system(L.plus(), eigen_prime_coefficients(L.sp, L.plus(), 1000));
    }();
    return f;
}

ResidueEmbedding lambda157() { return *residue_embedding_of_degree(form157().a2_minpoly, 2, 5); }

FormData system_form(std::uint64_t N, const IntPoly& g, std::uint64_t bound)
{
    const auto sp = build_space(N);
    for (const auto& e : eigen_systems(sp, 30))
        if (e.a2_minpoly == g) return FormData::from_system(e, eigen_prime_coefficients(sp, e, bound));
    throw DataError("no such system");
}

QVec rational(long c, int d = 1)
{
    QVec v(static_cast<std::size_t>(d), Rational(0));
    v[0] = c;
    return v;
}

}  // namespace

TEST_CASE("Frobenius classes")
{
    const auto f = system_form(29, IntPoly{-1, 2, 1}, 50);
    const auto lam = *residue_embedding_of_degree(f.a2_minpoly, 5, 2);
    CHECK(lam.order() == 25);
    for (std::uint64_t p : {3, 7, 11, 13}) {
        const FrobClass c = frob_class(f, p, lam);
        CHECK(c.det == lam.field->from_int(static_cast<std::int64_t>(p)));
        CHECK(c.trace == lam.reduce(f.a.at(p)));
    }
    CHECK_THROWS_AS(frob_class(f, 29, lam), DomainError);
    CHECK_THROWS_AS(frob_class(f, 5, lam), DomainError);

    const auto lam2 = lambda157();
    CHECK(frob_class(form157(), 3, lam2).det.is_one());
    const FrobClass zero = frob_class(rational(0, 5), rational(1, 5), 3, 2, 157, lam2);
    CHECK(zero.theta().is_zero());
}

TEST_CASE("theta is invariant under scaling")
{
    std::mt19937_64 rng(3);
    for (const auto& F : {make_field(2, 5), make_field(5, 2), make_field(3, 3), make_field(7, 2)}) {
        std::uniform_int_distribution<std::uint64_t> pick(0, F->order() - 1);
        for (int i = 0; i < 2500; ++i) {
            const FqElement t = F->from_index(pick(rng));
            const FqElement d = F->from_index(pick(rng));
            const FqElement c = F->from_index(pick(rng));
            if (d.is_zero() || c.is_zero()) continue;
            CHECK(theta({t, d}) == theta({c * t, c * c * d}));
        }
    }
}

TEST_CASE("theta scan at level 157 over F_32")
{
    const auto& f = form157();
    const auto lam = lambda157();
    const auto full = theta_scan(f, lam, 1000, 10);
    CHECK(full.verdict() == "full");
    CHECK(full.seen.size() == 32);
    // smallest prime bound that already covers F_32 with n <= 10
    REQUIRE(full.full_at);
    CHECK(*full.full_at == 73);
    CHECK(theta_scan(f, lam, 73, 10).verdict() == "full");
    CHECK(theta_scan(f, lam, 72, 10).verdict() == "inconclusive");

    const auto small = theta_scan(f, lam, 20, 10);
    CHECK(small.verdict() == "inconclusive");
    CHECK_FALSE(small.coverage.missing.empty());

    // identity contributes 4, here 0
    CHECK(std::find(small.seen.begin(), small.seen.end(), lam.field->from_int(4)) != small.seen.end());

    std::size_t last = 0;
    for (std::uint64_t B : {10, 20, 50, 100})
        for (std::uint64_t M : {1, 2, 5}) {
            const auto r = theta_scan(f, lam, B, M);
            for (std::uint64_t M2 = M; M2 <= 5; ++M2) CHECK(theta_scan(f, lam, B, M2).seen.size() >= r.seen.size());
            if (M == 1) {
                CHECK(r.seen.size() >= last);
                last = r.seen.size();
            }
        }

    FormData truncated = f;
    truncated.a.erase(13);
    CHECK_THROWS_AS(theta_scan(truncated, lam, 100, 2), DataError);
    CHECK_NOTHROW(theta_scan(truncated, lam, 12, 2));
}

TEST_CASE("theta scans in odd characteristic stop at the squares")
{
    const auto f = system_form(29, IntPoly{-1, 2, 1}, 500);
    const auto lam = *residue_embedding_of_degree(f.a2_minpoly, 5, 2);
    const auto r = theta_scan(f, lam, 500, 10);
    CHECK(r.verdict() == "inconclusive");
    CHECK(r.squares_covered);
    CHECK(r.seen.size() == 13);
    CHECK_THROWS_AS(psl_pgl_decision(f, lam, r), DomainError);
}

TEST_CASE("PSL or PGL from the determinant character")
{
    const auto lam = lambda157();
    CHECK(psl_pgl_decision(form157(), lam, theta_scan(form157(), lam, 100, 10)) == ProjectiveKind::PSL);

    // trivial character, q = 25: F_5 lies in the squares of F_25
    const auto f29 = system_form(29, IntPoly{-1, 2, 1}, 100);
    CHECK(det_lands_in_squares(f29, *residue_embedding_of_degree(f29.a2_minpoly, 5, 2)));
    // trivial character, q = 27: -1 is not a square in F_27
    const auto f41 = system_form(41, IntPoly{-1, -5, 1, 1}, 100);
    CHECK_FALSE(det_lands_in_squares(f41, *residue_embedding_of_degree(f41.a2_minpoly, 3, 3)));

    const auto fx = FormData::from_fixture(load_fixture(test::data_dir() + "/fixtures/N17.fixture"));
    const auto lams = residue_embeddings(fx.a2_minpoly, 5);
    REQUIRE(lams.size() == 2);
    for (const auto& l : lams) {
        CHECK(l.order() == 25);
        // det(Frob_2) = i 2 is a square, but eps has order 8 and its image is not
        CHECK(frob_class(fx, 2, l).det.is_square());
        CHECK_FALSE(det_lands_in_squares(fx, l));
    }

    // characteristic 2 never gives PGL, whatever the character
    for (const auto& l : residue_embeddings(fx.a2_minpoly, 2)) CHECK(det_lands_in_squares(fx, l));
}

TEST_CASE("residue field test")
{
    // F_f = Q(sqrt 2) via a_3 = 1 + x, x^2 = 2; 5 is inert
    FormData sq2;
    sq2.N = 1009;
    sq2.a2_minpoly = IntPoly{-2, 0, 1};
    sq2.a[2] = QVec{Rational(0), Rational(1)};
    auto r = residue_field_test(sq2, 5, 25);
    CHECK(r.verdict == FieldVerdict::Inconclusive);  // a_2^2 = 2 does not generate
    sq2.a[3] = QVec{Rational(1), Rational(1)};
    r = residue_field_test(sq2, 5, 25);
    CHECK(r.verdict == FieldVerdict::Compatible);
    CHECK(r.witness == 3u);
    CHECK(r.compatible.size() == 1);
    // 7 splits in Q(sqrt 2)
    CHECK(residue_field_test(sq2, 7, 49).verdict == FieldVerdict::Incompatible);

    const auto f11 = system_form(11, IntPoly{2, 1}, 50);
    r = residue_field_test(f11, 5, 25);
    CHECK(r.verdict == FieldVerdict::Incompatible);
    CHECK(r.residue_degrees == std::vector<int>{1});

    const auto f29 = system_form(29, IntPoly{-1, 2, 1}, 50);
    r = residue_field_test(f29, 5, 25);
    CHECK(r.verdict == FieldVerdict::Compatible);
    CHECK(r.generator_minpoly.degree() == 2);

    // |a_2|^2 generates the real quadratic subfield of Q(zeta_8)
    const auto fx = FormData::from_fixture(load_fixture(test::data_dir() + "/fixtures/N17.fixture"));
    r = residue_field_test(fx, 5, 25);
    CHECK(r.verdict == FieldVerdict::Compatible);
    CHECK(r.witness == 2u);

    CHECK_THROWS_AS(residue_field_test(f29, 5, 20), DomainError);
    CHECK_THROWS_AS(residue_field_test(FormData{}, 5, 25), DataError);
}

TEST_CASE("fixed point patterns")
{
    CHECK(fixed_point_pattern(FactorPattern::from_degrees({1, 1, 1})));
    CHECK(fixed_point_pattern(FactorPattern::from_degrees({1, 5, 5, 5, 5, 5})));
    CHECK_FALSE(fixed_point_pattern(FactorPattern::from_degrees({1, 1, 31})));
    CHECK_FALSE(fixed_point_pattern(FactorPattern::from_degrees({2, 2, 2})));
    CHECK_FALSE(fixed_point_pattern(FactorPattern::from_degrees({1, 2, 3})));
}

TEST_CASE("theta = 4 against factorisation patterns")
{
    const auto& f = form157();
    const auto lam = lambda157();
    const IntPoly P = test::row_poly("psl32");
    const auto r = theta4_correspondence(P, f, lam, 500, 4);
    CHECK(r.disagreements.empty());
    CHECK(r.rows.size() + r.skipped.size() == primes_between(2, 500).size());
    CHECK(r.summary() == "theta4: B=500 checked=92 skipped=3 disagreements=0");
    for (const auto& row : r.rows) {
        const auto deg = row.pattern.degrees();
        if (std::count(deg.begin(), deg.end(), 1) == static_cast<long>(deg.size())) CHECK(row.theta_is_4);
        if (std::count(deg.begin(), deg.end(), 1) == 0) CHECK_FALSE(row.theta_is_4);
    }
    CHECK(theta4_correspondence(P, f, lam, 500, 1).format() == r.format());

    // wrong pairing: the level 157 form against a degree 26 polynomial
    const auto wrong = theta4_correspondence(test::row_poly("psl25_1"), f, lam, 100);
    CHECK_FALSE(wrong.disagreements.empty());
    CHECK(wrong.disagreements.front() <= 100);
}

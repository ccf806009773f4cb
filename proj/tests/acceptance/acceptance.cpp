// One PASS/FAIL line per acceptance criterion, computed from scratch.
//
// Exit status: 0 when every criterion passes, or when the only failure is
// the theta-image statement for odd q that PSL2 itself violates (see
// known_prop1_failure). --strict turns that into a failure too.

#include "modgal/attach/attach.hpp"
#include "modgal/cli/table.hpp"
#include "modgal/cli/verify.hpp"
#include "modgal/factor/certificate.hpp"
#include "modgal/factor/rational_factor.hpp"
#include "modgal/factor/resolvent.hpp"
#include "modgal/ffield/dickson.hpp"
#include "modgal/maxorder/order.hpp"
#include "modgal/serre/serre.hpp"
#include "modgal/util/parallel.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace modgal;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
    /// Failure matches the documented odd-q theta image exception exactly.
    bool known_exception = false;
};

struct Failures {
    std::vector<std::string> items;
    void expect(bool ok, const std::string& what)
    {
        if (!ok) items.push_back(what);
    }
    std::string join() const
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < items.size() && i < 6; ++i) os << (i ? "; " : "") << items[i];
        if (items.size() > 6) os << "; and " << items.size() - 6 << " more";
        return os.str();
    }
};

// g irreducible and monic divides f exactly when it is one of the factors of f over Q.
bool factor_of(const IntPoly& g, const IntPoly& f)
{
    for (const auto& [h, e] : factor_over_q(f))
        if (h == g) return true;
    return false;
}

bool irreducible_over_q(const IntPoly& f)
{
    const auto fs = factor_over_q(f);
    return fs.size() == 1 && fs[0].second == 1;
}

std::string primes_text(const std::vector<std::uint64_t>& v, std::size_t limit = 8)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) os << (i ? " " : "") << v[i];
    if (v.size() > limit) os << " ...";
    return os.str();
}

struct Level157 {
    ModSymSpace sp = build_space(157);
    std::vector<EigenSystem> es = eigen_systems(sp, 27);
    const EigenSystem& sign(int w) const { return es[0].atkin_lehner == w ? es[0] : es[1]; }
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
        return FormData::from_system(L.sign(1), eigen_prime_coefficients(L.sp, L.sign(1), 1000));
    }();
    return f;
}

Outcome disc_valuations()
{
    Failures bad;
    int cells = 0;
    for (const auto& row : test::table_rows()) {
        const IntPoly P = test::row_poly(row.id);
        for (const auto& [p, v] : row.disc) {
            const int got = disc_valuation(P, p);
            bad.expect(got == v, row.id + " at " + std::to_string(p) + ": " + std::to_string(got) + " expected " +
                                     std::to_string(v));
            ++cells;
        }
    }
    if (!bad.items.empty()) return {false, bad.join()};
    return {true, std::to_string(cells) + " cells over 10 rows exact"};
}

Outcome splittings()
{
    Failures bad;
    int cells = 0;
    for (const auto& row : test::table_rows()) {
        const IntPoly P = test::row_poly(row.id);
        for (const auto& [p, st] : row.splitting) {
            const SplittingType got = prime_splitting(P, p);
            bad.expect(got == st, row.id + " at " + std::to_string(p) + ": " + got.to_string() + " expected " +
                                      st.to_string());
            ++cells;
        }
    }
    if (!bad.items.empty()) return {false, bad.join()};
    return {true, std::to_string(cells) + " cells over 10 rows exact"};
}

Outcome serre_invariants()
{
    // m forced by the ramification index of the totally wild prime above ell
    const std::map<int, int> forced_m = {{20, 1}, {25, 2}, {32, 5}, {27, 3}, {49, 2}};
    Failures bad;
    for (const auto& row : test::table_rows()) {
        const IntPoly P = test::row_poly(row.id);
        const SerreReport r = serre_report(P, row.q, row.kind, row.splitting);
        bad.expect(r.level == row.level, row.id + " N=" + std::to_string(r.level));
        bad.expect(r.weight && *r.weight == row.weight,
                   row.id + " k=" + (r.weight ? std::to_string(*r.weight) : std::string("undetermined")));
        int e_max = 0;
        for (const auto& [f, e] : row.splitting.at(row.ell()).parts) e_max = std::max(e_max, e);
        const auto it = forced_m.find(e_max);
        bad.expect(it != forced_m.end() && r.wild_index == it->second,
                   row.id + " m=" + std::to_string(r.wild_index) + " for e=" + std::to_string(e_max));
        bad.expect(r.odd, row.id + " not odd");
    }
    if (!bad.items.empty()) return {false, bad.join()};
    return {true, "(N, k) of all 10 rows, every k = 2 with the forced m"};
}

Outcome modular_side()
{
    Failures bad;
    std::ostringstream os;
    for (std::uint64_t N : {23, 29, 31, 41, 43, 157}) {
        const auto sp = build_space(N);
        const IntPoly cp = integral_charpoly(hecke_matrix(sp, 2));
        for (const auto& row : test::table_rows()) {
            if (row.level != N || !row.a2_minpoly) continue;
            bad.expect(factor_of(*row.a2_minpoly, cp), row.id + " minpoly does not divide charpoly at " + std::to_string(N));
            if (N == 23 || N == 29 || N == 31)
                bad.expect(cp == *row.a2_minpoly, "charpoly at " + std::to_string(N) + " is " + cp.to_string());
        }
    }
    const auto row = test::table_row("psl32");
    const auto& L = level157();
    bool quintic = false;
    for (const auto& e : L.es) {
        if (e.degree() != row.a2_degree) continue;
        quintic = true;
        bad.expect(e.a2_minpoly[0] == *row.a2_constant, "157 quintic constant term");
        bad.expect(e.atkin_lehner == 1, "157 quintic has W = " + std::to_string(e.atkin_lehner));
        os << "157 quintic " << e.a2_minpoly.to_string() << " W=+1";
    }
    bad.expect(quintic, "no quintic factor at 157");
    if (!bad.items.empty()) return {false, bad.join()};
    return {true, "divisibility at 23 29 31 41 43 157, equality at 23 29 31; " + os.str()};
}

Outcome sturm()
{
    const auto& L = level157();
    Failures bad;
    const auto r2 = sturm_congruence(L.sign(1), L.sign(-1), 2, 27);
    bad.expect(r2.congruent, "not congruent mod 2 through 27");
    for (std::uint64_t ell : {3, 5, 7})
        bad.expect(!sturm_congruence(L.sign(1), L.sign(-1), ell, 27).congruent,
                   "congruent mod " + std::to_string(ell));
    if (!bad.items.empty()) return {false, bad.join()};
    return {true, "congruent mod 2 through n = 27 over F_2[x]/(" + r2.residue1->to_string() +
                      "), not mod 3 5 7"};
}

Outcome theta_surjectivity()
{
    const auto& f = form157();
    const auto lam = residue_embedding_of_degree(f.a2_minpoly, 2, 5);
    if (!lam) return {false, "no degree 5 prime above 2"};
    const auto scan = theta_scan(f, *lam, 1000, 10);
    if (!scan.coverage.full)
        return {false, "coverage " + std::to_string(scan.seen.size()) + "/32 at p <= 1000, n <= 10"};
    const auto kind = psl_pgl_decision(f, *lam, scan);
    std::ostringstream os;
    os << "full F_32 coverage at p <= 1000, n <= 10, minimal prime bound " << *scan.full_at << ", "
       << to_string(kind);
    return {kind == ProjectiveKind::PSL, os.str()};
}

Outcome theta4(unsigned jobs)
{
    const auto& f = form157();
    const auto lam = *residue_embedding_of_degree(f.a2_minpoly, 2, 5);
    const auto r = theta4_correspondence(test::row_poly("psl32"), f, lam, 500, jobs);
    const auto neg = theta4_correspondence(test::row_poly("psl25_1"), f, lam, 100, jobs);
    std::ostringstream os;
    os << r.summary() << "; control disagrees at p = " << primes_text(neg.disagreements);
    return {r.disagreements.empty() && !r.rows.empty() && !neg.disagreements.empty(), os.str()};
}

Outcome irreducible_and_odd()
{
    Failures bad;
    for (const auto& row : test::table_rows()) {
        const IntPoly P = test::row_poly(row.id);
        bad.expect(irreducibility_certificate(P, 200).certified(), row.id + " not certified with p <= 200");
        bad.expect(real_root_count(P) < P.degree(), row.id + " totally real");
    }
    if (!bad.items.empty()) return {false, bad.join()};
    return {true, "10 certificates with p <= 200, no row totally real"};
}

// Odd q: theta(PSL2(F_q)) is the squares and 0, so the whole group is the
// one subgroup where "theta covers F_q" and "G = PSL2" disagree.
bool known_prop1_failure(const DicksonReport& r)
{
    if (r.q % 2 == 0) return false;
    return r.counterexamples == std::vector<std::size_t>{r.group_order} && r.theta_image_size == (r.q + 1) / 2;
}

Outcome property_suites(unsigned jobs)
{
    Failures bad;
    std::ostringstream os;

    // theta-image statement, every subgroup
    bool only_known = true;
    std::vector<std::uint64_t> qs = {4, 5, 7, 8, 9};
    const auto reports = parallel_map<DicksonReport>(qs.size(), jobs, [&](std::size_t i) {
        return dickson_prop1_bruteforce(qs[i]);
    });
    std::vector<std::uint64_t> failing_q;
    for (const auto& r : reports)
        if (!r.counterexamples.empty()) {
            failing_q.push_back(r.q);
            if (!known_prop1_failure(r)) only_known = false;
        }
    const bool dickson_ok = failing_q.empty();
    if (!dickson_ok)
        os << "theta image statement has counterexamples at q = " << primes_text(failing_q)
           << " (PSL2 itself, its image is the (q+1)/2 squares)";

    // conjugation invariance
    std::mt19937_64 rng(2024);
    int samples = 0;
    const std::vector<std::pair<std::uint64_t, int>> fields = {{2, 5}, {5, 2}, {3, 3}, {7, 2}};
    for (const auto& [p, k] : fields) {
        FqField F(p, k);
        for (int i = 0; i < 2500; ++i, ++samples) {
            const Mat2 g = test::random_invertible(F, rng);
            const Mat2 h = test::random_invertible(F, rng);
            if (theta((h * g * h.inverse()).cls()) != theta(g.cls())) {
                bad.expect(false, "theta not conjugation invariant over F_" + std::to_string(F.order()));
                break;
            }
        }
    }

    // trace_power recurrence against matrix powers
    for (const auto& [p, k] : fields) {
        FqField F(p, k);
        for (int i = 0; i < 50; ++i) {
            const Mat2 m = test::random_invertible(F, rng);
            Mat2 power = Mat2::identity(F);
            for (std::uint64_t n = 0; n <= 40; ++n) {
                const auto r = trace_power(m.trace(), m.det(), n);
                if (r.trace != power.trace() || r.det != power.det())
                    bad.expect(false, "trace_power differs at n = " + std::to_string(n));
                power = power * m;
            }
        }
    }

    // Round 2 against closed-form quadratic discriminants and brute-force cubic indices
    std::uniform_int_distribution<long> d2(-500, 500), d3(-30, 30);
    int quadratics = 0, cubics = 0;
    while (quadratics < 50) {
        const IntPoly P{d2(rng), d2(rng), 1};
        const Integer D = P[1] * P[1] - 4 * P[0];
        if (D == 0 || (D > 0 && mpz_perfect_square_p(D.get_mpz_t()))) continue;
        const Integer dK = test::quadratic_field_disc(D);
        for (std::uint64_t p : {2, 3, 5, 7}) {
            const int expected = dK % p == 0 ? valuation(dK, p) : 0;
            bad.expect(disc_valuation(P, p) == expected, "quadratic " + P.to_string());
        }
        ++quadratics;
    }
    while (cubics < 50) {
        const IntPoly P{d3(rng) * (cubics % 2 ? 4 : 1), d3(rng) * (cubics % 2 ? 4 : 1), d3(rng), 1};
        if (discriminant(P) == 0 || !irreducible_over_q(P)) continue;
        for (std::uint64_t p : {2, 3}) {
            const int idx = test::brute_index(P, p);
            bad.expect(disc_valuation(P, p) == valuation(discriminant(P), p) - 2 * idx, "cubic " + P.to_string());
        }
        ++cubics;
    }

    // fingerprints
    std::size_t patterns = 0;
    for (const auto& row : test::table_rows()) {
        const auto fc = fingerprint_check(test::row_poly(row.id), row.q, row.kind, 200);
        patterns += fc.checked;
        bad.expect(fc.ok(), row.id + " has patterns outside the fingerprint");
    }

    std::ostringstream others;
    others << samples << " conjugation samples, trace_power to n = 40, " << quadratics << " quadratics and " << cubics
           << " cubics against Round 2, " << patterns << " mod p patterns in fingerprints";
    if (!bad.items.empty()) return {false, bad.join() + (dickson_ok ? "" : "; " + os.str())};
    if (!dickson_ok) return {false, os.str() + "; other suites pass: " + others.str(), only_known};
    return {true, "theta image statement verified for q = 4 5 7 8 9; " + others.str()};
}

Outcome double_transitivity(unsigned jobs)
{
    Failures bad;
    std::ostringstream os;
    bool first = true;
    for (const auto& row : test::table_rows()) {
        const IntPoly P = test::row_poly(row.id);
        if (P.degree() != 26 && P.degree() != 28) continue;
        const auto r = double_transitivity_certificate(P, 1, 2, 500, jobs);
        const bool ok = r.contradictions.empty() &&
                        (r.verdict == DoubleTransitivityReport::Verdict::certified ||
                         (r.verdict == DoubleTransitivityReport::Verdict::evidence && r.evidence() >= 50));
        bad.expect(ok, row.id + " " + r.verdict_name() + (r.failure.empty() ? "" : " (" + r.failure + ")"));
        os << (first ? "" : ", ") << row.id << " " << r.verdict_name();
        if (r.verdict == DoubleTransitivityReport::Verdict::evidence) os << " from " << r.evidence() << " primes";
        first = false;
    }
    if (!bad.items.empty()) return {false, bad.join()};
    return {true, os.str()};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance checks"};
    bool strict = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<int> only;
    app.add_flag("--strict", strict, "Exit nonzero on any failure, documented or not");
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--only", only, "Run only these criteria, comma separated")->delimiter(',')->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"discriminant valuations", disc_valuations},
        {"splittings", splittings},
        {"Serre level and weight", serre_invariants},
        {"charpoly of T2", modular_side},
        {"Sturm congruence at 157", sturm},
        {"theta surjectivity", theta_surjectivity},
        {"theta = 4 correspondence", [&] { return theta4(jobs); }},
        {"irreducibility and oddness", irreducible_and_odd},
        {"property suites", [&] { return property_suites(jobs); }},
        {"double transitivity", [&] { return double_transitivity(jobs); }},
    };

    int unexpected = 0, documented = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
                  << o.detail << std::endl;
        std::cerr << "  criterion " << id << " took " << std::fixed << std::setprecision(1) << secs << " s\n";
        if (!o.pass) ++(o.known_exception ? documented : unexpected);
    }
    if (documented) std::cout << "documented failures: " << documented << " (odd q theta image, see README)\n";
    if (unexpected || (strict && documented)) return 1;
    return 0;
}

#include "modgal/attach/attach.hpp"

#include "modgal/factor/finite_factor.hpp"
#include "modgal/maxorder/order.hpp"
#include "modgal/util/parallel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace modgal {

namespace {

QVec unit_vector(int d, long c)
{
    QVec v(static_cast<std::size_t>(d), Rational(0));
    v[0] = c;
    return v;
}

QVec eps_value(const FormData& f, std::uint64_t p)
{
    const int d = f.a2_minpoly.degree();
    const auto it = f.eps.find(p);
    const int e = it == f.eps.end() ? 0 : it->second;
    if (f.eps_order == 1 || e == 0) return unit_vector(d, 1);
    if (f.zeta) return nf_pow(*f.zeta, static_cast<unsigned>(e), f.a2_minpoly);
    if (f.eps_order == 2) return unit_vector(d, e % 2 ? -1 : 1);
    throw DataError("character of order " + std::to_string(f.eps_order) + " without a root of unity");
}

std::string join(const std::vector<std::uint64_t>& v, std::size_t limit = 20)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) os << (i ? " " : "") << v[i];
    if (v.size() > limit) os << " ...";
    return os.str();
}

}  // namespace

FormData FormData::from_system(const EigenSystem& e, const std::map<std::uint64_t, QVec>& primes)
{
    FormData f;
    f.N = e.N;
    f.k = 2;
    f.a2_minpoly = e.a2_minpoly;
    f.source = "modular symbols, level " + std::to_string(e.N);
    for (std::uint64_t p : primes_between(2, e.bound())) f.a.emplace(p, e.coeff(p));
    for (const auto& [p, v] : primes) {
        const auto [it, fresh] = f.a.emplace(p, v);
        if (!fresh && it->second != v) throw DataError("conflicting a_" + std::to_string(p));
    }
    return f;
}

FormData FormData::from_fixture(const FormFixture& fx)
{
    FormData f;
    f.N = fx.N;
    f.k = fx.k;
    f.a2_minpoly = fx.a2_minpoly;
    f.eps_order = fx.eps_order;
    f.zeta = fx.zeta;
    f.source = "fixture, level " + std::to_string(fx.N);
    for (const auto& en : fx.entries) {
        f.a.emplace(en.p, en.a);
        f.eps.emplace(en.p, en.eps);
    }
    return f;
}

QVec FormData::twisted_square(std::uint64_t p) const
{
    const auto it = a.find(p);
    if (it == a.end()) throw DataError("no a_" + std::to_string(p));
    const QVec sq = nf_mul(it->second, it->second, a2_minpoly);
    const auto e = eps.find(p);
    if (eps_order == 1 || e == eps.end() || e->second == 0) return sq;
    // zeta^-e = zeta^(order - e); the order 2 character without zeta is its own inverse
    if (!zeta) return nf_mul(sq, eps_value(*this, p), a2_minpoly);
    const int inv = (eps_order - e->second % eps_order) % eps_order;
    return nf_mul(sq, nf_pow(*zeta, static_cast<unsigned>(inv), a2_minpoly), a2_minpoly);
}

FqElement ResidueEmbedding::reduce(const QVec& v) const
{
    const PrimeField Fl(ell);
    std::vector<std::uint64_t> c;
    for (const auto& x : v) {
        const std::uint64_t den = mod_u64(x.get_den(), ell);
        if (den == 0) throw DomainError("element is not integral at " + std::to_string(ell));
        c.push_back(Fl.mul(mod_u64(x.get_num(), ell), Fl.inv(den)));
    }
    return field->from_poly(ModPoly(ell, c) % factor);
}

std::vector<ResidueEmbedding> residue_embeddings(const IntPoly& g, std::uint64_t ell)
{
    if (!is_prime(ell)) throw DomainError(std::to_string(ell) + " is not prime");
    if (!g.is_monic()) throw DomainError("minimal polynomial of a_2 must be monic");
    std::vector<ResidueEmbedding> out;
    for (const auto& fac : factor_mod_p(g, ell).factors) {
        ResidueEmbedding r;
        r.ell = ell;
        r.a2_minpoly = g;
        r.factor = fac.factor;
        r.multiplicity = fac.multiplicity;
        r.field = make_field(ell, fac.factor.degree(), fac.factor);
        out.push_back(std::move(r));
    }
    return out;
}

std::optional<ResidueEmbedding> residue_embedding_of_degree(const IntPoly& g, std::uint64_t ell, int degree)
{
    for (auto& r : residue_embeddings(g, ell))
        if (r.residue_degree() == degree) return r;
    return std::nullopt;
}

FrobClass frob_class(const QVec& a_p, const QVec& eps_value, std::uint64_t p, int k, std::uint64_t N,
                     const ResidueEmbedding& lambda)
{
    if (p == lambda.ell || N % p == 0)
        throw DomainError("Frobenius at " + std::to_string(p) + " is not defined: p divides N ell");
    if (k < 1) throw DomainError("weight must be positive");
    const FqField& F = *lambda.field;
    FrobClass c;
    c.p = p;
    c.trace = lambda.reduce(a_p);
    c.det = lambda.reduce(eps_value) * F.from_int(static_cast<std::int64_t>(p % lambda.ell)).pow(static_cast<std::uint64_t>(k - 1));
    return c;
}

FrobClass frob_class(const FormData& f, std::uint64_t p, const ResidueEmbedding& lambda)
{
    const auto it = f.a.find(p);
    if (it == f.a.end()) throw DataError("no a_" + std::to_string(p));
    return frob_class(it->second, eps_value(f, p), p, f.k, f.N, lambda);
}

std::string ThetaScanReport::format() const
{
    std::ostringstream os;
    os << "theta-scan ell=" << ell << " q=" << field_order << " B=" << prime_bound << " M=" << power_bound
       << " primes=" << primes.size() << " seen=" << seen.size() << "/" << field_order << " verdict=" << verdict();
    if (full_at) os << " full_at=" << *full_at;
    if (ell != 2) os << " squares=" << (squares_covered ? "covered" : "partial");
    os << "\n";
    if (!coverage.full) {
        os << "missing:";
        for (const auto& m : coverage.missing) os << " " << m.to_string();
        os << "\n";
    }
    return os.str();
}

ThetaScanReport theta_scan(const FormData& f, const ResidueEmbedding& lambda, std::uint64_t prime_bound,
                           std::uint64_t power_bound)
{
    if (prime_bound < 2 || power_bound < 1) throw DomainError("theta scan bounds must be positive");
    ThetaScanReport r;
    r.ell = lambda.ell;
    r.field_order = lambda.order();
    r.prime_bound = prime_bound;
    r.power_bound = power_bound;
    std::vector<std::uint64_t> missing;
    for (std::uint64_t p : primes_between(2, prime_bound)) {
        if (p == lambda.ell || f.N % p == 0) continue;
        if (!f.has(p)) missing.push_back(p);
        r.primes.push_back(p);
    }
    if (!missing.empty()) throw DataError("eigenvalue data missing for p = " + join(missing));

    const FqField& F = *lambda.field;
    const FqElement four = F.from_int(4);
    std::set<std::uint64_t> seen{four.index()};  // the identity
    for (std::uint64_t p : r.primes) {
        const FrobClass c = frob_class(f, p, lambda);
        for (std::uint64_t n = 1; n <= power_bound; ++n) {
            const TracePower tp = trace_power(c.trace, c.det, n);
            if (tp.det.is_square()) seen.insert((tp.trace * tp.trace / tp.det).index());
        }
        if (!r.full_at && seen.size() == r.field_order) r.full_at = p;
    }
    for (std::uint64_t i : seen) r.seen.push_back(F.from_index(i));
    r.coverage = theta_coverage_verdict(r.seen, F);
    if (lambda.ell != 2) {
        r.squares_covered = std::all_of(r.coverage.missing.begin(), r.coverage.missing.end(),
                                        [](const FqElement& x) { return !x.is_square(); });
    }
    return r;
}

std::string to_string(ProjectiveKind k) { return k == ProjectiveKind::PSL ? "PSL" : "PGL"; }

bool det_lands_in_squares(const FormData& f, const ResidueEmbedding& lambda)
{
    const FqField& F = *lambda.field;
    if (lambda.ell == 2) return true;
    if (f.N % lambda.ell == 0) throw DomainError("ell divides the level");
    bool squares = true;
    if (f.eps_order > 1) {
        const QVec z = f.zeta ? *f.zeta : unit_vector(f.a2_minpoly.degree(), -1);
        squares = lambda.reduce(z).is_square();
    }
    for (std::uint64_t a = 1; a < lambda.ell && squares; ++a)
        squares = F.from_int(static_cast<std::int64_t>(a)).pow(static_cast<std::uint64_t>(f.k - 1)).is_square();

    for (const auto& [p, ap] : f.a) {
        if (p == lambda.ell || f.N % p == 0) continue;
        if (!frob_class(f, p, lambda).det.is_square() && squares)
            throw Error("det at " + std::to_string(p) + " is a non-square inside the square class");
    }
    return squares;
}

ProjectiveKind psl_pgl_decision(const FormData& f, const ResidueEmbedding& lambda, const ThetaScanReport& coverage)
{
    if (!coverage.coverage.full) throw DomainError("PSL/PGL decision needs full theta coverage");
    // In characteristic 2 every element is a square and PGL2 = PSL2.
    return det_lands_in_squares(f, lambda) ? ProjectiveKind::PSL : ProjectiveKind::PGL;
}

std::string to_string(FieldVerdict v)
{
    switch (v) {
    case FieldVerdict::Compatible: return "compatible";
    case FieldVerdict::Incompatible: return "incompatible";
    default: return "inconclusive";
    }
}

std::string ResidueFieldReport::format() const
{
    std::ostringstream os;
    os << "residue-field ell=" << ell << " q=" << q << " verdict=" << to_string(verdict);
    if (witness) {
        os << " witness=" << *witness << " degrees=";
        for (std::size_t i = 0; i < residue_degrees.size(); ++i) os << (i ? "," : "") << residue_degrees[i];
        os << " compatible=" << compatible.size();
    }
    if (!reason.empty()) os << " (" << reason << ")";
    os << "\n";
    return os.str();
}

ResidueFieldReport residue_field_test(const FormData& f, std::uint64_t ell, std::uint64_t q)
{
    ResidueFieldReport r;
    r.ell = ell;
    r.q = q;
    if (!is_prime(ell)) throw DomainError(std::to_string(ell) + " is not prime");
    int fq = 0;
    for (std::uint64_t t = q; t > 1; t /= ell) {
        if (t % ell) throw DomainError(std::to_string(q) + " is not a power of " + std::to_string(ell));
        ++fq;
    }
    if (fq == 0) throw DomainError("q must be at least ell");
    if (f.a.empty()) throw DataError("no eigenvalue data");

    // K is CM when the character has order above 2; F_f is then its real subfield.
    const int d = f.a2_minpoly.degree();
    const int expected = f.eps_order > 2 ? d / 2 : d;
    for (const auto& [p, ap] : f.a) {
        if (p == ell || f.N % p == 0) continue;
        const IntPoly m = nf_minpoly(f.twisted_square(p), f.a2_minpoly);
        if (m.degree() != expected || !m.is_monic()) continue;
        if (!dedekind_test(m, ell).maximal) continue;
        r.witness = p;
        r.generator_minpoly = m;
        for (const auto& fac : factor_mod_p(m, ell).factors) {
            r.residue_degrees.push_back(fac.factor.degree());
            if (fac.factor.degree() == fq) r.compatible.push_back(fac.factor);
        }
        r.verdict = r.compatible.empty() ? FieldVerdict::Incompatible : FieldVerdict::Compatible;
        return r;
    }
    r.reason = "no prime in the data gives a generator of F_f with Z[generator] maximal at " + std::to_string(ell);
    return r;
}

bool fixed_point_pattern(const FactorPattern& pat)
{
    const std::vector<int> deg = pat.degrees();
    const auto ones = std::count(deg.begin(), deg.end(), 1);
    if (ones == static_cast<long>(deg.size())) return true;
    if (ones != 1) return false;
    const int other = deg.back();
    return std::all_of(deg.begin() + 1, deg.end(), [other](int x) { return x == other; });
}

std::string Theta4Report::summary() const
{
    std::ostringstream os;
    os << "theta4: B=" << prime_bound << " checked=" << rows.size() << " skipped=" << skipped.size()
       << " disagreements=" << disagreements.size();
    if (!disagreements.empty()) os << " at p=" << join(disagreements);
    return os.str();
}

std::string Theta4Report::format() const
{
    std::ostringstream os;
    for (const auto& row : rows)
        os << "p=" << row.p << " theta=" << row.theta.to_string() << " pattern=" << row.pattern.to_string()
           << " theta4=" << (row.theta_is_4 ? "yes" : "no") << " fixed=" << (row.pattern_is_fixed ? "yes" : "no")
           << " " << (row.agree() ? "ok" : "DISAGREE") << "\n";
    os << summary() << "\n";
    return os.str();
}

Theta4Report theta4_correspondence(const IntPoly& P, const FormData& f, const ResidueEmbedding& lambda,
                                   std::uint64_t prime_bound, unsigned jobs)
{
    Theta4Report r;
    r.prime_bound = prime_bound;
    std::vector<std::uint64_t> good;
    for (std::uint64_t p : primes_between(2, prime_bound)) {
        if (p == lambda.ell || f.N % p == 0 || mod_u64(P.lead(), p) == 0) {
            r.skipped.push_back(p);
            continue;
        }
        if (!is_squarefree(ModPoly(p, P))) {
            r.skipped.push_back(p);
            continue;
        }
        if (!f.has(p)) throw DataError("eigenvalue data missing for p = " + std::to_string(p));
        good.push_back(p);
    }
    const FqElement four = lambda.field->from_int(4);
    r.rows = parallel_map<Theta4Row>(good.size(), jobs, [&](std::size_t i) {
        Theta4Row row;
        row.p = good[i];
        row.theta = frob_class(f, row.p, lambda).theta();
        row.theta_is_4 = row.theta == four;
        row.pattern = squarefree_pattern(ModPoly(row.p, P).monic());
        row.pattern_is_fixed = fixed_point_pattern(row.pattern);
        return row;
    });
    for (const auto& row : r.rows)
        if (!row.agree()) r.disagreements.push_back(row.p);
    return r;
}

}  // namespace modgal

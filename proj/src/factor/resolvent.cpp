#include "modgal/factor/resolvent.hpp"

#include "modgal/factor/finite_factor.hpp"
#include "modgal/ffield/fq_field.hpp"
#include "modgal/util/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace modgal {

namespace {

using FqPoly = std::vector<FqElement>;  // low degree first, trimmed

void trim(FqPoly& a)
{
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int deg(const FqPoly& a) { return static_cast<int>(a.size()) - 1; }

FqPoly rem(FqPoly a, const FqPoly& b)
{
    const int db = deg(b);
    const FqElement li = b.back().inverse();
    for (int k = deg(a); k >= db; --k) {
        const FqElement c = a[static_cast<std::size_t>(k)] * li;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(k - db + j)] = a[static_cast<std::size_t>(k - db + j)] - c * b[static_cast<std::size_t>(j)];
    }
    a.resize(static_cast<std::size_t>(std::max(db, 0)), b.back().field().zero());
    trim(a);
    return a;
}

// lc(A)^deg B * prod B(alpha) over the roots of A, both nonzero
FqElement resultant_standard(FqPoly A, FqPoly B, const FqField& F)
{
    FqElement acc = F.one();
    for (;;) {
        if (A.empty() || B.empty()) return F.zero();
        const int m = deg(A), n = deg(B);
        if (m == 0) return acc * A.back().pow(static_cast<std::uint64_t>(n));
        if (n == 0) return acc * B.back().pow(static_cast<std::uint64_t>(m));
        if (n >= m) {
            FqPoly R = rem(B, A);
            if (R.empty()) return F.zero();
            const int r = deg(R);
            acc = acc * A.back().pow(static_cast<std::uint64_t>(n - r));
            if ((static_cast<long>(m) * r) % 2) acc = -acc;
            B = std::move(A);
            A = std::move(R);
        } else {
            if ((static_cast<long>(m) * n) % 2) acc = -acc;
            std::swap(A, B);
        }
    }
}

// Polynomial of degree < N through (x_i, y_i), by Lagrange over prod (x - x_i).
FqPoly interpolate(const std::vector<FqElement>& xs, const std::vector<FqElement>& ys, const FqField& F)
{
    const std::size_t N = xs.size();
    FqPoly M{F.one()};
    for (const auto& xi : xs) {
        FqPoly next(M.size() + 1, F.zero());
        for (std::size_t j = 0; j < M.size(); ++j) {
            next[j + 1] = next[j + 1] + M[j];
            next[j] = next[j] - xi * M[j];
        }
        M = std::move(next);
    }
    FqPoly out(N, F.zero());
    std::vector<FqElement> Mi(N, F.zero());
    for (std::size_t i = 0; i < N; ++i) {
        // M / (x - x_i) by synthetic division, then its value at x_i
        FqElement carry = F.zero();
        for (std::size_t j = N; j-- > 0;) {
            carry = M[j + 1] + carry * xs[i];
            Mi[j] = carry;
        }
        FqElement denom = F.zero();
        for (std::size_t j = N; j-- > 0;) denom = denom * xs[i] + Mi[j];
        const FqElement w = ys[i] / denom;
        if (w.is_zero()) continue;
        for (std::size_t j = 0; j < N; ++j) out[j] = out[j] + w * Mi[j];
    }
    trim(out);
    return out;
}

FqPoly lift(const IntPoly& a, const FqField& F)
{
    FqPoly out;
    for (const auto& c : a.coeffs()) out.push_back(F.from_int(static_cast<std::int64_t>(mod_u64(c, F.characteristic()))));
    trim(out);
    return out;
}

}  // namespace

FactorPattern predicted_pair_pattern(const FactorPattern& roots)
{
    std::vector<int> lens;
    for (auto [d, m] : roots.parts)
        for (int i = 0; i < m; ++i) lens.push_back(d);
    std::vector<int> out;
    for (std::size_t i = 0; i < lens.size(); ++i)
        for (std::size_t j = 0; j < lens.size(); ++j) {
            const int g = std::gcd(lens[i], lens[j]);
            const int l = lens[i] / g * lens[j];
            for (int c = 0; c < g - (i == j ? 1 : 0); ++c) out.push_back(l);
        }
    return FactorPattern::from_degrees(std::move(out));
}

ResolventModP pair_resolvent_mod_p(const IntPoly& a, long s, long t, std::uint64_t p)
{
    ResolventModP out;
    out.p = p;
    if (!is_prime(p)) throw DomainError("modulus must be prime");
    const int n = a.degree();
    if (n < 2) throw DomainError("pair resolvent needs degree at least 2");
    ModPoly am(p, a);
    if (am.is_zero() || am.degree() != n) {
        out.skip_reason = "leading coefficient vanishes";
        return out;
    }
    if (!is_squarefree(am)) {
        out.skip_reason = "polynomial not squarefree";
        return out;
    }
    out.root_pattern = squarefree_pattern(am);
    const PrimeField Fp(p);
    const std::uint64_t sm = Fp.reduce(static_cast<std::int64_t>(s));
    const std::uint64_t tm = Fp.reduce(static_cast<std::int64_t>(t));
    if (sm == 0 || tm == 0) {
        out.skip_reason = "p divides s t";
        return out;
    }

    // field with at least n^2 + 1 elements for the evaluation points
    const std::uint64_t need = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) + 1;
    int k = 1;
    for (std::uint64_t q = p; q < need; q *= p) ++k;
    const FqField F(p, k);
    const FqPoly A = lift(a, F);
    const FqElement S = F.from_int(static_cast<std::int64_t>(sm));
    const FqElement T = F.from_int(static_cast<std::int64_t>(tm));
    std::vector<FqElement> tpow(static_cast<std::size_t>(n) + 1, F.one());
    for (int j = 1; j <= n; ++j) tpow[static_cast<std::size_t>(j)] = tpow[static_cast<std::size_t>(j - 1)] * T;
    const FqElement c = A.back();
    const FqElement scale = c.pow(static_cast<std::uint64_t>(2 * n)).inverse();

    std::vector<FqElement> xs, ys;
    xs.reserve(need);
    ys.reserve(need);
    for (std::uint64_t i = 0; i < need; ++i) {
        const FqElement x = F.from_index(i);
        // g(y) = sum_j a_j t^(n-j) (x - s y)^j by Horner
        FqPoly g{A[static_cast<std::size_t>(n)]};
        for (int j = n - 1; j >= 0; --j) {
            FqPoly next(g.size() + 1, F.zero());
            for (std::size_t m = 0; m < g.size(); ++m) {
                next[m] = next[m] + g[m] * x;
                next[m + 1] = next[m + 1] - g[m] * S;
            }
            next[0] = next[0] + A[static_cast<std::size_t>(j)] * tpow[static_cast<std::size_t>(n - j)];
            g = std::move(next);
        }
        trim(g);
        xs.push_back(x);
        ys.push_back(resultant_standard(A, g, F) * scale);
    }
    FqPoly full = interpolate(xs, ys, F);

    std::vector<std::uint64_t> fc;
    for (const auto& e : full) {
        if (!e.in_prime_field()) throw Error("pair resolvent has a coefficient outside F_p");
        fc.push_back(e.coord(0));
    }
    ModPoly Full(p, std::move(fc));
    // diagonal factor: (1/c) sum_j a_j (s+t)^(n-j) x^j
    const std::uint64_t st = Fp.add(sm, tm);
    std::vector<std::uint64_t> dc(static_cast<std::size_t>(n) + 1);
    std::uint64_t pw = 1;
    for (int j = n; j >= 0; --j) {
        dc[static_cast<std::size_t>(j)] = Fp.mul(am[static_cast<std::size_t>(j)], pw);
        pw = Fp.mul(pw, st);
    }
    ModPoly D = ModPoly(p, std::move(dc)).monic();
    ModDivRem qr = divrem(Full, D);
    if (!qr.remainder.is_zero()) throw Error("diagonal factor does not divide the pair product");
    ModPoly Q = qr.quotient;
    if (Q.degree() != n * (n - 1) || Q.lead() != 1) throw Error("pair resolvent has the wrong degree");
    out.resolvent = Q;
    if (!is_squarefree(Q)) {
        out.skip_reason = "resolvent not squarefree";
        return out;
    }
    out.pattern = squarefree_pattern(Q);
    return out;
}

std::string DoubleTransitivityReport::verdict_name() const
{
    switch (verdict) {
    case Verdict::certified: return "certified";
    case Verdict::evidence: return "evidence";
    case Verdict::failed: return "failed";
    }
    return "failed";
}

std::string DoubleTransitivityReport::report() const
{
    std::ostringstream os;
    os << "verdict " << verdict_name();
    if (verdict == Verdict::evidence) os << " " << evidence();
    os << "\n";
    if (!failure.empty()) os << "reason " << failure << "\n";
    os << "pair " << s << " " << t << "\n";
    os << "primes";
    for (const auto& [p, pat] : patterns) os << " " << p;
    os << "\n";
    for (const auto& [p, why] : skipped) os << "skip " << p << " " << why << "\n";
    for (const auto& [p, pat] : patterns) os << "p " << p << " pattern " << pat.to_string() << "\n";
    os << "contradictions " << contradictions.size() << "\n";
    os << "degrees";
    for (int d : remaining) os << " " << d;
    os << "\n";
    return os.str();
}

DoubleTransitivityReport double_transitivity_certificate(const IntPoly& a, long s, long t, std::uint64_t bound,
                                                         unsigned jobs)
{
    DoubleTransitivityReport rep;
    rep.s = s;
    rep.t = t;
    const IrredCertificate irr = irreducibility_certificate(a, bound);
    if (!irr.certified()) {
        rep.failure = "transitivity not certified";
        return rep;
    }
    const int n = a.degree();
    if (n < 2) {
        rep.verdict = DoubleTransitivityReport::Verdict::certified;
        return rep;
    }
    const std::vector<std::uint64_t> primes = primes_between(2, bound);
    const std::vector<std::pair<long, long>> pairs{{s, t}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {2, 5}};
    for (const auto& [ss, tt] : pairs) {
        if (ss == 0 || tt == 0 || ss == tt) continue;
        auto results = parallel_map<ResolventModP>(primes.size(), jobs,
                                                   [&, ss = ss, tt = tt](std::size_t i) { return pair_resolvent_mod_p(a, ss, tt, primes[i]); });
        rep = DoubleTransitivityReport{};
        rep.s = ss;
        rep.t = tt;
        DegreeSieve sieve(n * (n - 1));
        for (const auto& r : results) {
            if (!r.ok()) {
                rep.skipped.emplace_back(r.p, r.skip_reason);
                continue;
            }
            rep.patterns.emplace_back(r.p, r.pattern);
            sieve.add(r.pattern);
            if (!(predicted_pair_pattern(r.root_pattern) == r.pattern)) rep.contradictions.push_back(r.p);
        }
        rep.remaining = sieve.remaining();
        if (rep.patterns.empty()) continue;  // every resolvent collided: next pair
        if (!rep.contradictions.empty()) {
            rep.failure = "resolvent pattern contradicts the root pattern";
            rep.verdict = DoubleTransitivityReport::Verdict::failed;
        } else if (sieve.collapsed()) {
            rep.verdict = DoubleTransitivityReport::Verdict::certified;
        } else {
            rep.verdict = DoubleTransitivityReport::Verdict::evidence;
        }
        return rep;
    }
    rep.failure = "no prime gave a squarefree resolvent";
    rep.verdict = DoubleTransitivityReport::Verdict::failed;
    return rep;
}

}  // namespace modgal

#include "modgal/factor/finite_factor.hpp"

#include <algorithm>
#include <random>

namespace modgal {

namespace {

// p-th root of a polynomial whose derivative vanishes (all exponents divisible by p).
ModPoly pth_root(const ModPoly& a)
{
    const std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> c;
    const auto& ac = a.coeffs();
    // over F_p the coefficient map c -> c^(1/p) is the identity
    for (std::size_t i = 0; i < ac.size(); i += p) c.push_back(ac[i]);
    return ModPoly(p, std::move(c));
}

ModPoly random_poly(std::uint64_t p, int degree_below, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(degree_below));
    for (auto& x : c) x = d(rng);
    return ModPoly(p, std::move(c));
}

void split_equal_degree(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out)
{
    const int n = f.degree();
    if (n == d) {
        out.push_back(f);
        return;
    }
    const std::uint64_t p = f.modulus();
    for (;;) {
        ModPoly a = random_poly(p, n, rng);
        if (a.is_zero() || a.degree() < 1) continue;
        ModPoly b(p);
        if (p == 2) {
            // absolute trace a + a^2 + ... + a^(2^(d-1))
            ModPoly t = a % f;
            b = t;
            for (int i = 1; i < d; ++i) {
                t = mulmod(t, t, f);
                b = b + t;
            }
        } else {
            Integer e = (pow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
            b = powmod(a, e, f) - ModPoly::constant(p, 1);
        }
        ModPoly g = gcd(b, f);
        if (g.is_zero() || g.degree() == 0 || g.degree() == n) continue;
        split_equal_degree(g, d, rng, out);
        split_equal_degree(f / g, d, rng, out);
        return;
    }
}

}  // namespace

ModPoly ModFactorization::expand(std::uint64_t p) const
{
    ModPoly r = ModPoly::constant(p, leading);
    for (const auto& f : factors)
        for (int i = 0; i < f.multiplicity; ++i) r = r * f.factor;
    return r;
}

std::vector<std::pair<ModPoly, int>> squarefree_decomposition(const ModPoly& a)
{
    if (a.is_zero()) throw DomainError("squarefree decomposition of zero");
    const std::uint64_t p = a.modulus();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly f = a.monic();
    if (f.degree() == 0) return out;
    ModPoly c = gcd(f, f.derivative());
    ModPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = gcd(w, c);
        ModPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_decomposition(pth_root(c))) out.emplace_back(g, m * static_cast<int>(p));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    return out;
}

std::vector<std::pair<ModPoly, int>> distinct_degree_factorization(const ModPoly& f0)
{
    const std::uint64_t p = f0.modulus();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly f = f0.monic();
    const ModPoly x = ModPoly::x(p);
    ModPoly h = x % f;
    const Integer P(static_cast<unsigned long>(p));
    for (int i = 1; f.degree() >= 2 * i; ++i) {
        h = powmod(h, P, f);
        ModPoly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

std::vector<ModPoly> equal_degree_factorization(const ModPoly& f, int d, std::uint64_t seed)
{
    if (f.degree() % d != 0) throw DomainError("degree is not a multiple of the factor degree");
    std::mt19937_64 rng(seed);
    std::vector<ModPoly> out;
    split_equal_degree(f.monic(), d, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

ModFactorization factor(const ModPoly& a, std::uint64_t seed)
{
    if (a.is_zero()) throw DomainError("cannot factor the zero polynomial");
    const std::uint64_t p = a.modulus();
    ModFactorization out;
    out.leading = a.lead();
    std::mt19937_64 rng(seed);
    for (const auto& [g, mult] : squarefree_decomposition(a)) {
        for (const auto& [h, d] : distinct_degree_factorization(g)) {
            std::vector<ModPoly> pieces;
            split_equal_degree(h, d, rng, pieces);
            for (auto& piece : pieces) out.factors.push_back({std::move(piece), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const ModFactor& x, const ModFactor& y) {
        if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
        if (!(x.factor == y.factor)) return x.factor < y.factor;
        return x.multiplicity < y.multiplicity;
    });
    for (const auto& f : out.factors) out.pattern.parts.emplace_back(f.factor.degree(), f.multiplicity);
    std::sort(out.pattern.parts.begin(), out.pattern.parts.end());
    (void)p;
    return out;
}

ModFactorization factor_mod_p(const IntPoly& a, std::uint64_t p, std::uint64_t seed)
{
    if (!is_prime(p)) throw DomainError("modulus must be prime");
    ModPoly am(p, a);
    if (am.is_zero()) throw DomainError("polynomial vanishes mod " + std::to_string(p));
    return factor(am, seed);
}

FactorPattern squarefree_pattern(const ModPoly& f0)
{
    if (f0.is_zero()) throw DomainError("pattern of zero");
    const std::uint64_t p = f0.modulus();
    const ModPoly f = f0.monic();
    const int n = f.degree();
    std::vector<int> degrees;
    if (n <= 0) return {};
    if (n < 40) {
        for (const auto& [g, d] : distinct_degree_factorization(f))
            for (int i = 0; i < g.degree() / d; ++i) degrees.push_back(d);
        return FactorPattern::from_degrees(std::move(degrees));
    }

    // Frobenius matrix: row i = x^(i p) mod f
    const std::size_t N = static_cast<std::size_t>(n);
    std::vector<std::vector<std::uint64_t>> Q(N, std::vector<std::uint64_t>(N, 0));
    const PrimeField& F = f.field();
    const auto& fc = f.coeffs();
    if (p < N) {
        // walk x^j by shifting, recording every p-th power; entries stay
        // unreduced (each step adds at most p^2) and are reduced when read
        const bool lazy = static_cast<double>(p) * p * p * N < 4.0e18;
        std::vector<std::uint64_t> cur(N, 0);
        cur[0] = 1;
        for (std::size_t j = 0;; ++j) {
            if (j % p == 0) {
                std::vector<std::uint64_t>& row = Q[j / p];
                for (std::size_t i = 0; i < N; ++i) row[i] = cur[i] % p;
                if (j / p + 1 == N) break;
            }
            const std::uint64_t top = cur[N - 1] % p;
            for (std::size_t i = N - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top) {
                const std::uint64_t mt = p - top;
                if (lazy) {
                    for (std::size_t i = 0; i < N; ++i) cur[i] += mt * fc[i];
                } else {
                    for (std::size_t i = 0; i < N; ++i) cur[i] = (cur[i] % p + mt * fc[i]) % p;
                }
            }
        }
    } else {
        ModPoly xp = powmod(ModPoly::x(p), Integer(static_cast<unsigned long>(p)), f);
        ModPoly cur = ModPoly::constant(p, 1);
        for (std::size_t i = 0; i < N; ++i) {
            std::vector<std::uint64_t> row = cur.coeffs();
            row.resize(N, 0);
            Q[i] = std::move(row);
            if (i + 1 < N) cur = mulmod(cur, xp, f);
        }
    }

    const std::uint64_t sq = (p - 1) * (p - 1);
    const std::uint64_t batch = std::max<std::uint64_t>(1, ~std::uint64_t(0) / std::max<std::uint64_t>(sq, 1) - 1);
    auto apply = [&](const std::vector<std::uint64_t>& h) {
        std::vector<std::uint64_t> acc(N, 0);
        std::uint64_t pending = 0;
        for (std::size_t i = 0; i < N; ++i) {
            const std::uint64_t hi = h[i];
            if (!hi) continue;
            const std::uint64_t* row = Q[i].data();
            for (std::size_t j = 0; j < N; ++j) acc[j] += hi * row[j];
            if (++pending == batch) {
                for (auto& v : acc) v %= p;
                pending = 0;
            }
        }
        for (auto& v : acc) v %= p;
        return acc;
    };

    const ModPoly x = ModPoly::x(p);
    std::vector<std::uint64_t> h(N, 0);
    h[1 % N] = 1;
    ModPoly g = f;
    int remaining = n;
    for (int i = 1; remaining >= 2 * i; ++i) {
        h = apply(h);
        ModPoly hx = ModPoly(p, h) - x;
        ModPoly d = gcd(hx, g);
        if (d.degree() > 0) {
            for (int c = 0; c < d.degree() / i; ++c) degrees.push_back(i);
            g = g / d;
            remaining = g.degree();
        }
    }
    if (remaining > 0) degrees.push_back(remaining);
    return FactorPattern::from_degrees(std::move(degrees));
}

FactorPattern factor_pattern(const ModPoly& a)
{
    FactorPattern out;
    for (const auto& [g, mult] : squarefree_decomposition(a))
        for (int d : squarefree_pattern(g).degrees()) out.parts.emplace_back(d, mult);
    std::sort(out.parts.begin(), out.parts.end());
    return out;
}

SplittingType splitting_unramified(const IntPoly& a, std::uint64_t p)
{
    if (!is_prime(p)) throw DomainError("modulus must be prime");
    ModPoly am(p, a);
    if (am.is_zero() || am.degree() != a.degree()) throw DomainError("leading coefficient vanishes mod p");
    if (!is_squarefree(am))
        throw DomainError("p = " + std::to_string(p) + " divides the discriminant; use the maximal order");
    std::vector<std::pair<int, int>> fe;
    for (int d : squarefree_pattern(am).degrees()) fe.emplace_back(d, 1);
    return SplittingType(std::move(fe));
}

}  // namespace modgal

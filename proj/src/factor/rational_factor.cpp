#include "modgal/factor/rational_factor.hpp"

#include "modgal/exact/mod_poly.hpp"
#include "modgal/factor/finite_factor.hpp"

#include <algorithm>
#include <functional>

namespace modgal {

namespace {

IntPoly to_int(const ModPoly& a)
{
    std::vector<Integer> c;
    for (auto x : a.coeffs()) c.emplace_back(static_cast<unsigned long>(x));
    return IntPoly(std::move(c));
}

// coefficients reduced into (-m/2, m/2]
IntPoly symmetric_mod(const IntPoly& a, const Integer& m)
{
    std::vector<Integer> c;
    const Integer half = m / 2;
    for (const auto& x : a.coeffs()) {
        Integer r = x % m;
        if (r < 0) r += m;
        if (r > half) r -= m;
        c.push_back(r);
    }
    return IntPoly(std::move(c));
}

bool divides_monic(const IntPoly& g, const IntPoly& f, IntPoly& quotient)
{
    PseudoDivRem qr = pseudo_divrem(f, g);
    if (!qr.remainder.is_zero()) return false;
    quotient = qr.quotient;
    return true;
}

// Factors of a monic squarefree polynomial of degree >= 1.
std::vector<IntPoly> factor_squarefree(const IntPoly& f)
{
    const int n = f.degree();
    if (n == 1) return {f};

    // prime with the fewest modular factors among the first few good ones
    std::uint64_t best_p = 0;
    std::vector<ModPoly> best;
    int tried = 0;
    for (std::uint64_t p : primes_between(3, 100000)) {
        ModPoly fm(p, f);
        if (!is_squarefree(fm)) continue;
        ModFactorization fac = factor(fm);
        if (best_p == 0 || fac.factors.size() < best.size()) {
            best_p = p;
            best.clear();
            for (auto& mf : fac.factors) best.push_back(mf.factor);
        }
        if (best.size() == 1 || ++tried == 8) break;
    }
    if (best_p == 0) throw Error("no good prime for Zassenhaus");
    if (best.size() == 1) return {f};
    const std::uint64_t p = best_p;
    const std::size_t r = best.size();

    // factor coefficients are bounded by 2^n ||f||_2 (Mignotte); lift past twice that
    Integer norm2 = 0;
    for (const auto& c : f.coeffs()) norm2 += c * c;
    Integer bound = pow(Integer(2), static_cast<unsigned long>(n)) * (sqrt(norm2) + 1);
    Integer pk = p;
    while (pk <= 2 * bound) pk *= p;

    // partial-fraction units: sum u_i (f/g_i) = 1 mod p with u_i = (f/g_i)^-1 mod g_i
    ModPoly fm(p, f);
    std::vector<ModPoly> u;
    for (std::size_t i = 0; i < r; ++i) u.push_back(invmod((fm / best[i]) % best[i], best[i]));

    std::vector<IntPoly> G;
    for (const auto& g : best) G.push_back(to_int(g));
    Integer pj = p;
    while (pj < pk) {
        IntPoly prod{1};
        for (const auto& g : G) prod = prod * g;
        IntPoly diff = f - prod;
        // diff is divisible by p^j
        ModPoly e(p, diff.divide_exact(pj));
        for (std::size_t i = 0; i < r; ++i) {
            ModPoly delta = (e * u[i]) % best[i];
            G[i] = G[i] + pj * to_int(delta);
        }
        pj *= p;
    }
    for (auto& g : G) g = symmetric_mod(g, pk);

    // recombination by increasing subset size
    std::vector<IntPoly> out;
    std::vector<std::size_t> live(r);
    for (std::size_t i = 0; i < r; ++i) live[i] = i;
    IntPoly rest = f;
    for (std::size_t size = 1; 2 * size <= live.size();) {
        bool found = false;
        std::vector<std::size_t> pick(size);
        std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t depth) {
            if (depth == size) {
                IntPoly g{1};
                for (std::size_t i : pick) g = symmetric_mod(g * G[i], pk);
                IntPoly q;
                if (g.degree() >= 1 && divides_monic(g, rest, q)) {
                    out.push_back(g);
                    rest = q;
                    std::vector<std::size_t> keep;
                    for (std::size_t i : live)
                        if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(i);
                    live = keep;
                    return true;
                }
                return false;
            }
            for (std::size_t k = start; k < live.size(); ++k) {
                pick[depth] = live[k];
                if (search(k + 1, depth + 1)) return true;
            }
            return false;
        };
        found = search(0, 0);
        if (!found) ++size;
    }
    if (rest.degree() >= 1) out.push_back(rest);
    return out;
}

}  // namespace

std::vector<std::pair<IntPoly, int>> factor_over_q(const IntPoly& f)
{
    if (f.is_zero() || f.degree() < 1) throw DomainError("factor_over_q needs a nonconstant polynomial");
    if (!f.is_monic()) throw DomainError("factor_over_q needs a monic polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    // Yun's squarefree decomposition over Z
    auto monic_gcd = [](const IntPoly& a, const IntPoly& b) {
        IntPoly g = gcd(a, b);
        return g.lead() < 0 ? Integer(-1) * g : g;
    };
    IntPoly c = monic_gcd(f, f.derivative());
    IntPoly w = divide_exact(f, c);
    int i = 1;
    while (w.degree() > 0) {
        IntPoly y = monic_gcd(w, c);
        IntPoly z = divide_exact(w, y);
        if (z.degree() > 0)
            for (auto& g : factor_squarefree(z)) out.emplace_back(std::move(g), i);
        ++i;
        w = y;
        c = divide_exact(c, y);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        const auto& x = a.first.coeffs();
        const auto& y = b.first.coeffs();
        if (!std::equal(x.begin(), x.end(), y.begin(), y.end()))
            return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
        return a.second < b.second;
    });
    return out;
}

}  // namespace modgal

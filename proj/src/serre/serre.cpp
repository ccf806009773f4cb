#include "modgal/serre/serre.hpp"

#include "modgal/maxorder/order.hpp"

#include <set>
#include <sstream>

namespace modgal {

int level_exponent_tame(const SplittingType& st, std::uint64_t p, std::uint64_t ell)
{
    if (p == ell) throw DomainError("level exponent asked at the characteristic");
    bool ramified = false, unramified = false;
    for (const auto& [f, e] : st.parts) {
        if (e % static_cast<long>(p) == 0)
            throw DomainError("wild ramification at " + std::to_string(p) + " is not supported");
        (e > 1 ? ramified : unramified) = true;
    }
    if (!ramified) return 0;
    return unramified ? 1 : 2;
}

int wild_index(const SplittingType& st, std::uint64_t ell)
{
    int m = 0;
    for (const auto& [f, e] : st.parts) {
        int k = 0;
        for (long x = e; x % static_cast<long>(ell) == 0; x /= static_cast<long>(ell)) ++k;
        m = std::max(m, k);
    }
    return m;
}

int weight_wild(int v, std::uint64_t q, std::uint64_t ell, int m)
{
    if (m < 1) throw DomainError("weight formula needs wild ramification (m >= 1)");
    const PrimePower pp = prime_power(q);
    if (pp.prime != ell) throw DomainError("q is not a power of ell");
    const Integer lm = pow(Integer(static_cast<unsigned long>(ell)), static_cast<unsigned long>(m));
    const Integer Q(static_cast<unsigned long>(q));
    if (lm > Q) throw DomainError("ell^m exceeds q");
    if (v < static_cast<long>(q) - 1) throw DomainError("v_ell(Disc K) below q - 1");
    Rational x((static_cast<long>(ell) - 1) * lm * (v - Q + 1), (lm - 1) * Q);
    x.canonicalize();
    const Integer k = 1 + ceil(x);
    if (k > static_cast<long>(ell) + 1) throw DomainError("weight formula gives k > ell + 1");
    return static_cast<int>(k.get_si());
}

WeightRange weight_tame_bound(std::uint64_t ell)
{
    WeightRange r;
    r.lo = 1;
    r.hi = static_cast<int>((ell + 3) / 2);
    r.ell2_caveat = ell == 2;
    return r;
}

bool oddness(const IntPoly& P, std::uint64_t q)
{
    if (q % 2 == 0) return true;
    return real_root_count(P) < P.degree();
}

std::string SerreReport::format_row() const
{
    std::ostringstream os;
    os << "q=" << q << " N=" << level << " k=";
    if (weight)
        os << *weight;
    else
        os << "[" << weight_range.lo << "," << weight_range.hi << "]";
    os << " m=" << wild_index << (odd ? " odd" : " even");
    if (!level_squarefree) os << " N-not-squarefree";
    return os.str();
}

SerreReport serre_report(const IntPoly& P, std::uint64_t q, GroupKind kind,
                         const std::map<std::uint64_t, SplittingType>& splittings, std::optional<int> disc_ell)
{
    SerreReport r;
    r.q = q;
    r.kind = kind;
    r.ell = prime_power(q).prime;
    for (const auto& [p, st] : splittings) {
        if (p == r.ell) continue;
        const int e = level_exponent_tame(st, p, r.ell);
        if (e == 0) continue;
        r.level_exponents[p] = e;
        if (e > 1) r.level_squarefree = false;
        for (int i = 0; i < e; ++i) r.level *= p;
    }
    const IntPoly Q = P.is_monic() ? P : monic_transform(P);
    const SplittingType at_ell =
        splittings.count(r.ell) ? splittings.at(r.ell) : prime_splitting(Q, r.ell);
    r.disc_valuation_ell = disc_ell ? *disc_ell : disc_valuation(Q, r.ell);
    r.wild_index = wild_index(at_ell, r.ell);
    if (r.wild_index > 0) {
        // Every prime with wild index ell^m gives the weight; they must agree.
        std::set<int> ms;
        for (const auto& [f, e] : at_ell.parts) {
            const int m = wild_index(SplittingType({{f, e}}), r.ell);
            if (m > 0) ms.insert(m);
        }
        std::set<int> ks;
        for (int m : ms) ks.insert(weight_wild(r.disc_valuation_ell, q, r.ell, m));
        if (ks.size() != 1) throw Error("weight formula disagrees between wild indices");
        r.weight = *ks.begin();
        r.weight_range = {r.weight.value(), r.weight.value(), false};
    } else {
        r.weight_range = weight_tame_bound(r.ell);
    }
    r.odd = oddness(P, q);
    return r;
}

}  // namespace modgal

#ifndef MODGAL_FACTOR_RESOLVENT_HPP
#define MODGAL_FACTOR_RESOLVENT_HPP

#include "modgal/exact/int_poly.hpp"
#include "modgal/exact/mod_poly.hpp"
#include "modgal/factor/certificate.hpp"
#include "modgal/factor/pattern.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace modgal {

struct ResolventModP {
    std::uint64_t p = 0;
    /// Empty when p was usable; otherwise why it was skipped.
    std::string skip_reason;
    /// Monic resolvent of degree n(n-1) with roots s*alpha + t*beta, alpha != beta.
    std::optional<ModPoly> resolvent;
    FactorPattern pattern;
    /// Pattern of a itself mod p, for the cycle-type cross-check.
    FactorPattern root_pattern;

    bool ok() const { return skip_reason.empty(); }
};

/// Pair resolvent mod p from Res_y(a(y), t^n a((x - s y)/t)), evaluated at
/// n^2+1 points of F_(p^k) and interpolated, with the diagonal factor
/// prod (x - (s+t) alpha) divided out. Skips p when a mod p is not squarefree,
/// p divides s t, or the resolvent is not squarefree mod p.
ResolventModP pair_resolvent_mod_p(const IntPoly& a, long s, long t, std::uint64_t p);

/// Cycle type of Frobenius on ordered distinct root pairs given its cycle type
/// on the roots: orbits of lengths a, b give gcd(a,b) cycles of length
/// lcm(a,b); each orbit loses one cycle of its own length to the diagonal.
FactorPattern predicted_pair_pattern(const FactorPattern& roots);

struct DoubleTransitivityReport {
    enum class Verdict { certified, evidence, failed };
    Verdict verdict = Verdict::failed;
    long s = 1, t = 2;
    std::string failure;
    /// Good primes, in order, with resolvent patterns.
    std::vector<std::pair<std::uint64_t, FactorPattern>> patterns;
    std::vector<std::pair<std::uint64_t, std::string>> skipped;
    /// Primes where the computed resolvent pattern differs from the
    /// prediction from the root pattern.
    std::vector<std::uint64_t> contradictions;
    std::vector<int> remaining;
    std::size_t evidence() const { return patterns.size(); }
    std::string verdict_name() const;
    std::string report() const;
};

/// Transitivity first (degree sieve on a), then the degree sieve on pair
/// resolvents over primes p <= B. (s, t) is replaced by the next small pair
/// when no prime gives a squarefree resolvent.
DoubleTransitivityReport double_transitivity_certificate(const IntPoly& a, long s, long t, std::uint64_t bound,
                                                         unsigned jobs = 1);

}  // namespace modgal

#endif  // MODGAL_FACTOR_RESOLVENT_HPP

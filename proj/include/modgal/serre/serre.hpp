#ifndef MODGAL_SERRE_SERRE_HPP
#define MODGAL_SERRE_SERRE_HPP

#include "modgal/exact/int_poly.hpp"
#include "modgal/factor/pattern.hpp"
#include "modgal/ffield/projective_group.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace modgal {

/// v_p(N) for p != ell from the splitting of p: 0 unramified, 1 if some but
/// not all primes above p ramify, 2 if all do. Throws DomainError on wild
/// ramification or p == ell.
int level_exponent_tame(const SplittingType& st, std::uint64_t p, std::uint64_t ell);

/// Largest m with ell^m dividing some ramification index.
int wild_index(const SplittingType& st, std::uint64_t ell);

/// k = 1 + ceil((ell-1) ell^m / ((ell^m - 1) q) * (v - q + 1)), exactly.
/// Requires m >= 1, ell^m <= q, v >= q - 1 and q a power of ell.
int weight_wild(int v, std::uint64_t q, std::uint64_t ell, int m);

struct WeightRange {
    int lo = 1;
    int hi = 1;
    /// ell = 2: weight 1 may have to be read as 2.
    bool ell2_caveat = false;
};

/// [1, floor((ell+3)/2)] for representations tame at ell.
WeightRange weight_tame_bound(std::uint64_t ell);

/// Not totally real, or automatically odd in characteristic 2.
bool oddness(const IntPoly& P, std::uint64_t q);

struct SerreReport {
    std::uint64_t ell = 0;
    std::uint64_t q = 0;
    GroupKind kind = GroupKind::PSL2;
    std::uint64_t level = 1;
    std::map<std::uint64_t, int> level_exponents;
    bool level_squarefree = true;
    int disc_valuation_ell = 0;
    int wild_index = 0;
    /// Set when the weight is determined; otherwise weight_range holds the bound.
    std::optional<int> weight;
    WeightRange weight_range;
    bool odd = false;

    /// One line in the column order q, N, k, e.g. "q=25 N=29 k=2 m=1 odd".
    std::string format_row() const;
};

/// Level from the splittings at primes p != ell, weight from the splitting
/// at ell and v_ell(Disc K), oddness from the real roots. When the splitting
/// at ell or disc_ell is missing it is computed from the maximal order.
SerreReport serre_report(const IntPoly& P, std::uint64_t q, GroupKind kind,
                         const std::map<std::uint64_t, SplittingType>& splittings,
                         std::optional<int> disc_ell = std::nullopt);

}  // namespace modgal

#endif  // MODGAL_SERRE_SERRE_HPP

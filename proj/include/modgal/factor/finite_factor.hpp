#ifndef MODGAL_FACTOR_FINITE_FACTOR_HPP
#define MODGAL_FACTOR_FINITE_FACTOR_HPP

#include "modgal/exact/int_poly.hpp"
#include "modgal/exact/mod_poly.hpp"
#include "modgal/factor/pattern.hpp"

#include <cstdint>
#include <vector>

namespace modgal {

struct ModFactor {
    ModPoly factor;  // monic irreducible
    int multiplicity;
};

struct ModFactorization {
    std::uint64_t leading = 1;       // the unit in front
    std::vector<ModFactor> factors;  // sorted by degree, then coefficients
    FactorPattern pattern;

    /// Product of the factors with multiplicity, times the leading unit.
    ModPoly expand(std::uint64_t p) const;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x9e3779b97f4a7c15ull;

/// Complete factorisation over F_p: squarefree decomposition, distinct-degree
/// splitting, then Cantor-Zassenhaus with a seeded generator.
ModFactorization factor(const ModPoly& a, std::uint64_t seed = kDefaultFactorSeed);
/// Factorisation of a mod p; throws if a vanishes mod p.
ModFactorization factor_mod_p(const IntPoly& a, std::uint64_t p, std::uint64_t seed = kDefaultFactorSeed);

/// (g, i): g squarefree, the product of the factors of multiplicity i.
std::vector<std::pair<ModPoly, int>> squarefree_decomposition(const ModPoly& a);
/// (g, d): g the product of the degree-d factors of a squarefree monic input.
std::vector<std::pair<ModPoly, int>> distinct_degree_factorization(const ModPoly& f);
/// Splits a product of distinct degree-d irreducibles into its factors.
std::vector<ModPoly> equal_degree_factorization(const ModPoly& f, int d, std::uint64_t seed = kDefaultFactorSeed);

/// Factor degrees of a squarefree polynomial without splitting equal-degree
/// products. Uses the Frobenius matrix, so it suits large degrees.
FactorPattern squarefree_pattern(const ModPoly& f);
/// Pattern of a mod p, with multiplicities.
FactorPattern factor_pattern(const ModPoly& a);

/// All e_i = 1 and f_i the factor degrees. Throws if p divides lc(a) or
/// a mod p is not squarefree, i.e. p may ramify.
SplittingType splitting_unramified(const IntPoly& a, std::uint64_t p);

}  // namespace modgal

#endif  // MODGAL_FACTOR_FINITE_FACTOR_HPP

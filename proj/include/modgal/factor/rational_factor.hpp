#ifndef MODGAL_FACTOR_RATIONAL_FACTOR_HPP
#define MODGAL_FACTOR_RATIONAL_FACTOR_HPP

#include "modgal/exact/int_poly.hpp"

#include <utility>
#include <vector>

namespace modgal {

/// Irreducible factors over Q of a monic integer polynomial with
/// multiplicities, sorted by degree then coefficients. Zassenhaus: mod-p
/// factorisation, linear Hensel lifting, subset recombination. Intended for
/// the small Hecke characteristic polynomials; exponential in the number of
/// modular factors in the worst case.
std::vector<std::pair<IntPoly, int>> factor_over_q(const IntPoly& f);

}  // namespace modgal

#endif  // MODGAL_FACTOR_RATIONAL_FACTOR_HPP

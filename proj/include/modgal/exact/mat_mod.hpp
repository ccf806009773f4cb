#ifndef MODGAL_EXACT_MAT_MOD_HPP
#define MODGAL_EXACT_MAT_MOD_HPP

#include <cstdint>
#include <vector>

namespace modgal {

/// Dense matrix over F_p as a list of rows with entries in [0, p).
using MatModP = std::vector<std::vector<std::uint64_t>>;

/// Reduced row echelon form; zero rows dropped. Rows of the result are a
/// basis of the row space.
MatModP rref(MatModP rows, std::uint64_t p);
std::size_t rank(const MatModP& rows, std::uint64_t p);
/// Basis of {a : a * M = 0} for an m x k matrix M (vectors of length m).
MatModP left_kernel(const MatModP& M, std::uint64_t p);
/// Basis of {v : M * v = 0} (vectors of length k).
MatModP right_kernel(const MatModP& M, std::uint64_t p);
MatModP multiply(const MatModP& a, const MatModP& b, std::uint64_t p);
MatModP transpose(const MatModP& a);

}  // namespace modgal

#endif  // MODGAL_EXACT_MAT_MOD_HPP

#ifndef MODGAL_MAXORDER_ORDER_HPP
#define MODGAL_MAXORDER_ORDER_HPP

#include "modgal/exact/int_poly.hpp"
#include "modgal/factor/pattern.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace modgal {

/// A p-local order of Q[x]/(P): row i of the basis is (1/p^a) sum_j L[i][j] x^j.
/// L is upper triangular in Hermite form: pivots are powers of p dividing p^a
/// and entries above a pivot are reduced modulo it. The lattice of L contains
/// p^a Z^n, so the order contains Z[x]/(P).
struct OrderBasis {
    IntPoly poly;  // monic
    std::uint64_t p = 0;
    unsigned a = 0;
    std::vector<std::vector<Integer>> L;

    int degree() const { return poly.degree(); }
    /// v_p([O : Z[x]/(P)]) = n a - sum v_p(L[i][i]).
    int index_valuation() const;
    /// The order Z[x]/(P) itself.
    static OrderBasis equation_order(const IntPoly& P, std::uint64_t p);

    std::string serialize() const;
    static OrderBasis deserialize(const std::string& text);

    friend bool operator==(const OrderBasis&, const OrderBasis&) = default;
};

/// Structure constants c[(i n + j) n + k] of the order, w_i w_j = sum_k c w_k,
/// reduced mod p^precision. Throws if a product leaves the lattice.
std::vector<Integer> structure_constants(const OrderBasis& O, unsigned precision);

struct DedekindResult {
    bool maximal = false;
    /// Z[x]/(P) when maximal, else the enlargement Z[x] + (U(x)/p) Z[x].
    OrderBasis order;
};

/// Dedekind criterion at p for a monic polynomial.
DedekindResult dedekind_test(const IntPoly& P, std::uint64_t p);

/// Round 2 (radical, then ring of multipliers) from the Dedekind enlargement
/// until the order is stable. P must be monic and irreducible.
OrderBasis p_maximal_order(const IntPoly& P, std::uint64_t p);

/// v_p(Disc K) = v_p(disc P) - 2 index. Non-monic input is replaced by its
/// monic transform first.
int disc_valuation(const IntPoly& P, std::uint64_t p);

/// Components of O/pO for a p-maximal order.
struct PrimeComponent {
    int f = 0;
    int e = 0;
    /// dim_Fp of (eR)^k for k = 0, 1, ..., e where R is the radical; must
    /// read e f, (e-1) f, ..., 0.
    std::vector<int> filtration;
};

std::vector<PrimeComponent> prime_components(const OrderBasis& maximal);
SplittingType prime_splitting(const OrderBasis& maximal);
/// Splitting of p in Q[x]/(P) via the p-maximal order.
SplittingType prime_splitting(const IntPoly& P, std::uint64_t p);

}  // namespace modgal

#endif  // MODGAL_MAXORDER_ORDER_HPP

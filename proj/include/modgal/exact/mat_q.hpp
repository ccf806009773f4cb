#ifndef MODGAL_EXACT_MAT_Q_HPP
#define MODGAL_EXACT_MAT_Q_HPP

#include "modgal/exact/int_poly.hpp"

#include <vector>

namespace modgal {

using QVec = std::vector<Rational>;
/// Dense rational matrix as a list of rows. Vectors act on the left: v -> v M.
using QMat = std::vector<QVec>;

QMat identity_matrix(std::size_t n);
/// Reduced row echelon form with zero rows dropped; pivot columns optional.
QMat rref(QMat rows, std::vector<std::size_t>* pivots = nullptr);
/// Basis of {a : a M = 0}, in reduced echelon form.
QMat left_kernel(const QMat& M);
QMat multiply(const QMat& a, const QMat& b);
QVec multiply(const QVec& v, const QMat& M);
QMat add(const QMat& a, const QMat& b);
QMat scale(const Rational& c, const QMat& a);
bool is_zero(const QVec& v);

/// Matrix of the operator M restricted to the invariant subspace spanned by
/// the rows of B (which must be in reduced echelon form with the given
/// pivots): the R with B M = R B. Throws if the subspace is not invariant.
QMat restrict_to(const QMat& M, const QMat& B, const std::vector<std::size_t>& pivots);
/// Coordinates c with c B = v for B in reduced echelon form; throws if v is
/// not in the row space.
QVec coordinates(const QVec& v, const QMat& B, const std::vector<std::size_t>& pivots);

/// Characteristic polynomial det(x I - M), monic, via Hessenberg reduction.
std::vector<Rational> charpoly(const QMat& M);
/// The characteristic polynomial as an integer polynomial; throws if some
/// coefficient is not integral.
IntPoly integral_charpoly(const QMat& M);
/// p(M) for a rational polynomial p given by coefficients (constant first).
QMat evaluate(const std::vector<Rational>& p, const QMat& M);

}  // namespace modgal

#endif  // MODGAL_EXACT_MAT_Q_HPP

#ifndef MODGAL_EXACT_INT_POLY_HPP
#define MODGAL_EXACT_INT_POLY_HPP

#include "modgal/exact/integer.hpp"

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace modgal {

/// Dense univariate polynomial over Z. Coefficient i multiplies x^i.
/// The zero polynomial has no coefficients; asking for its degree throws.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, int degree);
    /// x - root
    static IntPoly linear(const Integer& root);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;
    const Integer& lead() const;
    /// Coefficient of x^i, zero beyond the degree.
    const Integer& operator[](std::size_t i) const;
    std::span<const Integer> coeffs() const { return coeffs_; }
    bool is_monic() const { return !is_zero() && lead() == 1; }

    IntPoly derivative() const;
    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    Integer content() const;
    /// this / content, with positive leading coefficient.
    IntPoly primitive_part() const;
    Integer eval(const Integer& x) const;
    /// Sign of the value at a rational point, in {-1, 0, 1}.
    int sign_at(const Rational& x) const;

    /// p(c * x)
    IntPoly scale_argument(const Integer& c) const;
    /// Coefficient-wise exact division; throws if some coefficient is not divisible.
    IntPoly divide_exact(const Integer& d) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Integer& c, const IntPoly& a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Polynomial over Q stored as numerator / positive denominator, with the
/// numerator content coprime to the denominator.
class RatPoly {
public:
    RatPoly() : den_(1) {}
    explicit RatPoly(IntPoly num, Integer den = 1);
    static RatPoly from_coeffs(const std::vector<Rational>& coeffs);

    const IntPoly& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int degree() const { return num_.degree(); }
    Rational coeff(std::size_t i) const;
    std::vector<Rational> coeffs() const;
    bool is_integral() const { return den_ == 1; }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend bool operator==(const RatPoly& a, const RatPoly& b)
    {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }

private:
    void normalize();
    IntPoly num_;
    Integer den_;
};

struct RatDivRem {
    RatPoly quotient;
    RatPoly remainder;
};

/// Division over Q: a = q*b + r with deg r < deg b. Throws on b = 0.
RatDivRem divrem(const IntPoly& a, const IntPoly& b);

struct PseudoDivRem {
    IntPoly quotient;
    IntPoly remainder;
    int multiplier_exponent = 0;  ///< lc(b)^e * a = q*b + r
};

/// Pseudo-division over Z with multiplier lc(b)^(deg a - deg b + 1).
PseudoDivRem pseudo_divrem(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b over Z; throws if b does not divide a in Z[x].
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// Resultant with the convention Res(a, b) = lc(b)^deg(a) * prod a(beta) over
/// the roots beta of b. Computed with the subresultant PRS.
Integer resultant(const IntPoly& a, const IntPoly& b);

/// disc(a) = (-1)^(n(n-1)/2) Res(a, a') / lc(a)
Integer discriminant(const IntPoly& a);

/// Greatest common divisor in Z[x], primitive with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Product of the distinct irreducible factors of a (primitive, positive lc).
IntPoly squarefree_part(const IntPoly& a);
bool is_squarefree(const IntPoly& a);

/// Number of distinct real roots via a Sturm sequence. Rejects non-squarefree input.
int real_root_count(const IntPoly& a);
/// Number of real roots strictly greater than x. Input must be squarefree.
int real_roots_above(const IntPoly& a, const Rational& x);

/// Monic transform: lc^(n-1) * a(y / lc), a monic polynomial in y.
IntPoly monic_transform(const IntPoly& a);

/// Text format: one line of whitespace separated decimal coefficients,
/// constant term first. Lines starting with '#' are comments.
IntPoly parse_poly(const std::string& text);
std::string format_poly(const IntPoly& a);
IntPoly read_poly_file(const std::string& path);
void write_poly_file(const std::string& path, const IntPoly& a);

std::ostream& operator<<(std::ostream& os, const IntPoly& a);

}  // namespace modgal

#endif  // MODGAL_EXACT_INT_POLY_HPP

#ifndef MODGAL_EXACT_MOD_POLY_HPP
#define MODGAL_EXACT_MOD_POLY_HPP

#include "modgal/exact/int_poly.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace modgal {

/// Arithmetic in Z/pZ for a prime p < 2^31.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);
    std::uint64_t p() const { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const
    {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t reduce(std::int64_t a) const;
    std::uint64_t reduce(const Integer& a) const { return mod_u64(a, p_); }

private:
    std::uint64_t p_;
};

/// Polynomial over F_p with coefficients reduced into [0, p). The zero
/// polynomial has no coefficients.
class ModPoly {
public:
    explicit ModPoly(std::uint64_t p) : field_(p) {}
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    ModPoly(std::uint64_t p, std::initializer_list<std::uint64_t> coeffs)
        : ModPoly(p, std::vector<std::uint64_t>(coeffs))
    {
    }
    /// Reduction of an integer polynomial mod p.
    ModPoly(std::uint64_t p, const IntPoly& a);

    static ModPoly x(std::uint64_t p) { return ModPoly(p, {0, 1}); }
    static ModPoly constant(std::uint64_t p, std::uint64_t c) { return ModPoly(p, std::vector<std::uint64_t>{c}); }

    std::uint64_t modulus() const { return field_.p(); }
    const PrimeField& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const;
    std::uint64_t lead() const;
    std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t eval(std::uint64_t x) const;

    ModPoly monic() const;
    ModPoly derivative() const;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(std::uint64_t c, const ModPoly& a);
    friend bool operator==(const ModPoly& a, const ModPoly& b)
    {
        return a.modulus() == b.modulus() && a.c_ == b.c_;
    }
    friend bool operator<(const ModPoly& a, const ModPoly& b);

    std::string to_string() const;

private:
    void trim();
    PrimeField field_;
    std::vector<std::uint64_t> c_;
};

struct ModDivRem {
    ModPoly quotient;
    ModPoly remainder;
};

ModDivRem divrem(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
ModPoly operator/(const ModPoly& a, const ModPoly& b);
/// Monic gcd (zero if both are zero).
ModPoly gcd(const ModPoly& a, const ModPoly& b);
/// s*a + t*b = g with g monic.
struct ModXgcd {
    ModPoly g, s, t;
};
ModXgcd xgcd(const ModPoly& a, const ModPoly& b);
/// a^e mod m
ModPoly powmod(const ModPoly& a, const Integer& e, const ModPoly& m);
ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m);
/// Inverse of a modulo m; throws if not invertible.
ModPoly invmod(const ModPoly& a, const ModPoly& m);
/// Composition a(b) mod m.
ModPoly compose_mod(const ModPoly& a, const ModPoly& b, const ModPoly& m);

/// Resultant over F_p with the same convention as the integer resultant:
/// lc(b)^deg(a) * prod a(beta).
std::uint64_t resultant(const ModPoly& a, const ModPoly& b);

bool is_squarefree(const ModPoly& a);

/// Lexicographically least monic irreducible polynomial of degree k over F_p
/// (coefficient vectors compared from the constant term upward after the
/// leading 1, i.e. by the integer sum c_i p^i).
ModPoly least_irreducible(std::uint64_t p, int k);
bool is_irreducible(const ModPoly& a);

}  // namespace modgal

#endif  // MODGAL_EXACT_MOD_POLY_HPP

#ifndef MODGAL_EXACT_INTEGER_HPP
#define MODGAL_EXACT_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace modgal {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by the caller.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input data (files, fixtures, bundled tables) is malformed or inconsistent.
class DataError : public Error {
public:
    using Error::Error;
};

/// p-adic valuation of a nonzero integer. Throws on zero.
int valuation(const Integer& n, const Integer& p);
int valuation(const Integer& n, std::uint64_t p);

bool is_prime(std::uint64_t n);
bool is_prime(const Integer& n);

/// All primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

/// Reduce n into [0, m).
std::uint64_t mod_u64(const Integer& n, std::uint64_t m);

/// Floor and ceiling of a rational number.
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

Integer pow(const Integer& base, unsigned long exp);

/// If n = p^k for a prime p and k >= 1, returns {p, k}; otherwise {0, 0}.
struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
};
PrimePower prime_power(std::uint64_t n);

}  // namespace modgal

#endif  // MODGAL_EXACT_INTEGER_HPP

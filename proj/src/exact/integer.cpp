#include "modgal/exact/integer.hpp"

namespace modgal {

int valuation(const Integer& n, const Integer& p)
{
    if (n == 0) throw DomainError("valuation of zero");
    if (p < 2) throw DomainError("valuation base must be >= 2");
    Integer m = n;
    // mpz_remove strips every factor of p at once
    mpz_class rest;
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

int valuation(const Integer& n, std::uint64_t p)
{
    return valuation(n, Integer(static_cast<unsigned long>(p)));
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 17; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool is_prime(const Integer& n)
{
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    if (hi < 2 || hi < lo) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i <= hi; ++i) {
        if (composite[i]) continue;
        if (i >= lo) out.push_back(i);
        for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    return out;
}

std::uint64_t mod_u64(const Integer& n, std::uint64_t m)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(m));
    return r.get_ui();
}

Integer floor(const Rational& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& r)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer pow(const Integer& base, unsigned long exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

PrimePower prime_power(std::uint64_t n)
{
    if (n < 2) return {};
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {n, 1};
    unsigned k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    if (n != 1) return {};
    return {p, k};
}

}  // namespace modgal

#ifndef MODGAL_FACTOR_CERTIFICATE_HPP
#define MODGAL_FACTOR_CERTIFICATE_HPP

#include "modgal/exact/int_poly.hpp"
#include "modgal/factor/pattern.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace modgal {

/// Degrees a factor over Q could have, given mod-p factor patterns: the
/// intersection over primes of the subset sums of each pattern.
class DegreeSieve {
public:
    explicit DegreeSieve(int n);

    /// Intersects with the subset sums of one squarefree pattern. Returns
    /// whether the set shrank.
    bool add(const FactorPattern& pattern);
    int degree() const { return n_; }
    /// True once only 0 and n remain.
    bool collapsed() const;
    /// Remaining achievable degrees, ascending (includes 0 and n).
    std::vector<int> remaining() const;

private:
    int n_;
    std::vector<bool> alive_;
};

/// Subset sums of the parts of a pattern, as a membership table of size total+1.
std::vector<bool> subset_sums(const std::vector<int>& parts);

struct IrredCertificate {
    enum class Status { certified, inconclusive };
    Status status = Status::inconclusive;
    /// Primes whose pattern shrank the degree set.
    std::vector<std::uint64_t> witness_primes;
    /// Every good prime examined, with its pattern.
    std::vector<std::pair<std::uint64_t, FactorPattern>> patterns;
    std::vector<int> remaining;

    bool certified() const { return status == Status::certified; }
    std::string report() const;
};

/// Runs the degree sieve over good primes p <= B (p not dividing lc(a), a mod
/// p squarefree), stopping as soon as the set collapses to {0, n}.
IrredCertificate irreducibility_certificate(const IntPoly& a, std::uint64_t bound);

}  // namespace modgal

#endif  // MODGAL_FACTOR_CERTIFICATE_HPP

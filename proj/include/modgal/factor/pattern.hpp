#ifndef MODGAL_FACTOR_PATTERN_HPP
#define MODGAL_FACTOR_PATTERN_HPP

#include <string>
#include <utility>
#include <vector>

namespace modgal {

/// Degrees of the irreducible factors of a polynomial over F_p, one
/// (degree, multiplicity) entry per distinct factor, sorted.
struct FactorPattern {
    std::vector<std::pair<int, int>> parts;

    FactorPattern() = default;
    /// Squarefree pattern from a list of factor degrees.
    static FactorPattern from_degrees(std::vector<int> degrees);

    int total_degree() const;
    bool squarefree() const;
    /// Factor degrees, one per distinct factor, ascending.
    std::vector<int> degrees() const;
    /// e.g. "1 1 4" or "1^2 3"; multiplicities above one as exponents.
    std::string to_string() const;

    friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
};

/// Multiset of (residue degree f, ramification index e) for the primes above p.
struct SplittingType {
    std::vector<std::pair<int, int>> parts;  // (f, e), sorted

    SplittingType() = default;
    explicit SplittingType(std::vector<std::pair<int, int>> fe);

    /// Sum of e*f.
    int degree() const;
    bool unramified() const;
    /// Written f^e with terms sorted by (f, e); a term repeated three or more
    /// times is grouped as (f^e)^c, e.g. "1^1 1^3 (2^3)^4".
    std::string to_string() const;

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// Parses the notation written by SplittingType::to_string.
SplittingType parse_splitting_type(const std::string& text);

}  // namespace modgal

#endif  // MODGAL_FACTOR_PATTERN_HPP

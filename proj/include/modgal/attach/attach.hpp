#ifndef MODGAL_ATTACH_ATTACH_HPP
#define MODGAL_ATTACH_ATTACH_HPP

#include "modgal/factor/pattern.hpp"
#include "modgal/ffield/pgl2.hpp"
#include "modgal/modsym/modsym.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modgal {

/// Eigenvalue data of a newform over K = Q[x]/(g) with x = a_2, whichever
/// source it came from.
struct FormData {
    std::uint64_t N = 0;
    int k = 2;
    IntPoly a2_minpoly;
    int eps_order = 1;
    /// Root of unity of order eps_order; absent for the trivial character.
    std::optional<QVec> zeta;
    std::map<std::uint64_t, QVec> a;  // a_p
    std::map<std::uint64_t, int> eps;  // eps(p) = zeta^eps
    std::string source;

    /// Trivial character, weight 2. `primes` supplies a_p beyond the
    /// system's own coefficient bound.
    static FormData from_system(const EigenSystem& e, const std::map<std::uint64_t, QVec>& primes = {});
    static FormData from_fixture(const FormFixture& f);

    bool has(std::uint64_t p) const { return a.count(p) != 0; }
    /// zeta^(-eps(p)) times a_p^2, the generator of the subfield F_f.
    QVec twisted_square(std::uint64_t p) const;
};

/// A prime lambda of Z[a_2] above ell, given by an irreducible factor of
/// the minimal polynomial of a_2 mod ell, with residue field F_ell[x]/(factor).
struct ResidueEmbedding {
    std::uint64_t ell = 0;
    IntPoly a2_minpoly;
    ModPoly factor{2};
    int multiplicity = 1;
    FqFieldPtr field;

    int residue_degree() const { return factor.degree(); }
    std::uint64_t order() const { return field->order(); }
    /// Image of an element of K; throws DomainError if ell divides a denominator.
    FqElement reduce(const QVec& v) const;
};

/// One embedding per irreducible factor of g mod ell, sorted by factor.
std::vector<ResidueEmbedding> residue_embeddings(const IntPoly& g, std::uint64_t ell);
/// The first lambda of residue degree exactly `degree`, if any.
std::optional<ResidueEmbedding> residue_embedding_of_degree(const IntPoly& g, std::uint64_t ell, int degree);

struct FrobClass {
    std::uint64_t p = 0;
    FqElement trace;  // a_p mod lambda
    FqElement det;    // eps(p) p^(k-1) mod lambda

    PGL2Class cls() const { return {trace, det}; }
    FqElement theta() const { return modgal::theta(cls()); }
};

/// Reduction of x^2 - a_p x + eps(p) p^(k-1) at lambda. eps_value is
/// eps(p) in K. Rejects p dividing N ell.
FrobClass frob_class(const QVec& a_p, const QVec& eps_value, std::uint64_t p, int k, std::uint64_t N,
                     const ResidueEmbedding& lambda);
FrobClass frob_class(const FormData& f, std::uint64_t p, const ResidueEmbedding& lambda);

struct ThetaScanReport {
    std::uint64_t ell = 0;
    std::uint64_t field_order = 0;
    std::uint64_t prime_bound = 0;
    std::uint64_t power_bound = 0;
    std::vector<std::uint64_t> primes;
    /// Sorted by field index; always contains 4 from the identity.
    std::vector<FqElement> seen;
    ThetaCoverage coverage;
    /// Least prime after which the values already covered the field.
    std::optional<std::uint64_t> full_at;
    /// Odd q: every square and 0 was seen, which is all of theta(PSL2(F_q)).
    /// The verdict stays inconclusive there since subgroups can match it.
    bool squares_covered = false;

    std::string verdict() const { return coverage.full ? "full" : "inconclusive"; }
    std::string format() const;
};

/// theta = tr^2 / det of Frob_p^n for p <= B, 1 <= n <= M, recorded when
/// det is a square. Throws DataError naming the primes with no data.
ThetaScanReport theta_scan(const FormData& f, const ResidueEmbedding& lambda, std::uint64_t prime_bound,
                           std::uint64_t power_bound);

enum class ProjectiveKind { PSL, PGL };
std::string to_string(ProjectiveKind k);

/// Whether det rho = eps chi_ell takes only square values in F_lambda. The
/// image of eps is all of mu_(eps_order) and, as ell does not divide N, it
/// is independent of p^(k-1) mod ell; per-prime values in the data are
/// checked against the answer.
bool det_lands_in_squares(const FormData& f, const ResidueEmbedding& lambda);
/// PSL when det lands in the squares, else PGL. Requires full theta coverage.
ProjectiveKind psl_pgl_decision(const FormData& f, const ResidueEmbedding& lambda, const ThetaScanReport& coverage);

enum class FieldVerdict { Compatible, Incompatible, Inconclusive };
std::string to_string(FieldVerdict v);

struct ResidueFieldReport {
    FieldVerdict verdict = FieldVerdict::Inconclusive;
    std::uint64_t ell = 0;
    std::uint64_t q = 0;
    /// Prime whose twisted square generates F_f with Z[generator] ell-maximal.
    std::optional<std::uint64_t> witness;
    IntPoly generator_minpoly;
    std::vector<int> residue_degrees;  // of all lambda' above ell
    std::vector<ModPoly> compatible;   // lambda' with residue field F_q
    std::string reason;

    std::string format() const;
};

/// Residue fields of F_f = Q(a_p^2 / eps(p)) above ell against F_q.
ResidueFieldReport residue_field_test(const FormData& f, std::uint64_t ell, std::uint64_t q);

struct Theta4Row {
    std::uint64_t p = 0;
    FqElement theta;
    FactorPattern pattern;
    bool theta_is_4 = false;
    bool pattern_is_fixed = false;  // split completely or one fixed point
    bool agree() const { return theta_is_4 == pattern_is_fixed; }
};

struct Theta4Report {
    std::uint64_t prime_bound = 0;
    std::vector<Theta4Row> rows;
    std::vector<std::uint64_t> skipped;  // p | N ell lc(P) or P not squarefree mod p
    std::vector<std::uint64_t> disagreements;

    std::string format() const;
    std::string summary() const;
};

/// Patterns of degree-1 factors that theta = 4 predicts: all of them, or
/// exactly one with every other factor of one common degree above 1.
bool fixed_point_pattern(const FactorPattern& pat);

/// Compares theta(Frob_p) = 4 with the factorisation of P mod p.
Theta4Report theta4_correspondence(const IntPoly& P, const FormData& f, const ResidueEmbedding& lambda,
                                   std::uint64_t prime_bound, unsigned jobs = 1);

}  // namespace modgal

#endif  // MODGAL_ATTACH_ATTACH_HPP

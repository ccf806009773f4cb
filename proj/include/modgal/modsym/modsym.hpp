#ifndef MODGAL_MODSYM_MODSYM_HPP
#define MODGAL_MODSYM_MODSYM_HPP

#include "modgal/exact/mat_q.hpp"
#include "modgal/exact/mod_poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modgal {

/// The projective line over Z/N: pairs (c : d) with gcd(c, d, N) = 1 up to
/// units. Representatives are the lexicographically least pairs.
class P1List {
public:
    explicit P1List(std::uint64_t N);
    std::uint64_t level() const { return N_; }
    std::size_t size() const { return reps_.size(); }
    std::pair<long, long> rep(std::size_t i) const { return reps_[i]; }
    /// Index of (c : d) for arbitrary integers, or -1 if gcd(c, d, N) != 1.
    long index(long c, long d) const;

private:
    std::uint64_t N_;
    std::vector<std::pair<long, long>> reps_;
    std::vector<long> table_;
};

std::uint64_t gamma0_index(std::uint64_t N);
/// Genus of X_0(N) from the index, elliptic points and cusps.
int genus_x0(std::uint64_t N);
/// ceil([SL2(Z) : Gamma0(N)] / 6), the weight 2 Sturm bound.
std::uint64_t sturm_bound(std::uint64_t N);

/// Weight 2 modular symbols for Gamma0(N), plus quotient, and its cuspidal
/// subspace.
struct ModSymSpace {
    std::uint64_t N = 0;
    P1List p1{1};
    /// Coordinates of every Manin symbol in the ambient plus quotient.
    std::vector<QVec> symbol_coords;
    /// A Manin symbol and sign representing each ambient basis vector.
    std::vector<std::pair<std::size_t, int>> basis_rep;
    /// Rows: basis of the cuspidal subspace (reduced echelon form).
    QMat cuspidal;
    std::vector<std::size_t> cusp_pivots;
    std::size_t cusp_count = 0;  // cusp classes modulo the star involution

    std::size_t ambient_dimension() const { return basis_rep.size(); }
    std::size_t dimension() const { return cuspidal.size(); }

    /// Computed Hecke matrices on the cuspidal subspace.
    mutable std::map<std::uint64_t, QMat> hecke_cache;
};

/// Throws if the cuspidal dimension differs from the genus.
ModSymSpace build_space(std::uint64_t N);

/// Coordinates of the modular symbol {0, p/q} (q = 0 means infinity).
QVec modular_symbol_zero_to(const ModSymSpace& sp, const Integer& p, const Integer& q);

/// T_n on the cuspidal subspace via Merel's matrices. Checks that the
/// result commutes with every previously computed T_m.
const QMat& hecke_matrix(const ModSymSpace& sp, std::uint64_t n);
/// T_n on the whole plus quotient, rows indexed by the ambient basis.
QMat ambient_hecke_matrix(const ModSymSpace& sp, std::uint64_t n);
/// Row k of ambient_hecke_matrix, from a single pass over Merel's matrices.
QVec ambient_hecke_row(const ModSymSpace& sp, std::size_t k, std::uint64_t n);
/// W_N = [0 -1; N 0] on the cuspidal subspace.
QMat atkin_lehner(const ModSymSpace& sp);

/// Arithmetic in Q[x]/(g) on coefficient vectors of length deg g.
QVec nf_mul(const QVec& a, const QVec& b, const IntPoly& g);
QVec nf_pow(const QVec& a, unsigned e, const IntPoly& g);
/// Minimal polynomial over Q of an element of Q[x]/(g).
IntPoly nf_minpoly(const QVec& a, const IntPoly& g);

struct EigenSystem {
    std::uint64_t N = 0;
    IntPoly a2_minpoly;
    /// a_n for 1 <= n <= bound over the power basis of a_2.
    std::vector<QVec> a;
    int atkin_lehner = 0;

    int degree() const { return a2_minpoly.degree(); }
    std::uint64_t bound() const { return a.empty() ? 0 : a.size() - 1; }
    const QVec& coeff(std::uint64_t n) const;
};

/// One system per irreducible factor of charpoly(T2); requires that
/// charpoly to be squarefree and N prime.
std::vector<EigenSystem> eigen_systems(const ModSymSpace& sp, std::uint64_t bound);

/// a_p for every prime p <= prime_bound not dividing N, computed one Manin
/// symbol at a time against the dual eigenspace of T2. Values at primes
/// up to e.bound() are checked against e.
std::map<std::uint64_t, QVec> eigen_prime_coefficients(const ModSymSpace& sp, const EigenSystem& e,
                                                       std::uint64_t prime_bound);

/// Every real embedding of a_p lies in [-2 sqrt p, 2 sqrt p], decided exactly.
bool satisfies_hasse_bound(const EigenSystem& e, std::uint64_t p);

struct CongruenceResult {
    bool congruent = false;
    std::uint64_t ell = 0;
    std::uint64_t bound = 0;
    /// Residue fields F_ell[x]/(g1) and F_ell[x]/(g2), and the image of the
    /// class of y in the second under the identification.
    std::optional<ModPoly> residue1, residue2;
    std::vector<std::uint64_t> image;
    std::size_t pairs_tried = 0;

    std::string report() const;
};

/// Looks for primes above ell in both coefficient fields and an isomorphism
/// of residue fields under which a_n agree for all n <= bound.
CongruenceResult sturm_congruence(const EigenSystem& e1, const EigenSystem& e2, std::uint64_t ell,
                                  std::uint64_t bound);

/// Eigenvalue data for forms the engine does not compute.
struct FormFixture {
    struct Entry {
        std::uint64_t p = 0;
        QVec a;       // a_p over the power basis of a_2
        int eps = 0;  // eps(p) = zeta^eps
    };
    std::uint64_t N = 0;
    int k = 0;
    IntPoly a2_minpoly;
    int eps_order = 1;
    /// The fixed root of unity of order eps_order over the power basis of a_2.
    std::optional<QVec> zeta;
    std::string note;
    std::vector<Entry> entries;

    const Entry* find(std::uint64_t p) const;
};

/// Parses and validates a fixture. When expected is given, the declared
/// minimal polynomial must equal it.
FormFixture parse_fixture(const std::string& text, const std::optional<IntPoly>& expected = std::nullopt);
FormFixture load_fixture(const std::string& path, const std::optional<IntPoly>& expected = std::nullopt);
std::string format_fixture(const FormFixture& f);

}  // namespace modgal

#endif  // MODGAL_MODSYM_MODSYM_HPP

#ifndef MODGAL_CLI_VERIFY_HPP
#define MODGAL_CLI_VERIFY_HPP

#include "modgal/attach/attach.hpp"
#include "modgal/cli/cache.hpp"
#include "modgal/cli/table.hpp"
#include "modgal/maxorder/order.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace modgal {

struct RunConfig {
    std::uint64_t cert_primes = 200;    // irreducibility and fingerprints
    std::uint64_t theta_primes = 1000;  // theta scans
    std::uint64_t theta4_primes = 500;
    std::uint64_t powers = 10;
    std::vector<std::string> rows;  // empty means every row
    bool big = true;                // degree 50 rows; fast enough to run by default
    unsigned jobs = 1;
    std::string data_dir = MODGAL_DATA_DIR;
    ArtifactCache cache;

    /// Throws DomainError on a zero bound.
    void validate() const;
    std::string table_path() const { return data_dir + "/table.txt"; }
    std::string poly_path(const std::string& id) const { return data_dir + "/polys/" + id + ".poly"; }
    std::string fixture_path(std::uint64_t N) const
    {
        return data_dir + "/fixtures/N" + std::to_string(N) + ".fixture";
    }
};

/// p-maximal order through the cache.
OrderBasis cached_maximal_order(const IntPoly& P, std::uint64_t p, const ArtifactCache& cache);

/// Newform data attached to a table row: a Gamma0(N) system at a prime level
/// when one matches the row, otherwise a fixture file for the level.
struct RowForm {
    FormData data;
    bool from_fixture = false;
    std::optional<int> atkin_lehner;
    /// Largest B such that every good prime up to B has data.
    std::uint64_t data_bound = 0;
};
std::optional<RowForm> row_form(const TableRow& row, const RunConfig& cfg);

struct LevelForm {
    FormData data;
    int atkin_lehner = 0;
};
/// Every Gamma0(N) eigen-system at a prime level N with a_p for p <= bound,
/// through the cache.
std::vector<LevelForm> level_forms(std::uint64_t N, std::uint64_t bound, const ArtifactCache& cache);
/// Fixture form of computed data (trivial character).
FormFixture to_fixture(const FormData& f, const std::string& note);

struct FingerprintCheck {
    std::size_t checked = 0;
    std::vector<std::pair<std::uint64_t, FactorPattern>> violations;
    bool ok() const { return violations.empty() && checked > 0; }
};
/// Cycle types of the claimed group on P^1(F_q), computed once per group.
const std::set<std::vector<int>>& group_fingerprint(std::uint64_t q, GroupKind kind);
/// Factor pattern of P mod p in the fingerprint, for p <= bound with P
/// squarefree mod p.
FingerprintCheck fingerprint_check(const IntPoly& P, std::uint64_t q, GroupKind kind, std::uint64_t bound);

enum class CheckStatus { Pass, Fail, Info };
std::string to_string(CheckStatus s);

struct RowCheck {
    std::string name;
    CheckStatus status = CheckStatus::Info;
    std::string detail;
};

struct RowResult {
    std::string id;
    std::string group;
    std::vector<RowCheck> checks;
    double seconds = 0;

    bool pass() const;
    std::vector<std::string> failures() const;
};

/// Everything checkable for one row; never throws for data problems, which
/// become failed checks instead.
RowResult verify_row(const TableRow& row, const RunConfig& cfg);

struct TableResult {
    std::vector<RowResult> rows;
    bool pass() const;
    std::string format_text() const;
    std::string format_json() const;
};

/// Rows in table order, run on up to cfg.jobs threads.
TableResult verify_table(const RunConfig& cfg);

}  // namespace modgal

#endif  // MODGAL_CLI_VERIFY_HPP

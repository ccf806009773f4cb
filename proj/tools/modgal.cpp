// Command-line front end: single computations and the table verification.
#include "modgal/attach/attach.hpp"
#include "modgal/cli/verify.hpp"
#include "modgal/factor/certificate.hpp"
#include "modgal/factor/finite_factor.hpp"
#include "modgal/factor/resolvent.hpp"
#include "modgal/serre/serre.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <regex>

using namespace modgal;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Common {
    std::string format = "text";
    bool no_cache = false;
    unsigned jobs = 1;
    std::string data_dir = MODGAL_DATA_DIR;

    bool as_json() const { return format == "json"; }
    ArtifactCache cache() const { return ArtifactCache::from_env(no_cache); }
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--no-cache", c.no_cache, "Ignore $" + std::string(ArtifactCache::kEnvVar));
    cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--data", c.data_dir, "Bundled data directory")->check(CLI::ExistingDirectory);
}

CLI::Validator prime_check()
{
    return CLI::Validator(
        [](std::string& s) -> std::string {
            try {
                const auto v = std::stoull(s);
                return is_prime(v) ? "" : s + " is not prime";
            } catch (const std::exception&) {
                return s + " is not a number";
            }
        },
        "PRIME");
}

std::pair<GroupKind, std::uint64_t> parse_group(const std::string& text)
{
    static const std::regex re(R"(^(PSL|PGL)2[(:](\d+)\)?$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw DomainError("group must look like PSL2(25) or PGL2:27, got " + text);
    const std::uint64_t q = std::stoull(m[2]);
    if (prime_power(q).exponent == 0) throw DomainError(std::to_string(q) + " is not a prime power");
    return {m[1] == "PSL" ? GroupKind::PSL2 : GroupKind::PGL2, q};
}

// Forms at a level: computed for prime levels, or the given fixture.
std::vector<LevelForm> forms_for(std::uint64_t N, const std::string& fixture, std::uint64_t bound, const Common& c)
{
    if (!fixture.empty()) {
        LevelForm lf;
        lf.data = FormData::from_fixture(load_fixture(fixture));
        if (N != 0 && lf.data.N != N) throw DataError("fixture is for level " + std::to_string(lf.data.N));
        return {lf};
    }
    if (!is_prime(N)) throw DomainError("eigen-systems are computed at prime levels only; pass --fixture");
    return level_forms(N, bound, c.cache());
}

std::string form_label(const LevelForm& lf)
{
    std::string s = "form N=" + std::to_string(lf.data.N) + " a2=" + lf.data.a2_minpoly.to_string();
    if (lf.atkin_lehner) s += " W=" + std::to_string(lf.atkin_lehner);
    return s;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Galois representations of PSL2/PGL2 number fields and their modular forms"};
    app.require_subcommand(1);
    Common common;
    int status = kOk;

    // factor FILE P
    auto* factor_cmd = app.add_subcommand("factor", "Factorisation pattern of a polynomial mod p");
    std::string poly_file;
    std::uint64_t prime = 0;
    factor_cmd->add_option("poly", poly_file, "Polynomial file")->required();
    factor_cmd->add_option("p", prime, "Prime")->required()->check(prime_check());
    add_common(factor_cmd, common);
    factor_cmd->callback([&] {
        const auto f = factor_mod_p(read_poly_file(poly_file), prime);
        if (common.as_json())
            std::cout << json{{"p", prime}, {"pattern", f.pattern.to_string()}}.dump() << "\n";
        else
            std::cout << f.pattern.to_string() << "\n";
    });

    // splitting FILE P
    auto* split_cmd = app.add_subcommand("splitting", "Decomposition type of p in the number field");
    split_cmd->add_option("poly", poly_file, "Polynomial file")->required();
    split_cmd->add_option("p", prime, "Prime")->required()->check(prime_check());
    add_common(split_cmd, common);
    split_cmd->callback([&] {
        const IntPoly P = read_poly_file(poly_file);
        const OrderBasis O = cached_maximal_order(P, prime, common.cache());
        const std::string st = prime_splitting(O).to_string();
        const int v = valuation(discriminant(P), prime) - 2 * O.index_valuation();
        if (common.as_json())
            std::cout << json{{"p", prime}, {"splitting", st}, {"disc_valuation", v}}.dump() << "\n";
        else
            std::cout << st << "\n";
    });

    // serre --row ID | serre FILE GROUP PRIMES...
    auto* serre_cmd = app.add_subcommand("serre", "Serre level and weight from ramification data");
    std::string row_id, group_text;
    std::vector<std::uint64_t> ramified;
    serre_cmd->add_option("--row", row_id, "Table row id");
    serre_cmd->add_option("poly", poly_file, "Polynomial file");
    serre_cmd->add_option("group", group_text, "Group claim, e.g. PSL2(25)");
    serre_cmd->add_option("primes", ramified, "Ramified primes")->check(prime_check());
    add_common(serre_cmd, common);
    serre_cmd->callback([&] {
        IntPoly P;
        GroupKind kind;
        std::uint64_t q;
        if (!row_id.empty()) {
            RunConfig cfg;
            cfg.data_dir = common.data_dir;
            const auto rows = read_table_file(cfg.table_path());
            const auto it = std::find_if(rows.begin(), rows.end(), [&](const TableRow& r) { return r.id == row_id; });
            if (it == rows.end()) throw DataError("no table row " + row_id);
            P = read_poly_file(cfg.poly_path(row_id));
            kind = it->kind;
            q = it->q;
            ramified.clear();
            for (const auto& [p, v] : it->disc) ramified.push_back(p);
        } else {
            if (poly_file.empty() || group_text.empty()) throw CLI::ValidationError("serre needs --row or FILE GROUP PRIMES");
            P = read_poly_file(poly_file);
            std::tie(kind, q) = parse_group(group_text);
        }
        std::map<std::uint64_t, SplittingType> sp;
        std::optional<int> disc_ell;
        const std::uint64_t ell = prime_power(q).prime;
        for (std::uint64_t p : ramified) {
            const OrderBasis O = cached_maximal_order(P, p, common.cache());
            sp[p] = prime_splitting(O);
            if (p == ell) disc_ell = valuation(discriminant(P), p) - 2 * O.index_valuation();
        }
        const SerreReport r = serre_report(P, q, kind, sp, disc_ell);
        if (common.as_json()) {
            json j{{"q", q}, {"N", r.level}, {"k", r.weight ? json(*r.weight) : json(nullptr)}, {"odd", r.odd}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << r.format_row() << "\n";
        }
    });

    // theta-scan N ELL
    auto* scan_cmd = app.add_subcommand("theta-scan", "theta values of Frobenius classes modulo lambda | ell");
    std::uint64_t level = 0, ell = 0, primes = 1000, powers = 10;
    int degree = 0;
    std::string fixture;
    scan_cmd->add_option("N", level, "Level (prime)")->required();
    scan_cmd->add_option("ell", ell, "Residue characteristic")->required()->check(prime_check());
    scan_cmd->add_option("--primes", primes, "Prime bound B")->check(CLI::Range(2ull, 1000000ull));
    scan_cmd->add_option("--powers", powers, "Power bound M")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--degree", degree, "Only primes lambda of this residue degree");
    scan_cmd->add_option("--fixture", fixture, "Eigenvalue fixture instead of computed data")->check(CLI::ExistingFile);
    add_common(scan_cmd, common);
    scan_cmd->callback([&] {
        json all = json::array();
        for (const auto& lf : forms_for(level, fixture, primes, common)) {
            for (const auto& lam : residue_embeddings(lf.data.a2_minpoly, ell)) {
                if (degree && lam.residue_degree() != degree) continue;
                if (lam.order() < 4) continue;
                const auto r = theta_scan(lf.data, lam, primes, powers);
                std::optional<ProjectiveKind> kind;
                if (r.coverage.full) kind = psl_pgl_decision(lf.data, lam, r);
                if (common.as_json()) {
                    all.push_back({{"form", form_label(lf)}, {"lambda", lam.factor.to_string()}, {"q", r.field_order},
                                   {"seen", r.seen.size()}, {"verdict", r.verdict()},
                                   {"full_at", r.full_at ? json(*r.full_at) : json(nullptr)},
                                   {"group", kind ? json(to_string(*kind)) : json(nullptr)}});
                } else {
                    std::cout << form_label(lf) << " lambda=" << lam.factor.to_string() << "\n" << r.format();
                    if (kind) std::cout << "image contains PSL2, projective image " << to_string(*kind) << "2\n";
                }
            }
        }
        if (common.as_json()) std::cout << all.dump(2) << "\n";
    });

    // theta4 FILE N ELL
    auto* t4_cmd = app.add_subcommand("theta4", "theta = 4 against factorisation patterns");
    bool verbose = false;
    std::uint64_t t4_primes = 500;
    t4_cmd->add_option("poly", poly_file, "Polynomial file")->required();
    t4_cmd->add_option("N", level, "Level")->required();
    t4_cmd->add_option("ell", ell, "Residue characteristic")->required()->check(prime_check());
    t4_cmd->add_option("--primes", t4_primes, "Prime bound B")->check(CLI::Range(2ull, 1000000ull));
    t4_cmd->add_option("--degree", degree, "Only primes lambda of this residue degree");
    t4_cmd->add_option("--fixture", fixture, "Eigenvalue fixture instead of computed data")->check(CLI::ExistingFile);
    t4_cmd->add_flag("--verbose", verbose, "Print every prime");
    add_common(t4_cmd, common);
    t4_cmd->callback([&] {
        const IntPoly P = read_poly_file(poly_file);
        bool consistent = false;
        json all = json::array();
        for (const auto& lf : forms_for(level, fixture, t4_primes, common)) {
            for (const auto& lam : residue_embeddings(lf.data.a2_minpoly, ell)) {
                if (degree && lam.residue_degree() != degree) continue;
                const auto r = theta4_correspondence(P, lf.data, lam, t4_primes, common.jobs);
                consistent = consistent || r.disagreements.empty();
                if (common.as_json()) {
                    all.push_back({{"form", form_label(lf)}, {"lambda", lam.factor.to_string()},
                                   {"checked", r.rows.size()}, {"disagreements", r.disagreements}});
                } else {
                    std::cout << form_label(lf) << " lambda=" << lam.factor.to_string() << "\n"
                              << (verbose ? r.format() : r.summary() + "\n");
                }
            }
        }
        if (common.as_json()) std::cout << all.dump(2) << "\n";
        if (!consistent) status = kMismatch;
    });

    // congruence N ELL
    auto* cong_cmd = app.add_subcommand("congruence", "Sturm-bound congruences between eigen-systems");
    std::uint64_t bound = 0;
    cong_cmd->add_option("N", level, "Level (prime)")->required();
    cong_cmd->add_option("ell", ell, "Prime")->required()->check(prime_check());
    cong_cmd->add_option("--bound", bound, "Coefficient bound (default: Sturm bound)");
    add_common(cong_cmd, common);
    cong_cmd->callback([&] {
        if (!is_prime(level)) throw DomainError("eigen-systems are computed at prime levels only");
        const std::uint64_t b = bound ? bound : sturm_bound(level);
        const auto es = eigen_systems(build_space(level), std::max<std::uint64_t>(b, 2));
        json all = json::array();
        if (es.size() < 2 && !common.as_json())
            std::cout << "level " << level << ": " << es.size() << " eigen-system, nothing to compare\n";
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                const auto r = sturm_congruence(es[i], es[j], ell, b);
                if (common.as_json()) {
                    all.push_back({{"first", es[i].a2_minpoly.to_string()}, {"second", es[j].a2_minpoly.to_string()},
                                   {"congruent", r.congruent}, {"bound", b}, {"sturm_bound", sturm_bound(level)}});
                } else {
                    std::cout << es[i].a2_minpoly.to_string() << " (W=" << es[i].atkin_lehner << ") vs "
                              << es[j].a2_minpoly.to_string() << " (W=" << es[j].atkin_lehner << ")\n"
                              << r.report() << "\n";
                }
            }
        if (common.as_json()) std::cout << all.dump(2) << "\n";
    });

    // resolvent FILE
    auto* res_cmd = app.add_subcommand("resolvent", "Double transitivity from pair resolvents mod p");
    long s = 1, t = 2;
    std::uint64_t res_primes = 500;
    res_cmd->add_option("poly", poly_file, "Polynomial file")->required();
    res_cmd->add_option("--primes", res_primes, "Prime bound B")->check(CLI::Range(2ull, 1000000ull));
    res_cmd->add_option("-s", s, "Coefficient s in s a + t b");
    res_cmd->add_option("-t", t, "Coefficient t in s a + t b");
    add_common(res_cmd, common);
    res_cmd->callback([&] {
        const auto r = double_transitivity_certificate(read_poly_file(poly_file), s, t, res_primes, common.jobs);
        if (common.as_json())
            std::cout << json{{"verdict", r.verdict_name()}, {"evidence", r.evidence()},
                              {"contradictions", r.contradictions}}.dump()
                      << "\n";
        else
            std::cout << r.report();
        if (r.verdict == DoubleTransitivityReport::Verdict::failed) status = kMismatch;
    });

    // fingerprint GROUP [FILE]
    auto* fp_cmd = app.add_subcommand("fingerprint", "Cycle types of PSL2/PGL2 on P^1, or membership of mod p patterns");
    std::uint64_t fp_primes = 200;
    fp_cmd->add_option("group", group_text, "Group, e.g. PSL2(25)")->required();
    fp_cmd->add_option("poly", poly_file, "Polynomial whose patterns are checked");
    fp_cmd->add_option("--primes", fp_primes, "Prime bound B")->check(CLI::Range(2ull, 1000000ull));
    add_common(fp_cmd, common);
    fp_cmd->callback([&] {
        const auto [kind, q] = parse_group(group_text);
        if (poly_file.empty()) {
            std::cout << format_fingerprint(group_fingerprint(q, kind));
            return;
        }
        const auto r = fingerprint_check(read_poly_file(poly_file), q, kind, fp_primes);
        if (common.as_json()) {
            json v = json::array();
            for (const auto& [p, pat] : r.violations) v.push_back({{"p", p}, {"pattern", pat.to_string()}});
            std::cout << json{{"checked", r.checked}, {"violations", v}}.dump() << "\n";
        } else {
            for (const auto& [p, pat] : r.violations) std::cout << "p=" << p << " pattern " << pat.to_string() << " not a cycle type\n";
            std::cout << "fingerprint: " << r.checked << " primes, " << r.violations.size() << " violations\n";
        }
        if (!r.ok()) status = kMismatch;
    });

    // verify-table
    auto* vt_cmd = app.add_subcommand("verify-table", "Check every table row end to end");
    RunConfig cfg;
    std::vector<std::string> rows;
    bool big = false;
    vt_cmd->add_option("--rows", rows, "Row ids (default: all)")->delimiter(',');
    vt_cmd->add_option("--primes", cfg.theta_primes, "Prime bound for theta scans")->check(CLI::Range(2ull, 1000000ull));
    vt_cmd->add_option("--powers", cfg.powers, "Power bound for theta scans")->check(CLI::PositiveNumber);
    vt_cmd->add_option("--cert-primes", cfg.cert_primes, "Prime bound for certificates and fingerprints")
        ->check(CLI::Range(2ull, 1000000ull));
    vt_cmd->add_option("--theta4-primes", cfg.theta4_primes, "Prime bound for the theta = 4 scan")
        ->check(CLI::Range(2ull, 1000000ull));
    vt_cmd->add_flag("--big", big, "Accepted for compatibility; degree 50 rows always run");
    add_common(vt_cmd, common);
    vt_cmd->callback([&] {
        cfg.rows = rows;
        cfg.big = true;
        cfg.jobs = common.jobs;
        cfg.data_dir = common.data_dir;
        cfg.cache = common.cache();
        const TableResult r = verify_table(cfg);
        std::cout << (common.as_json() ? r.format_json() : r.format_text());
        for (const auto& row : r.rows) std::cerr << "timing " << row.id << " " << row.seconds << " s\n";
        if (!r.pass()) status = kMismatch;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return status;
}

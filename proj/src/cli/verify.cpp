#include "modgal/cli/verify.hpp"

#include "modgal/factor/certificate.hpp"
#include "modgal/factor/finite_factor.hpp"
#include "modgal/serre/serre.hpp"
#include "modgal/util/parallel.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace modgal {

namespace {

constexpr const char* kCacheVersion = "v1";

std::string join_primes(const std::vector<std::uint64_t>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

std::map<std::string, std::string> read_checksums(const std::string& path)
{
    std::map<std::string, std::string> out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string hash, name;
        if (ls >> hash >> name) out[name] = hash;
    }
    return out;
}

std::uint64_t compute_data_bound(const FormData& f, std::uint64_t ell)
{
    std::uint64_t bound = 1;
    for (std::uint64_t p = 2;; ++p) {
        if (!is_prime(p)) continue;
        if (p != ell && f.N % p != 0 && !f.has(p)) return bound;
        bound = p;
        if (p > 100000) return bound;
    }
}

void add(RowResult& r, std::string name, CheckStatus s, std::string detail)
{
    r.checks.push_back({std::move(name), s, std::move(detail)});
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

}  // namespace

void RunConfig::validate() const
{
    if (cert_primes < 2 || theta_primes < 2 || theta4_primes < 2 || powers < 1)
        throw DomainError("prime and power bounds must be positive");
    if (jobs < 1) throw DomainError("--jobs must be at least 1");
}

OrderBasis cached_maximal_order(const IntPoly& P, std::uint64_t p, const ArtifactCache& cache)
{
    const std::string key = std::string(kCacheVersion) + "\n" + format_poly(P) + "prime " + std::to_string(p);
    if (auto text = cache.load("order", key)) {
        try {
            OrderBasis O = OrderBasis::deserialize(*text);
            if (O.poly == P && O.p == p) return O;
        } catch (const Error&) {
            // fall through and recompute
        }
    }
    OrderBasis O = p_maximal_order(P, p);
    cache.store("order", key, O.serialize());
    return O;
}

FormFixture to_fixture(const FormData& f, const std::string& note)
{
    if (f.eps_order != 1) throw DomainError("only trivial-character data is converted");
    FormFixture fx;
    fx.N = f.N;
    fx.k = f.k;
    fx.a2_minpoly = f.a2_minpoly;
    fx.eps_order = 1;
    fx.note = note;
    for (const auto& [p, a] : f.a) fx.entries.push_back({p, a, 0});
    return fx;
}

std::vector<LevelForm> level_forms(std::uint64_t N, std::uint64_t bound, const ArtifactCache& cache)
{
    const std::string key = std::string(kCacheVersion) + "\nlevel " + std::to_string(N) + " bound " + std::to_string(bound);
    const std::string sep = "----\n";
    if (auto text = cache.load("forms", key)) {
        try {
            std::vector<LevelForm> out;
            std::size_t pos = 0;
            while (pos < text->size()) {
                const std::size_t end = text->find(sep, pos);
                if (end == std::string::npos) throw DataError("truncated cache entry");
                std::string block = text->substr(pos, end - pos);
                pos = end + sep.size();
                const std::size_t nl = block.find('\n');
                LevelForm lf;
                lf.atkin_lehner = std::stoi(block.substr(block.find(' ') + 1, nl));
                lf.data = FormData::from_fixture(parse_fixture(block.substr(nl + 1)));
                lf.data.source = "modular symbols, level " + std::to_string(N);
                out.push_back(std::move(lf));
            }
            if (!out.empty()) return out;
        } catch (const std::exception&) {
            // recompute below
        }
    }
    const ModSymSpace sp = build_space(N);
    std::vector<LevelForm> out;
    std::string blob;
    for (const auto& e : eigen_systems(sp, 2)) {
        LevelForm lf;
        lf.atkin_lehner = e.atkin_lehner;
        lf.data = FormData::from_system(e, eigen_prime_coefficients(sp, e, bound));
        blob += "atkin_lehner " + std::to_string(e.atkin_lehner) + "\n" +
                format_fixture(to_fixture(lf.data, "cached eigenvalues")) + sep;
        out.push_back(std::move(lf));
    }
    cache.store("forms", key, blob);
    return out;
}

std::optional<RowForm> row_form(const TableRow& row, const RunConfig& cfg)
{
    const std::uint64_t bound = std::max(cfg.theta_primes, cfg.theta4_primes);
    if (is_prime(row.level)) {
        for (auto& lf : level_forms(row.level, bound, cfg.cache)) {
            const IntPoly& g = lf.data.a2_minpoly;
            bool match = row.a2_minpoly ? g == *row.a2_minpoly
                                        : g.degree() == row.a2_degree && (!row.a2_constant || g[0] == *row.a2_constant);
            if (row.atkin_lehner && lf.atkin_lehner != *row.atkin_lehner) match = false;
            if (!match) continue;
            RowForm rf;
            rf.data = std::move(lf.data);
            rf.atkin_lehner = lf.atkin_lehner;
            rf.data_bound = compute_data_bound(rf.data, row.ell());
            return rf;
        }
    }
    if (std::filesystem::exists(cfg.fixture_path(row.level))) {
        RowForm rf;
        rf.data = FormData::from_fixture(load_fixture(cfg.fixture_path(row.level), row.a2_minpoly));
        rf.from_fixture = true;
        rf.data_bound = compute_data_bound(rf.data, row.ell());
        return rf;
    }
    return std::nullopt;
}

const std::set<std::vector<int>>& group_fingerprint(std::uint64_t q, GroupKind kind)
{
    static std::mutex m;
    static std::map<std::pair<std::uint64_t, int>, std::set<std::vector<int>>> cache;
    const auto key = std::make_pair(q, static_cast<int>(kind));
    {
        std::lock_guard<std::mutex> lock(m);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const auto pp = prime_power(q);
    FqField F(pp.prime, static_cast<int>(pp.exponent));
    auto fp = cycle_type_fingerprint(F, kind);
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(key, std::move(fp)).first->second;
}

FingerprintCheck fingerprint_check(const IntPoly& P, std::uint64_t q, GroupKind kind, std::uint64_t bound)
{
    const auto& fp = group_fingerprint(q, kind);
    FingerprintCheck out;
    for (std::uint64_t p : primes_between(2, bound)) {
        if (mod_u64(P.lead(), p) == 0) continue;
        const ModPoly pm(p, P);
        if (!is_squarefree(pm)) continue;
        const FactorPattern pat = squarefree_pattern(pm.monic());
        ++out.checked;
        if (!fp.count(pat.degrees())) out.violations.emplace_back(p, pat);
    }
    return out;
}

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    default: return "info";
    }
}

bool RowResult::pass() const
{
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

std::vector<std::string> RowResult::failures() const
{
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) out.push_back(c.name);
    return out;
}

RowResult verify_row(const TableRow& row, const RunConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    RowResult r;
    r.id = row.id;
    r.group = row.group_name();
    const std::string path = cfg.poly_path(row.id);
    const std::uint64_t ell = row.ell();

    IntPoly P;
    try {
        const auto sums = read_checksums(cfg.data_dir + "/checksums.txt");
        const std::string name = "polys/" + row.id + ".poly";
        const std::string actual = sha256_file(path);
        if (!sums.count(name))
            add(r, "checksum", CheckStatus::Fail, "no entry for " + name);
        else
            add(r, "checksum", pass_if(sums.at(name) == actual), sums.at(name) == actual ? "sha256 ok" : "sha256 " + actual);
        P = read_poly_file(path);
    } catch (const Error& e) {
        add(r, "polynomial", CheckStatus::Fail, e.what());
        return r;
    }

    try {
        add(r, "degree", pass_if(P.degree() == static_cast<int>(row.q + 1)), std::to_string(P.degree()));

        const auto cert = irreducibility_certificate(P, cfg.cert_primes);
        add(r, "irreducible", pass_if(cert.certified()),
            cert.certified() ? "certified by p = " + join_primes(cert.witness_primes) : "degree sieve inconclusive");

        const int real = real_root_count(P);
        add(r, "odd", pass_if(real < P.degree()), std::to_string(real) + " real roots");

        std::map<std::uint64_t, SplittingType> splittings;
        std::map<std::uint64_t, int> disc;
        for (const auto& [p, expected] : row.disc) {
            const OrderBasis O = cached_maximal_order(P, p, cfg.cache);
            const int v = valuation(discriminant(P), p) - 2 * O.index_valuation();
            disc[p] = v;
            add(r, "disc " + std::to_string(p), pass_if(v == expected),
                std::to_string(v) + (v == expected ? "" : " expected " + std::to_string(expected)));
            splittings[p] = prime_splitting(O);
        }
        for (const auto& [p, expected] : row.splitting) {
            if (!splittings.count(p)) splittings[p] = prime_splitting(cached_maximal_order(P, p, cfg.cache));
            const std::string got = splittings[p].to_string();
            add(r, "splitting " + std::to_string(p), pass_if(splittings[p] == expected),
                got + (splittings[p] == expected ? "" : " expected " + expected.to_string()));
        }

        const std::optional<int> disc_ell = disc.count(ell) ? std::optional<int>(disc[ell]) : std::nullopt;
        const SerreReport sr = serre_report(P, row.q, row.kind, splittings, disc_ell);
        add(r, "level", pass_if(sr.level == row.level),
            "N=" + std::to_string(sr.level) + (sr.level == row.level ? "" : " expected " + std::to_string(row.level)));
        const bool weight_ok = sr.weight && *sr.weight == row.weight;
        add(r, "weight", pass_if(weight_ok),
            sr.weight ? "k=" + std::to_string(*sr.weight) + (weight_ok ? "" : " expected " + std::to_string(row.weight))
                      : "no weight determined");

        const auto fc = fingerprint_check(P, row.q, row.kind, cfg.cert_primes);
        std::string fdetail = std::to_string(fc.checked) + " primes";
        if (!fc.violations.empty())
            fdetail += ", p = " + std::to_string(fc.violations.front().first) + " pattern " +
                       fc.violations.front().second.to_string() + " not a cycle type";
        add(r, "fingerprint", pass_if(fc.ok()), fdetail);
    } catch (const Error& e) {
        add(r, "polynomial side", CheckStatus::Fail, e.what());
    }

    try {
        const auto rf = row_form(row, cfg);
        if (!rf) {
            add(r, "eigenform", CheckStatus::Info, "no eigenvalue data at level " + std::to_string(row.level));
        } else {
            const FormData& f = rf->data;
            std::string origin = rf->from_fixture ? "fixture" : "computed";
            origin += ", a2 minpoly " + f.a2_minpoly.to_string();
            if (rf->atkin_lehner) origin += ", W=" + std::to_string(*rf->atkin_lehner);
            add(r, "eigenform", CheckStatus::Pass, origin);

            const auto field = residue_field_test(f, ell, row.q);
            add(r, "residue field",
                field.verdict == FieldVerdict::Compatible     ? CheckStatus::Pass
                : field.verdict == FieldVerdict::Incompatible ? CheckStatus::Fail
                                                               : CheckStatus::Info,
                to_string(field.verdict) + (field.witness ? ", witness p = " + std::to_string(*field.witness) : ""));

            std::vector<ResidueEmbedding> lambdas;
            for (auto& l : residue_embeddings(f.a2_minpoly, ell))
                if (l.residue_degree() == row.field_degree()) lambdas.push_back(std::move(l));
            if (lambdas.empty()) {
                add(r, "theta4", CheckStatus::Info, "no prime of Q(a_2) with residue field F_" + std::to_string(row.q));
            } else {
                // A lambda for which theta = 4 matches the factorisation everywhere.
                const std::uint64_t B4 = std::min(cfg.theta4_primes, rf->data_bound);
                std::optional<std::size_t> chosen;
                Theta4Report best;
                for (std::size_t i = 0; i < lambdas.size() && !chosen; ++i) {
                    Theta4Report t4 = theta4_correspondence(P, f, lambdas[i], B4, 1);
                    if (t4.disagreements.empty()) chosen = i;
                    if (i == 0 || t4.disagreements.empty()) best = std::move(t4);
                }
                const std::string detail = "lambda " + lambdas[chosen.value_or(0)].factor.to_string() + ": " + best.summary();
                if (!chosen)
                    add(r, "theta4", CheckStatus::Fail, detail);
                else if (best.rows.empty() || B4 < cfg.theta4_primes)
                    add(r, "theta4", CheckStatus::Info, detail + ", limited by the eigenvalue data");
                else
                    add(r, "theta4", CheckStatus::Pass, detail);

                const ResidueEmbedding& lam = lambdas[chosen.value_or(0)];
                const std::uint64_t Bt = std::min(cfg.theta_primes, rf->data_bound);
                if (Bt >= 2) {
                    const auto scan = theta_scan(f, lam, Bt, cfg.powers);
                    std::string d = std::to_string(scan.seen.size()) + "/" + std::to_string(scan.field_order) +
                                    " values, B=" + std::to_string(Bt) + " M=" + std::to_string(cfg.powers);
                    if (scan.full_at) d += ", full at p=" + std::to_string(*scan.full_at);
                    if (ell == 2) {
                        add(r, "theta coverage", pass_if(scan.coverage.full), scan.verdict() + ", " + d);
                    } else {
                        // Odd q: only squares and 0 can occur, see the theta image of PSL2.
                        d += scan.squares_covered ? ", every square seen" : ", squares partly seen";
                        add(r, "theta coverage", CheckStatus::Info, scan.verdict() + ", " + d);
                    }
                    if (scan.coverage.full) {
                        const ProjectiveKind k = psl_pgl_decision(f, lam, scan);
                        const ProjectiveKind want = row.kind == GroupKind::PSL2 ? ProjectiveKind::PSL : ProjectiveKind::PGL;
                        add(r, "psl/pgl", pass_if(k == want), to_string(k));
                    }
                }
                if (f.N % ell != 0) {
                    const bool sq = det_lands_in_squares(f, lam);
                    const bool want = row.kind == GroupKind::PSL2;
                    add(r, "det character", pass_if(sq == want),
                        sq ? "eps chi_ell lands in squares (PSL)" : "eps chi_ell takes non-square values (PGL)");
                }
            }
        }
    } catch (const Error& e) {
        add(r, "modular side", CheckStatus::Fail, e.what());
    }

    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

bool TableResult::pass() const
{
    for (const auto& r : rows)
        if (!r.pass()) return false;
    return !rows.empty();
}

std::string TableResult::format_text() const
{
    std::ostringstream os;
    std::size_t ok = 0;
    for (const auto& r : rows) {
        os << "row " << r.id << " " << r.group << " " << (r.pass() ? "PASS" : "FAIL") << "\n";
        for (const auto& c : r.checks) {
            os << "  " << c.name;
            for (std::size_t i = c.name.size(); i < 16; ++i) os << ' ';
            os << " " << to_string(c.status) << "  " << c.detail << "\n";
        }
        ok += r.pass();
    }
    os << "verify-table: " << ok << " of " << rows.size() << " rows pass\n";
    return os.str();
}

std::string TableResult::format_json() const
{
    nlohmann::ordered_json out;
    out["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json jr;
        jr["id"] = r.id;
        jr["group"] = r.group;
        jr["pass"] = r.pass();
        jr["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : r.checks)
            jr["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
        out["rows"].push_back(std::move(jr));
    }
    out["pass"] = pass();
    return out.dump(2) + "\n";
}

TableResult verify_table(const RunConfig& cfg)
{
    cfg.validate();
    std::vector<TableRow> rows;
    for (auto& row : read_table_file(cfg.table_path())) {
        if (!cfg.big && row.q + 1 >= 50) continue;
        if (cfg.rows.empty() || std::find(cfg.rows.begin(), cfg.rows.end(), row.id) != cfg.rows.end())
            rows.push_back(std::move(row));
    }
    for (const auto& id : cfg.rows)
        if (std::none_of(rows.begin(), rows.end(), [&](const TableRow& r) { return r.id == id; }))
            throw DataError("no table row " + id);
    TableResult out;
    out.rows = parallel_map<RowResult>(rows.size(), cfg.jobs, [&](std::size_t i) { return verify_row(rows[i], cfg); });
    return out;
}

}  // namespace modgal

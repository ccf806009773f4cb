#include "modgal/factor/certificate.hpp"

#include "modgal/exact/mod_poly.hpp"
#include "modgal/factor/finite_factor.hpp"

#include <sstream>

namespace modgal {

std::vector<bool> subset_sums(const std::vector<int>& parts)
{
    int total = 0;
    for (int d : parts) total += d;
    std::vector<bool> can(static_cast<std::size_t>(total) + 1, false);
    can[0] = true;
    int reach = 0;
    for (int d : parts) {
        for (int s = reach; s >= 0; --s)
            if (can[static_cast<std::size_t>(s)]) can[static_cast<std::size_t>(s + d)] = true;
        reach += d;
    }
    return can;
}

DegreeSieve::DegreeSieve(int n) : n_(n), alive_(static_cast<std::size_t>(n) + 1, true)
{
    if (n < 1) throw DomainError("degree sieve needs positive degree");
}

bool DegreeSieve::add(const FactorPattern& pattern)
{
    if (pattern.total_degree() != n_) throw DomainError("pattern degree does not match the sieve");
    std::vector<int> parts;
    for (auto [d, m] : pattern.parts)
        for (int i = 0; i < m; ++i) parts.push_back(d);
    std::vector<bool> can = subset_sums(parts);
    bool shrank = false;
    for (std::size_t s = 0; s < alive_.size(); ++s)
        if (alive_[s] && !can[s]) {
            alive_[s] = false;
            shrank = true;
        }
    return shrank;
}

bool DegreeSieve::collapsed() const
{
    for (int s = 1; s < n_; ++s)
        if (alive_[static_cast<std::size_t>(s)]) return false;
    return true;
}

std::vector<int> DegreeSieve::remaining() const
{
    std::vector<int> out;
    for (int s = 0; s <= n_; ++s)
        if (alive_[static_cast<std::size_t>(s)]) out.push_back(s);
    return out;
}

IrredCertificate irreducibility_certificate(const IntPoly& a, std::uint64_t bound)
{
    if (a.is_zero() || a.degree() < 1) throw DomainError("irreducibility needs a nonconstant polynomial");
    if (!is_squarefree(a)) throw DomainError("irreducibility certificate needs a squarefree polynomial");
    const int n = a.degree();
    DegreeSieve sieve(n);
    IrredCertificate cert;
    if (n == 1) {
        cert.status = IrredCertificate::Status::certified;
        cert.remaining = sieve.remaining();
        return cert;
    }
    for (std::uint64_t p : primes_between(2, bound)) {
        ModPoly am(p, a);
        if (am.is_zero() || am.degree() != n || !is_squarefree(am)) continue;
        FactorPattern pat = squarefree_pattern(am);
        cert.patterns.emplace_back(p, pat);
        if (sieve.add(pat)) cert.witness_primes.push_back(p);
        if (sieve.collapsed()) break;
    }
    cert.remaining = sieve.remaining();
    cert.status = sieve.collapsed() ? IrredCertificate::Status::certified : IrredCertificate::Status::inconclusive;
    return cert;
}

std::string IrredCertificate::report() const
{
    std::ostringstream os;
    os << "verdict " << (certified() ? "certified" : "inconclusive") << "\n";
    os << "primes";
    for (const auto& [p, pat] : patterns) os << " " << p;
    os << "\n";
    for (const auto& [p, pat] : patterns) os << "p " << p << " pattern " << pat.to_string() << "\n";
    os << "witnesses";
    for (auto p : witness_primes) os << " " << p;
    os << "\n";
    os << "degrees";
    for (int d : remaining) os << " " << d;
    os << "\n";
    return os.str();
}

}  // namespace modgal

#include "modgal/modsym/modsym.hpp"

#include "modgal/factor/finite_factor.hpp"
#include "modgal/factor/rational_factor.hpp"
#include "modgal/ffield/fq_field.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace modgal {

namespace {

std::vector<Rational> to_rational(const IntPoly& g)
{
    std::vector<Rational> c;
    for (const auto& x : g.coeffs()) c.emplace_back(x);
    return c;
}

// Multiplication by a on Q[x]/(g): row i is a x^i.
QMat mult_matrix(const QVec& a, const IntPoly& g)
{
    const int d = g.degree();
    QMat M;
    QVec cur = a;
    for (int i = 0; i < d; ++i) {
        M.push_back(cur);
        QVec nxt(d, Rational(0));
        for (int k = 1; k < d; ++k) nxt[k] = cur[k - 1];
        for (int k = 0; k < d; ++k) nxt[k] -= cur[d - 1] * Rational(g[k]);
        cur = std::move(nxt);
    }
    return M;
}

std::uint64_t reduce_rational(const Rational& x, std::uint64_t ell)
{
    const PrimeField F(ell);
    const auto den = mod_u64(x.get_den(), ell);
    if (den == 0) throw DomainError("coefficient is not " + std::to_string(ell) + "-integral");
    return F.mul(mod_u64(x.get_num(), ell), F.inv(den));
}

ModPoly reduce_vector(const QVec& v, std::uint64_t ell)
{
    std::vector<std::uint64_t> c;
    for (const auto& x : v) c.push_back(reduce_rational(x, ell));
    return ModPoly(ell, c);
}

FqElement eval_at(const ModPoly& f, const FqElement& x)
{
    FqElement acc = x.field().zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        acc = acc * x + x.field().from_int(static_cast<std::int64_t>(f[i]));
    return acc;
}

Rational parse_rational(const std::string& tok)
{
    try {
        Rational r(tok);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw DataError("fixture: bad number '" + tok + "'");
    }
}

}  // namespace

QVec nf_mul(const QVec& a, const QVec& b, const IntPoly& g)
{
    return multiply(b, mult_matrix(a, g));
}

QVec nf_pow(const QVec& a, unsigned e, const IntPoly& g)
{
    QVec r(g.degree(), Rational(0));
    r[0] = 1;
    for (unsigned i = 0; i < e; ++i) r = nf_mul(r, a, g);
    return r;
}

IntPoly nf_minpoly(const QVec& a, const IntPoly& g)
{
    const IntPoly cp = integral_charpoly(mult_matrix(a, g));
    return squarefree_part(cp);
}

const QVec& EigenSystem::coeff(std::uint64_t n) const
{
    if (n == 0 || n >= a.size()) throw DomainError("coefficient index out of range");
    return a[n];
}

std::vector<EigenSystem> eigen_systems(const ModSymSpace& sp, std::uint64_t bound)
{
    if (!is_prime(sp.N)) throw DomainError("eigen systems are implemented for prime level only");
    if (bound < 2) throw DomainError("coefficient bound must be at least 2");
    const QMat& T2 = hecke_matrix(sp, 2);
    const IntPoly cp = integral_charpoly(T2);
    const QMat W = atkin_lehner(sp);
    std::vector<EigenSystem> out;
    for (const auto& [g, mult] : factor_over_q(cp)) {
        if (mult != 1) throw DomainError("charpoly(T2) is not squarefree at level " + std::to_string(sp.N));
        const int d = g.degree();
        const QMat K = left_kernel(evaluate(to_rational(g), T2));
        if (static_cast<int>(K.size()) != d) throw Error("eigenspace dimension mismatch");
        QMat krylov{K[0]};
        for (int i = 1; i < d; ++i) krylov.push_back(multiply(krylov.back(), T2));
        EigenSystem e;
        e.N = sp.N;
        e.a2_minpoly = g;
        e.a.assign(1, QVec());
        for (std::uint64_t n = 1; n <= bound; ++n) {
            QMat aug = krylov;
            aug.push_back(multiply(K[0], hecke_matrix(sp, n)));
            const QMat rel = left_kernel(aug);
            if (rel.size() != 1 || rel[0][d] == 0) throw Error("T_n does not preserve the eigenspace");
            QVec c(d);
            for (int k = 0; k < d; ++k) c[k] = -rel[0][k] / rel[0][d];
            e.a.push_back(std::move(c));
        }
        const QVec vw = multiply(K[0], W);
        QVec neg = K[0];
        for (auto& x : neg) x = -x;
        e.atkin_lehner = vw == K[0] ? 1 : (vw == neg ? -1 : 0);
        if (e.atkin_lehner == 0) throw Error("W_N is not a scalar on the eigenspace");
        out.push_back(std::move(e));
    }
    return out;
}

std::map<std::uint64_t, QVec> eigen_prime_coefficients(const ModSymSpace& sp, const EigenSystem& e,
                                                       std::uint64_t prime_bound)
{
    if (e.N != sp.N) throw DomainError("eigen system and space have different levels");
    const IntPoly& g = e.a2_minpoly;
    const int d = g.degree();
    const std::size_t dim = sp.ambient_dimension();
    // Column vectors w with g(T2) w = 0 span the dual of the eigenspace; for
    // a row x, x T_p T2^j w = sum_i c_i x T2^(i+j) w where a_p = sum c_i a_2^i.
    const QMat T2 = ambient_hecke_matrix(sp, 2);
    const QMat G = evaluate(to_rational(g), T2);
    QMat Gt(dim, QVec(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) Gt[i][j] = G[j][i];
    const QMat K = left_kernel(Gt);
    if (static_cast<int>(K.size()) != d) throw Error("dual eigenspace dimension mismatch");
    std::vector<QVec> w{K[0]};  // w_j = T2^j w_0 for j <= 2d - 2
    for (int j = 1; j <= 2 * d - 2; ++j) {
        QVec nxt(dim, Rational(0));
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                if (T2[r][c] != 0) nxt[r] += T2[r][c] * w.back()[c];
        w.push_back(std::move(nxt));
    }
    auto dot = [](const QVec& a, const QVec& b) {
        Rational s = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
        return s;
    };
    // Pick a basis symbol whose Hankel matrix s_(i+j) is invertible.
    std::size_t k0 = dim;
    QMat hankel;
    for (std::size_t k = 0; k < dim && k0 == dim; ++k) {
        QMat H(d, QVec(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) H[i][j] = w[i + j][k];
        if (static_cast<int>(rref(H).size()) == d) {
            k0 = k;
            hankel = std::move(H);
        }
    }
    if (k0 == dim) throw Error("no Manin symbol separates the eigenspace");

    std::map<std::uint64_t, QVec> out;
    for (std::uint64_t p : primes_between(2, prime_bound)) {
        if (sp.N % p == 0) continue;
        const QVec row = ambient_hecke_row(sp, k0, p);
        // Solve hankel c = y; hankel is symmetric.
        QMat aug = hankel;
        for (int j = 0; j < d; ++j) aug[j].push_back(dot(row, w[j]));
        std::vector<std::size_t> piv;
        const QMat R = rref(aug, &piv);
        if (static_cast<int>(R.size()) != d || piv.back() >= static_cast<std::size_t>(d))
            throw Error("inconsistent Hankel system at p = " + std::to_string(p));
        QVec c(d);
        for (int i = 0; i < d; ++i) c[i] = R[i][d];
        if (p <= e.bound() && c != e.coeff(p))
            throw Error("a_" + std::to_string(p) + " disagrees with the Hecke matrix computation");
        out.emplace(p, std::move(c));
    }
    return out;
}

bool satisfies_hasse_bound(const EigenSystem& e, std::uint64_t p)
{
    const IntPoly m = nf_minpoly(e.coeff(p), e.a2_minpoly);
    if (real_root_count(m) != m.degree()) return false;
    // Roots y = x^2 of m(x) m(-x), a polynomial in x^2.
    std::vector<Integer> neg(m.coeffs().begin(), m.coeffs().end());
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    const IntPoly prod = m * IntPoly(neg);
    std::vector<Integer> half;
    for (std::size_t i = 0; i < prod.coeffs().size(); i += 2) half.push_back(prod[i]);
    const IntPoly sq = squarefree_part(IntPoly(half));
    return real_roots_above(sq, Rational(static_cast<long>(4 * p))) == 0;
}

std::string CongruenceResult::report() const
{
    std::ostringstream os;
    if (!congruent) {
        os << "not congruent mod " << ell << " up to n = " << bound << " (" << pairs_tried
           << " residue field pairs tried)";
        return os.str();
    }
    os << "congruent mod " << ell << " up to n = " << bound << ": F_" << ell << "[x]/(" << residue1->to_string()
       << ") = F_" << ell << "[x]/(" << residue2->to_string() << ") via x ->";
    for (auto c : image) os << ' ' << c;
    return os.str();
}

CongruenceResult sturm_congruence(const EigenSystem& e1, const EigenSystem& e2, std::uint64_t ell,
                                  std::uint64_t bound)
{
    if (e1.N != e2.N) throw DomainError("congruence test needs systems of the same level");
    if (bound < sturm_bound(e1.N)) throw DomainError("bound is below the Sturm bound");
    if (e1.bound() < bound || e2.bound() < bound) throw DomainError("too few coefficients for the bound");
    if (!is_prime(ell)) throw DomainError("ell must be prime");
    CongruenceResult res;
    res.ell = ell;
    res.bound = bound;
    std::vector<ModPoly> r1, r2;
    for (std::uint64_t n = 1; n <= bound; ++n) {
        r1.push_back(reduce_vector(e1.coeff(n), ell));
        r2.push_back(reduce_vector(e2.coeff(n), ell));
    }
    const auto f1 = factor_mod_p(e1.a2_minpoly, ell).factors;
    const auto f2 = factor_mod_p(e2.a2_minpoly, ell).factors;
    for (const auto& g1 : f1)
        for (const auto& g2 : f2) {
            const int f = g1.factor.degree();
            if (g2.factor.degree() != f) continue;
            ++res.pairs_tried;
            const auto F = make_field(ell, f, g1.factor);
            if (F->order() > (1u << 22)) throw DomainError("residue field too large to search");
            std::vector<FqElement> a1;
            for (const auto& r : r1) a1.push_back(F->from_poly(r));
            for (const auto& beta : F->elements()) {
                if (!eval_at(g2.factor, beta).is_zero()) continue;
                bool ok = true;
                for (std::size_t n = 0; n < r2.size() && ok; ++n) ok = eval_at(r2[n], beta) == a1[n];
                if (!ok) continue;
                res.congruent = true;
                res.residue1 = g1.factor;
                res.residue2 = g2.factor;
                res.image = beta.coords();
                return res;
            }
        }
    return res;
}

const FormFixture::Entry* FormFixture::find(std::uint64_t p) const
{
    for (const auto& e : entries)
        if (e.p == p) return &e;
    return nullptr;
}

FormFixture parse_fixture(const std::string& text, const std::optional<IntPoly>& expected)
{
    FormFixture fx;
    std::istringstream is(text);
    std::string line;
    std::set<std::string> seen;
    struct RawEntry {
        std::uint64_t p;
        std::vector<std::string> a;
        int eps;
    };
    std::vector<RawEntry> raw;
    std::vector<std::string> zeta_tokens;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key != "p" && !seen.insert(key).second) throw DataError("fixture: duplicate key '" + key + "'");
        if (key == "N") {
            if (!(ls >> fx.N) || fx.N == 0) throw DataError("fixture: bad N");
        } else if (key == "k") {
            if (!(ls >> fx.k) || fx.k < 1) throw DataError("fixture: bad k");
        } else if (key == "a2_minpoly") {
            std::string rest;
            std::getline(ls, rest);
            try {
                fx.a2_minpoly = parse_poly(rest);
            } catch (const Error& e) {
                throw DataError(std::string("fixture: bad a2_minpoly: ") + e.what());
            }
        } else if (key == "eps_order") {
            if (!(ls >> fx.eps_order) || fx.eps_order < 1) throw DataError("fixture: bad eps_order");
        } else if (key == "zeta") {
            std::string tok;
            while (ls >> tok) zeta_tokens.push_back(tok);
        } else if (key == "note") {
            std::getline(ls, fx.note);
            if (!fx.note.empty() && fx.note[0] == ' ') fx.note.erase(0, 1);
        } else if (key == "p") {
            RawEntry e{};
            std::string tok;
            if (!(ls >> e.p) || !(ls >> tok) || tok != "a") throw DataError("fixture: malformed p line: " + line);
            bool have_eps = false;
            while (ls >> tok) {
                if (tok == "eps") {
                    if (!(ls >> e.eps)) throw DataError("fixture: bad eps in: " + line);
                    have_eps = true;
                    if (ls >> tok) throw DataError("fixture: trailing data in: " + line);
                    break;
                }
                e.a.push_back(tok);
            }
            if (!have_eps) throw DataError("fixture: p line without eps: " + line);
            raw.push_back(std::move(e));
        } else {
            throw DataError("fixture: unknown key '" + key + "'");
        }
        if (key != "a2_minpoly" && key != "note" && key != "zeta" && key != "p") {
            std::string extra;
            if (ls >> extra) throw DataError("fixture: trailing data after '" + key + "'");
        }
    }
    for (const char* k : {"N", "k", "a2_minpoly", "eps_order"})
        if (!seen.count(k)) throw DataError(std::string("fixture: missing ") + k);
    const IntPoly& g = fx.a2_minpoly;
    if (!g.is_monic() || g.degree() < 1) throw DataError("fixture: a2_minpoly must be monic of positive degree");
    const auto fac = factor_over_q(g);
    if (fac.size() != 1 || fac[0].second != 1) throw DataError("fixture: a2_minpoly is not irreducible");
    if (expected && g != *expected) throw DataError("fixture: a2_minpoly differs from the expected one");
    const auto d = static_cast<std::size_t>(g.degree());
    QVec one(d, Rational(0));
    one[0] = 1;
    if (!zeta_tokens.empty()) {
        if (zeta_tokens.size() != d) throw DataError("fixture: zeta has the wrong length");
        QVec z;
        for (const auto& t : zeta_tokens) z.push_back(parse_rational(t));
        const auto n = static_cast<unsigned>(fx.eps_order);
        if (nf_pow(z, n, g) != one) throw DataError("fixture: zeta^eps_order != 1");
        for (unsigned q = 2; q <= n; ++q)
            if (n % q == 0 && is_prime(q) && nf_pow(z, n / q, g) == one)
                throw DataError("fixture: zeta is not a primitive root of unity");
        fx.zeta = std::move(z);
    } else if (fx.eps_order > 2) {
        throw DataError("fixture: eps_order > 2 needs a zeta line");
    }
    std::set<std::uint64_t> ps;
    for (const auto& e : raw) {
        if (!is_prime(e.p)) throw DataError("fixture: " + std::to_string(e.p) + " is not prime");
        if (!ps.insert(e.p).second) throw DataError("fixture: duplicate prime " + std::to_string(e.p));
        if (e.a.size() != d) throw DataError("fixture: a_p has the wrong length at p = " + std::to_string(e.p));
        if (e.eps < 0 || e.eps >= fx.eps_order) throw DataError("fixture: eps exponent out of range");
        FormFixture::Entry en;
        en.p = e.p;
        en.eps = e.eps;
        for (const auto& t : e.a) en.a.push_back(parse_rational(t));
        fx.entries.push_back(std::move(en));
    }
    std::sort(fx.entries.begin(), fx.entries.end(),
              [](const FormFixture::Entry& x, const FormFixture::Entry& y) { return x.p < y.p; });
    if (const auto* a2 = fx.find(2)) {
        try {
            if (nf_minpoly(a2->a, g) != g) throw DataError("fixture: a_2 does not satisfy a2_minpoly");
        } catch (const DataError&) {
            throw;
        } catch (const Error&) {
            throw DataError("fixture: a_2 is not integral");
        }
    }
    return fx;
}

FormFixture load_fixture(const std::string& path, const std::optional<IntPoly>& expected)
{
    std::ifstream in(path);
    if (!in) throw DataError("cannot open fixture " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str(), expected);
}

std::string format_fixture(const FormFixture& f)
{
    std::ostringstream os;
    if (!f.note.empty()) os << "note " << f.note << "\n";
    std::string poly = format_poly(f.a2_minpoly);
    while (!poly.empty() && poly.back() == '\n') poly.pop_back();
    os << "N " << f.N << "\nk " << f.k << "\na2_minpoly " << poly << "\neps_order " << f.eps_order << "\n";
    if (f.zeta) {
        os << "zeta";
        for (const auto& x : *f.zeta) os << ' ' << x.get_str();
        os << "\n";
    }
    for (const auto& e : f.entries) {
        os << "p " << e.p << " a";
        for (const auto& x : e.a) os << ' ' << x.get_str();
        os << " eps " << e.eps << "\n";
    }
    return os.str();
}

}  // namespace modgal

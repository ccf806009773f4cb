#include "modgal/modsym/modsym.hpp"

#include "modgal/factor/rational_factor.hpp"

#include <numeric>

namespace modgal {

namespace {

long mod(long a, long n)
{
    const long r = a % n;
    return r < 0 ? r + n : r;
}

// x a + y b = g = gcd(a, b) >= 0
long xgcd(long a, long b, long& x, long& y)
{
    long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        const long q = a / b;
        std::tie(a, b) = std::pair(b, a - q * b);
        std::tie(x0, x1) = std::pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::pair(y1, y0 - q * y1);
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

struct Mat2i {
    long a, b, c, d;
};

// A matrix in SL2(Z) with bottom row congruent to (c, d) mod N.
Mat2i lift_to_sl2(long c, long d, long N)
{
    if (N == 1) return {1, 0, 0, 1};
    long c0 = c == 0 ? N : c;
    long d0 = d;
    while (std::gcd(c0, d0) != 1) d0 += N;
    long x, y;
    xgcd(d0, c0, x, y);  // x d0 + y c0 = 1
    return {x, -y, c0, d0};
}

struct Cusp {
    long p, q;
};

Cusp normalize_cusp(long p, long q)
{
    if (q == 0) return {1, 0};
    if (q < 0) {
        p = -p;
        q = -q;
    }
    const long g = std::gcd(p, q);
    return {p / g, q / g};
}

long cusp_s(const Cusp& c)
{
    if (c.q == 0) return 1;
    if (c.q == 1) return 0;
    long x, y;
    xgcd(mod(c.p, c.q), c.q, x, y);
    return mod(x, c.q);
}

// Gamma0(N) equivalence of reduced cusps.
bool cusps_equivalent(const Cusp& u, const Cusp& v, long N)
{
    const long g = std::gcd(u.q * v.q, N);
    return mod(cusp_s(u) * v.q - cusp_s(v) * u.q, g) == 0;
}

// Signed union-find for relations x_i = +- x_j.
struct SignedUnionFind {
    std::vector<std::size_t> parent;
    std::vector<int> sign;  // x_i = sign_i x_parent
    std::vector<bool> zero;

    explicit SignedUnionFind(std::size_t n) : parent(n), sign(n, 1), zero(n, false)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::pair<std::size_t, int> find(std::size_t i)
    {
        if (parent[i] == i) return {i, 1};
        auto [r, s] = find(parent[i]);
        parent[i] = r;
        sign[i] *= s;
        return {r, sign[i]};
    }

    void relate(std::size_t i, std::size_t j, int eps)  // x_i = eps x_j
    {
        auto [ri, si] = find(i);
        auto [rj, sj] = find(j);
        if (ri == rj) {
            if (si != eps * sj) zero[ri] = true;
            return;
        }
        parent[ri] = rj;
        sign[ri] = si * eps * sj;
        zero[rj] = zero[rj] || zero[ri];
    }
};

std::vector<Mat2i> merel_matrices(long n)
{
    std::vector<Mat2i> out;
    for (long a = 1; a <= n; ++a)
        for (long d = 1; a + d <= n + 1; ++d) {
            const long t = a * d - n;
            if (t < 0) continue;
            if (t == 0) {
                for (long c = 0; c < d; ++c) out.push_back({a, 0, c, d});
                for (long b = 1; b < a; ++b) out.push_back({a, b, 0, d});
                continue;
            }
            // c = t / b < d forces b > t / d
            for (long b = t / d + 1; b < a && b <= t; ++b)
                if (t % b == 0) out.push_back({a, b, t / b, d});
        }
    return out;
}

QVec symbol_vector(const ModSymSpace& sp, long c, long d)
{
    const long i = sp.p1.index(c, d);
    if (i < 0) return QVec(sp.ambient_dimension(), Rational(0));
    return sp.symbol_coords[static_cast<std::size_t>(i)];
}

void add_to(QVec& acc, const QVec& v, int s = 1)
{
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (v[k] != 0) acc[k] += s > 0 ? v[k] : -v[k];
}

}  // namespace

P1List::P1List(std::uint64_t N) : N_(N)
{
    if (N == 0) throw DomainError("level must be positive");
    const long n = static_cast<long>(N);
    table_.assign(static_cast<std::size_t>(n * n), -1);
    std::vector<long> units;
    for (long u = 0; u < n; ++u)
        if (std::gcd(u, n) == 1) units.push_back(u);
    for (long c = 0; c < n; ++c)
        for (long d = 0; d < n; ++d) {
            if (std::gcd(std::gcd(c, d), n) != 1 || table_[c * n + d] >= 0) continue;
            const long idx = static_cast<long>(reps_.size());
            reps_.emplace_back(c, d);
            for (long u : units) table_[(u * c % n) * n + u * d % n] = idx;
        }
}

long P1List::index(long c, long d) const
{
    const long n = static_cast<long>(N_);
    return table_[static_cast<std::size_t>(mod(c, n) * n + mod(d, n))];
}

std::uint64_t gamma0_index(std::uint64_t N)
{
    std::uint64_t num = N, m = N;
    for (std::uint64_t p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            num = num / p * (p + 1);
            while (m % p == 0) m /= p;
        }
    if (m > 1) num = num / m * (m + 1);
    return num;
}

int genus_x0(std::uint64_t N)
{
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2, m = N; m > 1; ++p) {
        if (p * p > m) p = m;
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    long nu2 = N % 4 == 0 ? 0 : 1, nu3 = N % 9 == 0 ? 0 : 1;
    for (auto p : primes) {
        const long m4 = p == 2 ? 0 : (p % 4 == 1 ? 1 : -1);
        const long m3 = p == 3 ? 0 : (p % 3 == 1 ? 1 : -1);
        nu2 *= 1 + m4;
        nu3 *= 1 + m3;
    }
    long cusps = 0;
    for (std::uint64_t d = 1; d <= N; ++d) {
        if (N % d) continue;
        const std::uint64_t g = std::gcd(d, N / d);
        std::uint64_t phi = g;
        for (auto p : primes)
            if (g % p == 0) phi = phi / p * (p - 1);
        cusps += static_cast<long>(phi);
    }
    // g = 1 + mu/12 - nu2/4 - nu3/3 - cusps/2
    const long twelve_g = 12 + static_cast<long>(gamma0_index(N)) - 3 * nu2 - 4 * nu3 - 6 * cusps;
    if (twelve_g % 12) throw Error("genus formula is not integral");
    return static_cast<int>(twelve_g / 12);
}

std::uint64_t sturm_bound(std::uint64_t N) { return (gamma0_index(N) + 5) / 6; }

ModSymSpace build_space(std::uint64_t N)
{
    ModSymSpace sp;
    sp.N = N;
    sp.p1 = P1List(N);
    const std::size_t m = sp.p1.size();
    auto idx = [&](long c, long d) { return static_cast<std::size_t>(sp.p1.index(c, d)); };

    SignedUnionFind uf(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto [c, d] = sp.p1.rep(i);
        uf.relate(i, idx(d, -c), -1);  // x + x S = 0
        uf.relate(i, idx(-c, d), 1);   // plus quotient: x = x eta
    }
    std::vector<long> class_of(m, -1);
    std::size_t nclass = 0;
    for (std::size_t i = 0; i < m; ++i) {
        auto [r, s] = uf.find(i);
        if (uf.zero[r]) continue;
        if (class_of[r] < 0) class_of[r] = static_cast<long>(nclass++);
    }
    auto class_vec = [&](std::size_t i, QVec& row) {
        auto [r, s] = uf.find(i);
        if (uf.zero[r]) return;
        row[static_cast<std::size_t>(class_of[r])] += s;
    };
    QMat rel;
    for (std::size_t i = 0; i < m; ++i) {
        const auto [c, d] = sp.p1.rep(i);
        QVec row(nclass, Rational(0));
        class_vec(i, row);
        class_vec(idx(d, -c - d), row);   // x tau
        class_vec(idx(-c - d, c), row);   // x tau^2
        if (!is_zero(row)) rel.push_back(std::move(row));
    }
    std::vector<std::size_t> piv;
    const QMat R = rref(rel, &piv);
    std::vector<long> pivot_row(nclass, -1), free_index(nclass, -1);
    for (std::size_t i = 0; i < piv.size(); ++i) pivot_row[piv[i]] = static_cast<long>(i);
    std::size_t dim = 0;
    for (std::size_t k = 0; k < nclass; ++k)
        if (pivot_row[k] < 0) free_index[k] = static_cast<long>(dim++);
    std::vector<QVec> class_coords(nclass, QVec(dim, Rational(0)));
    for (std::size_t k = 0; k < nclass; ++k) {
        if (pivot_row[k] < 0) {
            class_coords[k][static_cast<std::size_t>(free_index[k])] = 1;
            continue;
        }
        const auto& row = R[static_cast<std::size_t>(pivot_row[k])];
        for (std::size_t j = 0; j < nclass; ++j)
            if (free_index[j] >= 0 && row[j] != 0) class_coords[k][static_cast<std::size_t>(free_index[j])] = -row[j];
    }
    sp.symbol_coords.assign(m, QVec(dim, Rational(0)));
    sp.basis_rep.assign(dim, {0, 0});
    for (std::size_t i = 0; i < m; ++i) {
        auto [r, s] = uf.find(i);
        if (uf.zero[r]) continue;
        const auto k = static_cast<std::size_t>(class_of[r]);
        for (std::size_t j = 0; j < dim; ++j) sp.symbol_coords[i][j] = s * class_coords[k][j];
        if (free_index[k] >= 0 && sp.basis_rep[static_cast<std::size_t>(free_index[k])].second == 0)
            sp.basis_rep[static_cast<std::size_t>(free_index[k])] = {i, s};
    }

    // Boundary map to cusp classes modulo the star involution.
    const long n = static_cast<long>(N);
    std::vector<Cusp> cusps;
    auto cusp_class = [&](long p, long q) {
        const Cusp u = normalize_cusp(p, q), v = normalize_cusp(-p, q);
        for (std::size_t k = 0; k < cusps.size(); ++k)
            if (cusps_equivalent(u, cusps[k], n) || cusps_equivalent(v, cusps[k], n)) return k;
        cusps.push_back(u);
        return cusps.size() - 1;
    };
    std::vector<std::vector<std::pair<std::size_t, int>>> bd(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const auto [i, s] = sp.basis_rep[k];
        const auto [c, d] = sp.p1.rep(i);
        const Mat2i g = lift_to_sl2(c, d, n);
        bd[k].emplace_back(cusp_class(g.a, g.c), s);
        bd[k].emplace_back(cusp_class(g.b, g.d), -s);
    }
    sp.cusp_count = cusps.size();
    QMat D(dim, QVec(cusps.size(), Rational(0)));
    for (std::size_t k = 0; k < dim; ++k)
        for (auto [cl, s] : bd[k]) D[k][cl] += s;
    sp.cuspidal = left_kernel(D);
    sp.cuspidal = rref(sp.cuspidal, &sp.cusp_pivots);
    const int g = genus_x0(N);
    if (static_cast<int>(sp.dimension()) != g)
        throw Error("cuspidal dimension " + std::to_string(sp.dimension()) + " differs from genus " +
                    std::to_string(g) + " at level " + std::to_string(N));
    return sp;
}

QVec modular_symbol_zero_to(const ModSymSpace& sp, const Integer& p0, const Integer& q0)
{
    QVec acc(sp.ambient_dimension(), Rational(0));
    add_to(acc, symbol_vector(sp, 0, 1));  // {0, oo}
    if (q0 == 0) return acc;
    // Convergents p_k / q_k of p/q; {0, p/q} = sum over k >= -1 of
    // {p_{k-1}/q_{k-1}, p_k/q_k}, the k-th term being the Manin symbol
    // ((-1)^(k-1) q_k : q_{k-1}).
    Integer p = p0, q = q0;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    Integer pm2 = 0, qm2 = 1, pm1 = 1, qm1 = 0;
    int k = 0;
    while (q != 0) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        const Integer pk = a * pm1 + pm2, qk = a * qm1 + qm2;
        const Integer r = p - a * q;
        p = q;
        q = r;
        const long sgn = (k % 2 == 0) ? -1 : 1;  // (-1)^(k-1)
        const long n = static_cast<long>(sp.N);
        const long c = mod_u64(Integer(sgn * qk), static_cast<std::uint64_t>(n));
        const long d = mod_u64(qm1, static_cast<std::uint64_t>(n));
        add_to(acc, symbol_vector(sp, c, d));
        pm2 = pm1;
        qm2 = qm1;
        pm1 = pk;
        qm1 = qk;
        ++k;
    }
    return acc;
}

QVec ambient_hecke_row(const ModSymSpace& sp, std::size_t k, std::uint64_t n)
{
    if (n == 0) throw DomainError("T_0 is undefined");
    QVec row(sp.ambient_dimension(), Rational(0));
    const auto [i, s] = sp.basis_rep.at(k);
    const auto [c, d] = sp.p1.rep(i);
    for (const auto& M : merel_matrices(static_cast<long>(n)))
        add_to(row, symbol_vector(sp, c * M.a + d * M.c, c * M.b + d * M.d), s);
    return row;
}

QMat ambient_hecke_matrix(const ModSymSpace& sp, std::uint64_t n)
{
    if (n == 0) throw DomainError("T_0 is undefined");
    const std::size_t dim = sp.ambient_dimension();
    const auto mats = merel_matrices(static_cast<long>(n));
    QMat T(dim, QVec(dim, Rational(0)));
    for (std::size_t k = 0; k < dim; ++k) {
        const auto [i, s] = sp.basis_rep[k];
        const auto [c, d] = sp.p1.rep(i);
        for (const auto& M : mats) add_to(T[k], symbol_vector(sp, c * M.a + d * M.c, c * M.b + d * M.d), s);
    }
    return T;
}

const QMat& hecke_matrix(const ModSymSpace& sp, std::uint64_t n)
{
    if (n == 0) throw DomainError("T_0 is undefined");
    if (auto it = sp.hecke_cache.find(n); it != sp.hecke_cache.end()) return it->second;
    QMat TS = restrict_to(ambient_hecke_matrix(sp, n), sp.cuspidal, sp.cusp_pivots);
    for (const auto& [m, Tm] : sp.hecke_cache)
        if (multiply(TS, Tm) != multiply(Tm, TS))
            throw Error("T_" + std::to_string(n) + " does not commute with T_" + std::to_string(m));
    return sp.hecke_cache.emplace(n, std::move(TS)).first->second;
}

QMat atkin_lehner(const ModSymSpace& sp)
{
    const std::size_t dim = sp.ambient_dimension();
    const long N = static_cast<long>(sp.N);
    QMat W(dim, QVec(dim, Rational(0)));
    for (std::size_t k = 0; k < dim; ++k) {
        const auto [i, s] = sp.basis_rep[k];
        const auto [c, d] = sp.p1.rep(i);
        const Mat2i g = lift_to_sl2(c, d, N);
        // g{0, oo} = {b/d, a/c}; W(z) = -1/(N z)
        const QVec to_beta = modular_symbol_zero_to(sp, Integer(-g.c), Integer(N * g.a));
        const QVec to_alpha = modular_symbol_zero_to(sp, Integer(-g.d), Integer(N * g.b));
        add_to(W[k], to_beta, s);
        add_to(W[k], to_alpha, -s);
    }
    QMat WS = restrict_to(W, sp.cuspidal, sp.cusp_pivots);
    if (multiply(WS, WS) != identity_matrix(WS.size())) throw Error("W_N is not an involution");
    return WS;
}

}  // namespace modgal

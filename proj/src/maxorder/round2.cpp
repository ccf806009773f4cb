#include "modgal/maxorder/order.hpp"

#include "modgal/exact/mat_mod.hpp"
#include "modgal/exact/mod_poly.hpp"
#include "modgal/factor/finite_factor.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace modgal {

namespace {

using Mat = std::vector<std::vector<Integer>>;
using Vec = std::vector<std::uint64_t>;
using u128 = unsigned __int128;

Integer ppow(std::uint64_t p, unsigned e) { return pow(Integer(static_cast<unsigned long>(p)), e); }

Integer mod_pos(const Integer& x, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Hermite form of the lattice spanned by rows and p^a Z^n, computed mod p^a.
Mat hnf_mod(const Mat& rows, int n, std::uint64_t p, unsigned a)
{
    const Integer D = ppow(p, a);
    Mat work;
    for (const auto& r : rows) {
        std::vector<Integer> v(n);
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
            v[j] = mod_pos(r[j], D);
            nonzero = nonzero || v[j] != 0;
        }
        if (nonzero) work.push_back(std::move(v));
    }
    for (int j = 0; j < n; ++j) {
        std::vector<Integer> v(n, Integer(0));
        v[j] = D;
        work.push_back(std::move(v));
    }
    Mat out(n);
    for (int j = 0; j < n; ++j) {
        std::size_t best = work.size();
        int bestv = INT_MAX;
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (work[r][j] == 0) continue;
            const int v = valuation(work[r][j], p);
            if (v < bestv) {
                bestv = v;
                best = r;
            }
        }
        if (best == work.size()) throw Error("hnf_mod: missing pivot");
        std::vector<Integer> piv = std::move(work[best]);
        work.erase(work.begin() + static_cast<long>(best));
        const Integer pv = ppow(p, static_cast<unsigned>(bestv));
        if (static_cast<unsigned>(bestv) < a) {
            Integer u = mod_pos(piv[j] / pv, D), ui;
            mpz_invert(ui.get_mpz_t(), u.get_mpz_t(), D.get_mpz_t());
            for (int c = j + 1; c < n; ++c) piv[c] = mod_pos(piv[c] * ui, D);
            piv[j] = pv;
        }
        for (auto& r : work) {
            if (r[j] == 0) continue;
            const Integer k = r[j] / pv;
            r[j] = 0;
            for (int c = j + 1; c < n; ++c)
                if (piv[c] != 0) r[c] = mod_pos(r[c] - k * piv[c], D);
        }
        std::erase_if(work, [](const std::vector<Integer>& r) {
            return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
        });
        out[j] = std::move(piv);
    }
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), out[i][j].get_mpz_t(), out[j][j].get_mpz_t());
            if (q == 0) continue;
            for (int c = j; c < n; ++c) out[i][c] -= q * out[j][c];
        }
    return out;
}

// X with X L = s I for upper triangular L; throws unless integral.
Mat scaled_inverse(const Mat& L, const Integer& s)
{
    const int n = static_cast<int>(L.size());
    Mat X(n, std::vector<Integer>(n, Integer(0)));
    for (int i = 0; i < n; ++i) {
        if (!mpz_divisible_p(s.get_mpz_t(), L[i][i].get_mpz_t())) throw Error("scaled_inverse: not integral");
        X[i][i] = s / L[i][i];
        for (int j = i + 1; j < n; ++j) {
            Integer acc = 0;
            for (int k = i; k < j; ++k)
                if (X[i][k] != 0 && L[k][j] != 0) acc += X[i][k] * L[k][j];
            if (!mpz_divisible_p(acc.get_mpz_t(), L[j][j].get_mpz_t()))
                throw Error("scaled_inverse: not integral");
            X[i][j] = -acc / L[j][j];
        }
    }
    return X;
}

// x^k mod (P, M) for k < 2n - 1.
Mat reduced_powers(const IntPoly& P, const Integer& M)
{
    const int n = P.degree();
    Mat pw(std::max(2 * n - 1, 1), std::vector<Integer>(n, Integer(0)));
    pw[0][0] = 1;
    for (int k = 1; k < 2 * n - 1; ++k) {
        const Integer top = pw[k - 1][n - 1];
        for (int j = n - 1; j >= 1; --j) pw[k][j] = pw[k - 1][j - 1];
        pw[k][0] = 0;
        if (top != 0)
            for (int j = 0; j < n; ++j) pw[k][j] -= top * P[j];
        for (auto& x : pw[k]) x = mod_pos(x, M);
    }
    return pw;
}

IntPoly lift(const ModPoly& f)
{
    std::vector<Integer> c;
    for (auto x : f.coeffs()) c.emplace_back(static_cast<unsigned long>(x));
    return IntPoly(std::move(c));
}

// Finite algebra over Z/qZ given by structure constants.
struct Algebra {
    int n;
    std::uint64_t q;
    Vec c;

    Vec mul(const Vec& x, const Vec& y) const
    {
        std::vector<u128> acc(n, 0);
        for (int i = 0; i < n; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (!y[j]) continue;
                const std::uint64_t s = static_cast<std::uint64_t>(static_cast<u128>(x[i]) * y[j] % q);
                const std::uint64_t* row = &c[(static_cast<std::size_t>(i) * n + j) * n];
                for (int k = 0; k < n; ++k)
                    if (row[k]) acc[k] += static_cast<u128>(s) * row[k] % q;
            }
        }
        Vec out(n);
        for (int k = 0; k < n; ++k) out[k] = static_cast<std::uint64_t>(acc[k] % q);
        return out;
    }

    Vec pow(Vec x, std::uint64_t e, const Vec& one) const
    {
        Vec r = one;
        while (e) {
            if (e & 1) r = mul(r, x);
            e >>= 1;
            if (e) x = mul(x, x);
        }
        return r;
    }

    Vec basis(int i) const
    {
        Vec v(n, 0);
        v[i] = 1;
        return v;
    }

    // Matrix of y -> x y: row j is x w_j.
    MatModP mult_matrix(const Vec& x) const
    {
        MatModP m(n);
        for (int j = 0; j < n; ++j) m[j] = mul(x, basis(j));
        return m;
    }
};

Algebra algebra(const OrderBasis& O, unsigned precision)
{
    const auto sc = structure_constants(O, precision);
    Algebra A{O.degree(), 1, {}};
    for (unsigned i = 0; i < precision; ++i) A.q *= O.p;
    A.c.reserve(sc.size());
    for (const auto& x : sc) A.c.push_back(mod_u64(x, A.q));
    return A;
}

Vec one_coords(const OrderBasis& O)
{
    const Mat X = scaled_inverse(O.L, ppow(O.p, O.a));
    Vec v(O.degree());
    for (int j = 0; j < O.degree(); ++j) v[j] = mod_u64(X[0][j], O.p);
    return v;
}

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

unsigned frobenius_depth(std::uint64_t p, int n)
{
    unsigned j = 1;
    for (std::uint64_t q = p; q < static_cast<std::uint64_t>(n); q *= p) ++j;
    return j;
}

// Matrix of x -> x^(p^j) with j minimal such that p^j >= n.
MatModP deep_frobenius(const Algebra& A, const Vec& one)
{
    const std::uint64_t p = A.q;
    MatModP fr(A.n);
    for (int i = 0; i < A.n; ++i) fr[i] = A.pow(A.basis(i), p, one);
    MatModP acc = fr;
    for (unsigned k = 1; k < frobenius_depth(p, A.n); ++k) acc = multiply(acc, fr, p);
    return acc;
}

Mat to_integer(const MatModP& m)
{
    Mat out;
    for (const auto& r : m) {
        std::vector<Integer> v;
        for (auto x : r) v.emplace_back(static_cast<unsigned long>(x));
        out.push_back(std::move(v));
    }
    return out;
}

void normalize(OrderBasis& O)
{
    const Integer P(static_cast<unsigned long>(O.p));
    while (O.a > 0) {
        for (const auto& r : O.L)
            for (const auto& x : r)
                if (!mpz_divisible_p(x.get_mpz_t(), P.get_mpz_t())) return;
        for (auto& r : O.L)
            for (auto& x : r) x /= P;
        --O.a;
    }
}

// One Round 2 step; returns false when O is already p-maximal.
bool enlarge(OrderBasis& O)
{
    const int n = O.degree();
    const std::uint64_t p = O.p;
    const Algebra A2 = algebra(O, 2);
    Algebra A1{n, p, A2.c};
    for (auto& x : A1.c) x %= p;
    const Vec one = one_coords(O);

    const MatModP radical = left_kernel(deep_frobenius(A1, one), p);
    const Mat T = hnf_mod(to_integer(radical), n, p, 1);
    const Mat Yi = scaled_inverse(T, Integer(static_cast<unsigned long>(p)));
    const std::uint64_t q = p * p;
    std::vector<Vec> Y(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Y[i][j] = mod_u64(Yi[i][j], q);
    std::vector<Vec> t(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = mod_u64(T[i][j], q);

    MatModP rows(n, Vec(static_cast<std::size_t>(n) * n));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            // O-coordinates of w_i t_k mod p^2
            std::vector<u128> v(n, 0);
            for (int m = 0; m < n; ++m) {
                if (!t[k][m]) continue;
                const std::uint64_t* row = &A2.c[(static_cast<std::size_t>(i) * n + m) * n];
                for (int c = 0; c < n; ++c)
                    if (row[c]) v[c] += static_cast<u128>(t[k][m]) * row[c] % q;
            }
            Vec vr(n);
            for (int c = 0; c < n; ++c) vr[c] = static_cast<std::uint64_t>(v[c] % q);
            for (int c = 0; c < n; ++c) {
                u128 acc = 0;
                for (int m = 0; m <= c; ++m)
                    if (vr[m] && Y[m][c]) acc = (acc + static_cast<u128>(vr[m]) * Y[m][c]) % q;
                const auto w = static_cast<std::uint64_t>(acc);
                if (w % p) throw Error("round 2: radical not closed under the order");
                rows[i][static_cast<std::size_t>(k) * n + c] = w / p;
            }
        }
    }
    const MatModP K = left_kernel(rows, p);
    if (K.empty()) return false;

    Mat gens;
    const Integer P(static_cast<unsigned long>(p));
    for (const auto& a : K) {
        std::vector<Integer> v(n, Integer(0));
        for (int i = 0; i < n; ++i)
            if (a[i])
                for (int j = 0; j < n; ++j) v[j] += Integer(static_cast<unsigned long>(a[i])) * O.L[i][j];
        gens.push_back(std::move(v));
    }
    for (const auto& r : O.L) {
        std::vector<Integer> v;
        for (const auto& x : r) v.push_back(x * P);
        gens.push_back(std::move(v));
    }
    O.a += 1;
    O.L = hnf_mod(gens, n, p, O.a);
    normalize(O);
    return true;
}

}  // namespace

int OrderBasis::index_valuation() const
{
    int v = degree() * static_cast<int>(a);
    for (std::size_t i = 0; i < L.size(); ++i) v -= valuation(L[i][i], p);
    return v;
}

OrderBasis OrderBasis::equation_order(const IntPoly& P, std::uint64_t p)
{
    if (!P.is_monic()) throw DomainError("equation order needs a monic polynomial");
    if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
    OrderBasis O;
    O.poly = P;
    O.p = p;
    const int n = P.degree();
    O.L.assign(n, std::vector<Integer>(n, Integer(0)));
    for (int i = 0; i < n; ++i) O.L[i][i] = 1;
    return O;
}

std::string OrderBasis::serialize() const
{
    std::ostringstream os;
    os << "order\n";
    os << "prime " << p << "\n";
    os << "denominator_exponent " << a << "\n";
    os << "index_valuation " << index_valuation() << "\n";
    os << "poly " << format_poly(poly) << "\n";
    for (const auto& r : L) {
        os << "row";
        for (const auto& x : r) os << ' ' << x.get_str();
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

OrderBasis OrderBasis::deserialize(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    OrderBasis O;
    bool header = false, done = false;
    int index = -1;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "order") {
            header = true;
        } else if (key == "prime") {
            ls >> O.p;
        } else if (key == "denominator_exponent") {
            ls >> O.a;
        } else if (key == "index_valuation") {
            ls >> index;
        } else if (key == "poly") {
            std::string rest;
            std::getline(ls, rest);
            O.poly = parse_poly(rest);
        } else if (key == "row") {
            std::vector<Integer> r;
            std::string tok;
            while (ls >> tok) r.emplace_back(tok);
            O.L.push_back(std::move(r));
        } else if (key == "end") {
            done = true;
            break;
        } else {
            throw DataError("order: unknown key '" + key + "'");
        }
        if (ls.fail() && key != "row" && key != "poly") throw DataError("order: bad value for '" + key + "'");
    }
    if (!header || !done || O.p == 0) throw DataError("order: incomplete record");
    const int n = O.poly.is_zero() ? -1 : O.poly.degree();
    if (n < 1 || static_cast<int>(O.L.size()) != n) throw DataError("order: row count does not match degree");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(O.L[i].size()) != n) throw DataError("order: ragged row");
        for (int j = 0; j < i; ++j)
            if (O.L[i][j] != 0) throw DataError("order: basis is not upper triangular");
        if (O.L[i][i] <= 0) throw DataError("order: non-positive pivot");
    }
    if (index >= 0 && index != O.index_valuation()) throw DataError("order: index_valuation mismatch");
    return O;
}

std::vector<Integer> structure_constants(const OrderBasis& O, unsigned precision)
{
    const int n = O.degree();
    const Integer M = ppow(O.p, 2 * O.a + precision);
    const Integer low = ppow(O.p, 2 * O.a);
    const Integer mod = ppow(O.p, precision);
    const Mat pw = reduced_powers(O.poly, M);
    const Mat X = scaled_inverse(O.L, ppow(O.p, O.a));
    std::vector<Integer> c(static_cast<std::size_t>(n) * n * n);
    std::vector<Integer> prod(std::max(2 * n - 1, 1)), y(n), z(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::fill(prod.begin(), prod.end(), Integer(0));
            for (int u = i; u < n; ++u) {
                if (O.L[i][u] == 0) continue;
                for (int v = j; v < n; ++v)
                    if (O.L[j][v] != 0) prod[u + v] += O.L[i][u] * O.L[j][v];
            }
            std::fill(y.begin(), y.end(), Integer(0));
            for (int k = 0; k < 2 * n - 1; ++k) {
                if (prod[k] == 0) continue;
                const Integer pk = mod_pos(prod[k], M);
                for (int m = 0; m < n; ++m)
                    if (pw[k][m] != 0) y[m] += pk * pw[k][m];
            }
            for (auto& x : y) x = mod_pos(x, M);
            for (int col = 0; col < n; ++col) {
                Integer acc = 0;
                for (int m = 0; m <= col; ++m)
                    if (y[m] != 0 && X[m][col] != 0) acc += y[m] * X[m][col];
                acc = mod_pos(acc, M);
                if (!mpz_divisible_p(acc.get_mpz_t(), low.get_mpz_t()))
                    throw Error("structure constants: product leaves the order");
                const Integer v = mod_pos(acc / low, mod);
                c[(static_cast<std::size_t>(i) * n + j) * n + col] = v;
                c[(static_cast<std::size_t>(j) * n + i) * n + col] = v;
            }
        }
    return c;
}

DedekindResult dedekind_test(const IntPoly& P, std::uint64_t p)
{
    if (!P.is_monic()) throw DomainError("Dedekind test needs a monic polynomial");
    DedekindResult out;
    out.order = OrderBasis::equation_order(P, p);
    const ModPoly Pm(p, P);
    const auto fac = factor(Pm);
    ModPoly g = ModPoly::constant(p, 1), h = ModPoly::constant(p, 1);
    for (const auto& f : fac.factors) {
        g = g * f.factor;
        for (int i = 1; i < f.multiplicity; ++i) h = h * f.factor;
    }
    const IntPoly F = (lift(g) * lift(h) - P).divide_exact(Integer(static_cast<unsigned long>(p)));
    const ModPoly T = gcd(gcd(ModPoly(p, F), g), h);
    if (T.degree() == 0) {
        out.maximal = true;
        return out;
    }
    const ModPoly U = Pm / T;
    const int n = P.degree();
    Mat gens;
    ModPoly xk = U;
    for (int k = 0; k < n; ++k) {
        std::vector<Integer> v(n, Integer(0));
        for (int j = 0; j < n; ++j) v[j] = Integer(static_cast<unsigned long>(xk[j]));
        gens.push_back(std::move(v));
        xk = (ModPoly::x(p) * xk) % Pm;
    }
    out.order.a = 1;
    out.order.L = hnf_mod(gens, n, p, 1);
    normalize(out.order);
    if (out.order.index_valuation() != T.degree()) throw Error("Dedekind enlargement has the wrong index");
    return out;
}

OrderBasis p_maximal_order(const IntPoly& P, std::uint64_t p)
{
    DedekindResult d = dedekind_test(P, p);
    if (d.maximal) return d.order;
    OrderBasis O = std::move(d.order);
    while (enlarge(O)) {
    }
    return O;
}

int disc_valuation(const IntPoly& P, std::uint64_t p)
{
    const IntPoly Q = P.is_monic() ? P : monic_transform(P);
    const Integer D = discriminant(Q);
    if (D == 0) throw DomainError("polynomial is not squarefree");
    return valuation(D, p) - 2 * p_maximal_order(Q, p).index_valuation();
}

std::vector<PrimeComponent> prime_components(const OrderBasis& O)
{
    const int n = O.degree();
    const std::uint64_t p = O.p;
    const Algebra A = algebra(O, 1);
    const Vec one = one_coords(O);
    const MatModP deep = deep_frobenius(A, one);
    const MatModP radical = left_kernel(deep, p);
    const MatModP S = rref(deep, p);

    MatModP fr(n);
    for (int i = 0; i < n; ++i) {
        fr[i] = A.pow(A.basis(i), p, one);
        fr[i][i] = (fr[i][i] + p - 1) % p;
    }
    MatModP B;
    for (const auto& b : left_kernel(multiply(S, fr, p), p)) B.push_back(multiply(MatModP{b}, S, p)[0]);
    const std::size_t r = B.size();

    // Split 1 into primitive idempotents using the eigenvalues of each b in B.
    std::vector<Vec> idem{one};
    for (const auto& b : B) {
        if (idem.size() == r) break;
        MatModP krylov{one};
        Vec cur = one;
        MatModP rel;
        while (true) {
            cur = A.mul(cur, b);
            krylov.push_back(cur);
            rel = left_kernel(krylov, p);
            if (!rel.empty()) break;
        }
        // rel has a single vector with a nonzero last entry: the minimal polynomial.
        ModPoly minpoly(p, rel[0]);
        std::vector<std::uint64_t> roots;
        for (const auto& f : factor(minpoly).factors) {
            if (f.factor.degree() != 1) throw Error("splitting: Berlekamp element with a non-rational eigenvalue");
            roots.push_back((p - f.factor[0]) % p);
        }
        std::vector<Vec> next;
        for (const auto& e : idem)
            for (auto c : roots) {
                Vec z = b;
                for (int k = 0; k < n; ++k) z[k] = (z[k] + (p - c) * one[k]) % p;
                const Vec zp = A.pow(z, p - 1, one);
                Vec piece(n);
                for (int k = 0; k < n; ++k) piece[k] = (one[k] + p - zp[k]) % p;
                piece = A.mul(e, piece);
                if (!is_zero(piece)) next.push_back(std::move(piece));
            }
        idem = std::move(next);
    }
    if (idem.size() != r) throw Error("splitting: idempotent count does not match the Berlekamp dimension");

    std::vector<PrimeComponent> out;
    int total = 0;
    for (const auto& e : idem) {
        PrimeComponent comp;
        MatModP eS, eA, eR;
        for (const auto& s : S) eS.push_back(A.mul(e, s));
        for (int i = 0; i < n; ++i) eA.push_back(A.mul(e, A.basis(i)));
        for (const auto& x : radical) eR.push_back(A.mul(e, x));
        comp.f = static_cast<int>(rank(eS, p));
        const int dim = static_cast<int>(rank(eA, p));
        if (comp.f == 0 || dim % comp.f) throw Error("splitting: inconsistent component dimensions");
        comp.e = dim / comp.f;
        comp.filtration.push_back(dim);
        MatModP level = rref(eR, p);
        std::vector<MatModP> gens;
        for (const auto& g : level) gens.push_back(A.mult_matrix(g));
        while (!level.empty()) {
            comp.filtration.push_back(static_cast<int>(level.size()));
            MatModP nxt;
            for (const auto& G : gens) {
                MatModP prod = multiply(level, G, p);
                nxt.insert(nxt.end(), prod.begin(), prod.end());
            }
            level = rref(std::move(nxt), p);
        }
        comp.filtration.push_back(0);
        for (int k = 0; k <= comp.e; ++k)
            if (k >= static_cast<int>(comp.filtration.size()) || comp.filtration[k] != (comp.e - k) * comp.f)
                throw Error("splitting: radical filtration disagrees with e f");
        if (static_cast<int>(comp.filtration.size()) != comp.e + 1)
            throw Error("splitting: radical filtration has the wrong length");
        total += comp.e * comp.f;
        out.push_back(std::move(comp));
    }
    if (total != n) throw Error("splitting: sum of e f differs from the degree");
    std::sort(out.begin(), out.end(), [](const PrimeComponent& x, const PrimeComponent& y) {
        return std::pair(x.f, x.e) < std::pair(y.f, y.e);
    });
    return out;
}

SplittingType prime_splitting(const OrderBasis& O)
{
    std::vector<std::pair<int, int>> parts;
    for (const auto& c : prime_components(O)) parts.emplace_back(c.f, c.e);
    return SplittingType(std::move(parts));
}

SplittingType prime_splitting(const IntPoly& P, std::uint64_t p)
{
    const IntPoly Q = P.is_monic() ? P : monic_transform(P);
    return prime_splitting(p_maximal_order(Q, p));
}

}  // namespace modgal

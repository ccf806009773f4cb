#include "modgal/exact/mod_poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace modgal {

PrimeField::PrimeField(std::uint64_t p) : p_(p)
{
    if (p < 2 || p >= (1ull << 31)) throw DomainError("prime field modulus out of range");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const
{
    std::uint64_t r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const
{
    a %= p_;
    if (a == 0) throw DomainError("inverse of zero in F_p");
    // extended Euclid on signed 64-bit values
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw DomainError("element not invertible mod p");
    return reduce(t);
}

std::uint64_t PrimeField::reduce(std::int64_t a) const
{
    std::int64_t m = a % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(m);
}

// ---------------------------------------------------------------- ModPoly

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : field_(p), c_(std::move(coeffs))
{
    for (auto& c : c_) c %= p;
    trim();
}

ModPoly::ModPoly(std::uint64_t p, const IntPoly& a) : field_(p)
{
    c_.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) c_.push_back(mod_u64(c, p));
    trim();
}

void ModPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int ModPoly::degree() const
{
    if (c_.empty()) throw DomainError("degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

std::uint64_t ModPoly::lead() const
{
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

std::uint64_t ModPoly::eval(std::uint64_t x) const
{
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
}

ModPoly ModPoly::monic() const
{
    if (is_zero()) return *this;
    std::uint64_t li = field_.inv(lead());
    ModPoly r(*this);
    for (auto& c : r.c_) c = field_.mul(c, li);
    return r;
}

ModPoly ModPoly::derivative() const
{
    ModPoly r(modulus());
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = field_.mul(c_[i], i % modulus());
    r.trim();
    return r;
}

ModPoly operator+(const ModPoly& a, const ModPoly& b)
{
    ModPoly r(a.modulus());
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.field_.add(a[i], b[i]);
    r.trim();
    return r;
}

ModPoly operator-(const ModPoly& a, const ModPoly& b)
{
    ModPoly r(a.modulus());
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.field_.sub(a[i], b[i]);
    r.trim();
    return r;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b)
{
    ModPoly r(a.modulus());
    if (a.is_zero() || b.is_zero()) return r;
    const std::uint64_t p = a.modulus();
    const std::size_t na = a.c_.size(), nb = b.c_.size();
    // products are < 2^62; accumulate as many as fit in 64 bits before reducing
    const std::uint64_t sq = (p - 1) * (p - 1);
    const std::uint64_t batch = sq == 0 ? std::numeric_limits<std::uint64_t>::max() : std::numeric_limits<std::uint64_t>::max() / sq;
    std::vector<std::uint64_t> acc(na + nb - 1, 0);
    if (batch >= na) {
        for (std::size_t i = 0; i < na; ++i) {
            const std::uint64_t ai = a.c_[i];
            if (ai == 0) continue;
            std::uint64_t* out = acc.data() + i;
            for (std::size_t j = 0; j < nb; ++j) out[j] += ai * b.c_[j];
        }
        for (auto& c : acc) c %= p;
    } else {
        for (std::size_t i = 0; i < na; ++i) {
            const std::uint64_t ai = a.c_[i];
            if (ai == 0) continue;
            for (std::size_t j = 0; j < nb; ++j) acc[i + j] = (acc[i + j] + ai * b.c_[j]) % p;
        }
    }
    r.c_ = std::move(acc);
    r.trim();
    return r;
}

ModPoly operator*(std::uint64_t c, const ModPoly& a)
{
    ModPoly r(a);
    c %= a.modulus();
    for (auto& x : r.c_) x = a.field_.mul(x, c);
    r.trim();
    return r;
}

bool operator<(const ModPoly& a, const ModPoly& b)
{
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string ModPoly::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        std::uint64_t c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c != 1 || i == 0) os << c;
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

ModDivRem divrem(const ModPoly& a, const ModPoly& b)
{
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    const std::uint64_t p = a.modulus();
    const PrimeField& F = a.field();
    if (a.is_zero() || a.degree() < b.degree()) return {ModPoly(p), a};
    std::vector<std::uint64_t> r = a.coeffs();
    const std::vector<std::uint64_t>& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const std::size_t dq = r.size() - 1 - db;
    std::vector<std::uint64_t> q(dq + 1, 0);
    const std::uint64_t linv = F.inv(b.lead());
    for (std::size_t k = dq + 1; k-- > 0;) {
        std::uint64_t c = F.mul(r[k + db], linv);
        q[k] = c;
        if (c == 0) continue;
        const std::uint64_t mc = p - c;
        std::uint64_t* rr = r.data() + k;
        for (std::size_t j = 0; j < db; ++j) rr[j] = (rr[j] + mc * bc[j]) % p;
        r[k + db] = 0;
    }
    r.resize(db);
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divrem(a, b).remainder; }
ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divrem(a, b).quotient; }

ModPoly gcd(const ModPoly& a, const ModPoly& b)
{
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ModXgcd xgcd(const ModPoly& a, const ModPoly& b)
{
    const std::uint64_t p = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(p, 1), s1(p);
    ModPoly t0(p), t1 = ModPoly::constant(p, 1);
    while (!r1.is_zero()) {
        ModDivRem qr = divrem(r0, r1);
        ModPoly r2 = qr.remainder;
        ModPoly s2 = s0 - qr.quotient * s1;
        ModPoly t2 = t0 - qr.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    std::uint64_t li = r0.field().inv(r0.lead());
    return {li * r0, li * s0, li * t0};
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m) { return (a * b) % m; }

ModPoly powmod(const ModPoly& a, const Integer& e, const ModPoly& m)
{
    if (e < 0) throw DomainError("negative exponent");
    ModPoly result = ModPoly::constant(a.modulus(), 1) % m;
    ModPoly base = a % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, m);
    }
    return result;
}

ModPoly invmod(const ModPoly& a, const ModPoly& m)
{
    ModXgcd g = xgcd(a % m, m);
    if (g.g.is_zero() || !g.g.is_one()) throw DomainError("polynomial not invertible modulo m");
    return g.s % m;
}

ModPoly compose_mod(const ModPoly& a, const ModPoly& b, const ModPoly& m)
{
    ModPoly acc(a.modulus());
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
        acc = mulmod(acc, b, m) + ModPoly::constant(a.modulus(), a.coeffs()[i]);
    return acc % m;
}

namespace {

// lc(A)^deg B * prod B(alpha) over the roots of A.
std::uint64_t resultant_standard(ModPoly A, ModPoly B)
{
    const PrimeField F = A.field();
    if (A.is_zero() || B.is_zero()) return 0;
    std::uint64_t acc = 1;
    for (;;) {
        const int m = A.degree();
        const int n = B.degree();
        if (m == 0) return F.mul(acc, F.pow(A.lead(), static_cast<std::uint64_t>(n)));
        if (n == 0) return F.mul(acc, F.pow(B.lead(), static_cast<std::uint64_t>(m)));
        if (n >= m) {
            ModPoly R = B % A;
            if (R.is_zero()) return 0;
            const int r = R.degree();
            acc = F.mul(acc, F.pow(A.lead(), static_cast<std::uint64_t>(n - r)));
            // Res(A, R) = (-1)^(m r) Res(R, A)
            if ((static_cast<long>(m) * r) % 2 == 1) acc = F.neg(acc);
            B = std::move(A);
            A = std::move(R);
        } else {
            // Res(A, B) = (-1)^(m n) Res(B, A)
            if ((static_cast<long>(m) * n) % 2 == 1) acc = F.neg(acc);
            std::swap(A, B);
        }
    }
}

}  // namespace

std::uint64_t resultant(const ModPoly& a, const ModPoly& b)
{
    if (a.is_zero() || b.is_zero()) return 0;
    return resultant_standard(b, a);
}

bool is_squarefree(const ModPoly& a)
{
    if (a.is_zero()) return false;
    if (a.degree() <= 0) return true;
    ModPoly d = a.derivative();
    if (d.is_zero()) return false;
    return gcd(a, d).degree() == 0;
}

bool is_irreducible(const ModPoly& a)
{
    if (a.is_zero() || a.degree() < 1) return false;
    const int k = a.degree();
    if (k == 1) return true;
    const std::uint64_t p = a.modulus();
    ModPoly f = a.monic();
    ModPoly x = ModPoly::x(p);
    // x^(p^i) mod f for i = 1..k
    std::vector<ModPoly> frob;
    ModPoly cur = x % f;
    const Integer P(static_cast<unsigned long>(p));
    for (int i = 1; i <= k; ++i) {
        cur = powmod(cur, P, f);
        frob.push_back(cur);
    }
    if (!(frob.back() == x % f)) return false;
    for (int r = 2; r <= k; ++r) {
        if (k % r != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= r; ++d)
            if (r % d == 0) prime = false;
        if (!prime) continue;
        ModPoly g = gcd(frob[static_cast<std::size_t>(k / r - 1)] - x, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

ModPoly least_irreducible(std::uint64_t p, int k)
{
    if (k < 1) throw DomainError("irreducible polynomial degree must be >= 1");
    std::vector<std::uint64_t> c(static_cast<std::size_t>(k) + 1, 0);
    c[static_cast<std::size_t>(k)] = 1;
    for (;;) {
        ModPoly cand(p, c);
        if (is_irreducible(cand)) return cand;
        // increment the base-p counter c_0 + c_1 p + ... + c_{k-1} p^(k-1)
        std::size_t i = 0;
        while (i < static_cast<std::size_t>(k)) {
            if (++c[i] < p) break;
            c[i] = 0;
            ++i;
        }
        if (i == static_cast<std::size_t>(k)) throw Error("no irreducible polynomial found");
    }
}

}  // namespace modgal

#include "modgal/exact/int_poly.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace modgal {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int degree)
{
    std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const Integer& root) { return IntPoly(std::vector<Integer>{-root, 1}); }

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntPoly::degree() const
{
    if (coeffs_.empty()) throw DomainError("degree of the zero polynomial");
    return static_cast<int>(coeffs_.size()) - 1;
}

const Integer& IntPoly::lead() const
{
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const Integer& IntPoly::operator[](std::size_t i) const
{
    static const Integer zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

IntPoly IntPoly::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

Integer IntPoly::content() const
{
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const
{
    if (is_zero()) return {};
    Integer g = content();
    if (lead() < 0) g = -g;
    return divide_exact(g);
}

Integer IntPoly::eval(const Integer& x) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at(const Rational& x) const
{
    // den^n * p(num/den) = sum c_i num^i den^(n-i), den > 0
    if (is_zero()) return 0;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = 0;
    Integer dpow = 1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * num + *it * dpow;
        dpow *= den;
    }
    return sgn(acc);
}

IntPoly IntPoly::scale_argument(const Integer& c) const
{
    std::vector<Integer> v(coeffs_);
    Integer pw = 1;
    for (auto& x : v) {
        x *= pw;
        pw *= c;
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::divide_exact(const Integer& d) const
{
    if (d == 0) throw DomainError("division by zero");
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t()))
            throw DomainError("coefficient not divisible in divide_exact");
        mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
    }
    return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b)
{
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a)
{
    std::vector<Integer> v(a.coeffs_);
    for (auto& c : v) c = -c;
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(v));
}

IntPoly operator*(const Integer& c, const IntPoly& a)
{
    std::vector<Integer> v(a.coeffs_);
    for (auto& x : v) x *= c;
    return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& a) { return os << a.to_string(); }

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(IntPoly num, Integer den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_ == 0) throw DomainError("zero denominator");
    normalize();
}

void RatPoly::normalize()
{
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Integer g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ = num_.divide_exact(g);
        den_ /= g;
    }
}

RatPoly RatPoly::from_coeffs(const std::vector<Rational>& coeffs)
{
    Integer lcm = 1;
    for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> v(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = coeffs[i].get_num() * (lcm / coeffs[i].get_den());
    return RatPoly(IntPoly(std::move(v)), lcm);
}

Rational RatPoly::coeff(std::size_t i) const
{
    Rational r(num_[i], den_);
    r.canonicalize();
    return r;
}

std::vector<Rational> RatPoly::coeffs() const
{
    std::vector<Rational> v;
    for (std::size_t i = 0; i < num_.coeffs().size(); ++i) v.push_back(coeff(i));
    return v;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b)
{
    return RatPoly(b.den_ * a.num_ + a.den_ * b.num_, a.den_ * b.den_);
}

RatPoly operator*(const RatPoly& a, const RatPoly& b)
{
    return RatPoly(a.num_ * b.num_, a.den_ * b.den_);
}

// ---------------------------------------------------------------- division

RatDivRem divrem(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero() || a.degree() < b.degree()) return {RatPoly(), RatPoly(a)};
    std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const int dq = a.degree() - db;
    std::vector<Rational> q(static_cast<std::size_t>(dq) + 1);
    const Rational lb(b.lead());
    for (int i = dq; i >= 0; --i) {
        Rational c = r[static_cast<std::size_t>(i + db)] / lb;
        q[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i + j)] -= c * Rational(b[static_cast<std::size_t>(j)]);
    }
    r.resize(static_cast<std::size_t>(db));
    return {RatPoly::from_coeffs(q), RatPoly::from_coeffs(r)};
}

PseudoDivRem pseudo_divrem(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return {IntPoly(), IntPoly(), 0};
    const int da = a.degree();
    const int db = b.degree();
    if (da < db) return {IntPoly(), a, 0};
    const int e = da - db + 1;
    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<Integer> q(static_cast<std::size_t>(da - db) + 1);
    const Integer& lb = b.lead();
    // Classic loop: r <- lb*r - r_top*x^k*b, q <- lb*q + r_top*x^k
    for (int k = da - db; k >= 0; --k) {
        Integer top = r[static_cast<std::size_t>(k + db)];
        for (auto& c : q) c *= lb;
        q[static_cast<std::size_t>(k)] += top;
        for (int i = 0; i < k + db; ++i) r[static_cast<std::size_t>(i)] *= lb;
        r[static_cast<std::size_t>(k + db)] = 0;
        if (top != 0)
            for (int j = 0; j < db; ++j)
                mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), top.get_mpz_t(),
                           b[static_cast<std::size_t>(j)].get_mpz_t());
    }
    r.resize(static_cast<std::size_t>(db));
    return {IntPoly(std::move(q)), IntPoly(std::move(r)), e};
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw DomainError("divide_exact: not divisible");
    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const int dq = a.degree() - db;
    std::vector<Integer> q(static_cast<std::size_t>(dq) + 1);
    for (int i = dq; i >= 0; --i) {
        Integer& top = r[static_cast<std::size_t>(i + db)];
        if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
            throw DomainError("divide_exact: not divisible");
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
        if (c != 0)
            for (int j = 0; j <= db; ++j)
                mpz_submul(r[static_cast<std::size_t>(i + j)].get_mpz_t(), c.get_mpz_t(),
                           b[static_cast<std::size_t>(j)].get_mpz_t());
        q[static_cast<std::size_t>(i)] = c;
    }
    for (int i = 0; i < db; ++i)
        if (r[static_cast<std::size_t>(i)] != 0) throw DomainError("divide_exact: not divisible");
    return IntPoly(std::move(q));
}

namespace {

// Standard resultant lc(A)^deg B * prod B(alpha), subresultant PRS
// (Collins; Cohen, Algorithm 3.3.7).
Integer resultant_standard(IntPoly A, IntPoly B)
{
    if (A.is_zero() || B.is_zero()) return 0;
    Integer a = A.content();
    Integer b = B.content();
    A = A.divide_exact(a);
    B = B.divide_exact(b);
    Integer g = 1, h = 1;
    int s = 1;
    Integer t = pow(a, static_cast<unsigned long>(B.degree())) * pow(b, static_cast<unsigned long>(A.degree()));
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -1;
    }
    if (B.degree() == 0) {
        // Res(A, c) = c^deg A for constant c (after the swap bookkeeping)
        return s * t * pow(B.lead(), static_cast<unsigned long>(A.degree()));
    }
    for (;;) {
        const int delta = A.degree() - B.degree();
        if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
        IntPoly R = pseudo_divrem(A, B).remainder;
        A = B;
        if (R.is_zero()) return 0;
        B = R.divide_exact(g * pow(h, static_cast<unsigned long>(delta)));
        g = A.lead();
        // h <- h^(1-delta) g^delta
        if (delta == 0) {
            // unchanged
        } else {
            Integer num = pow(g, static_cast<unsigned long>(delta));
            Integer den = pow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (B.degree() == 0) {
            const int da = A.degree();
            Integer num = pow(B.lead(), static_cast<unsigned long>(da));
            Integer den = pow(h, static_cast<unsigned long>(da - 1));
            Integer hh;
            mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return s * t * hh;
        }
    }
}

}  // namespace

Integer resultant(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero()) throw DomainError("resultant of the zero polynomial");
    // lc(b)^deg a * prod a(beta) is the standard resultant with the arguments swapped
    return resultant_standard(b, a);
}

Integer discriminant(const IntPoly& a)
{
    if (a.is_zero() || a.degree() < 1) throw DomainError("discriminant needs degree >= 1");
    const long n = a.degree();
    if (n == 1) return 1;
    Integer r = resultant(a, a.derivative());
    Integer d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), a.lead().get_mpz_t());
    if ((n * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    Integer cg = a.content();
    {
        Integer cb = b.content();
        mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), cb.get_mpz_t());
    }
    IntPoly A = a.primitive_part();
    IntPoly B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero() && B.degree() > 0) {
        IntPoly R = pseudo_divrem(A, B).remainder;
        A = std::move(B);
        B = R.is_zero() ? IntPoly() : R.primitive_part();
    }
    if (!B.is_zero()) return IntPoly::constant(cg);  // coprime
    return cg * A;
}

IntPoly squarefree_part(const IntPoly& a)
{
    if (a.is_zero()) throw DomainError("squarefree_part of zero");
    if (a.degree() == 0) return IntPoly{1};
    IntPoly g = gcd(a, a.derivative());
    return divide_exact(a.primitive_part(), g.primitive_part()).primitive_part();
}

bool is_squarefree(const IntPoly& a)
{
    if (a.is_zero()) return false;
    if (a.degree() <= 1) return true;
    return gcd(a, a.derivative()).degree() == 0;
}

namespace {

std::vector<IntPoly> sturm_sequence(const IntPoly& a)
{
    std::vector<IntPoly> seq{a.primitive_part(), a.derivative().primitive_part()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        const IntPoly& u = seq[seq.size() - 2];
        const IntPoly& v = seq.back();
        PseudoDivRem pd = pseudo_divrem(u, v);
        if (pd.remainder.is_zero()) break;
        // lc(v)^e * u = q v + r, so rem(u, v) has the sign of r when lc(v)^e > 0
        bool flip = (v.lead() < 0) && (pd.multiplier_exponent % 2 == 1);
        IntPoly r = pd.remainder;
        Integer c = r.content();
        r = r.divide_exact(c);
        seq.push_back(flip ? r : -r);
    }
    return seq;
}

int sign_variations(const std::vector<int>& signs)
{
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int variations_at_plus_inf(const std::vector<IntPoly>& seq)
{
    std::vector<int> s;
    for (const auto& p : seq) s.push_back(sgn(p.lead()));
    return sign_variations(s);
}

int variations_at_minus_inf(const std::vector<IntPoly>& seq)
{
    std::vector<int> s;
    for (const auto& p : seq) s.push_back(sgn(p.lead()) * (p.degree() % 2 == 0 ? 1 : -1));
    return sign_variations(s);
}

void require_squarefree(const IntPoly& a)
{
    if (a.is_zero()) throw DomainError("real root count of zero");
    if (!is_squarefree(a)) throw DomainError("real root count needs a squarefree polynomial");
}

}  // namespace

int real_root_count(const IntPoly& a)
{
    require_squarefree(a);
    if (a.degree() == 0) return 0;
    auto seq = sturm_sequence(a);
    return variations_at_minus_inf(seq) - variations_at_plus_inf(seq);
}

int real_roots_above(const IntPoly& a, const Rational& x)
{
    require_squarefree(a);
    if (a.degree() == 0) return 0;
    auto seq = sturm_sequence(a);
    std::vector<int> s;
    for (const auto& p : seq) s.push_back(p.sign_at(x));
    // Sturm counts roots in (x, inf) when a(x) != 0; a root at x itself is excluded
    return sign_variations(s) - variations_at_plus_inf(seq);
}

IntPoly monic_transform(const IntPoly& a)
{
    const int n = a.degree();
    const Integer& lc = a.lead();
    // coefficient of y^i is a_i * lc^(n-1-i)
    std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * pow(lc, static_cast<unsigned long>(n - 1 - i));
    v[static_cast<std::size_t>(n)] = 1;
    return IntPoly(std::move(v));
}

// ---------------------------------------------------------------- text format

IntPoly parse_poly(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::vector<Integer> coeffs;
    bool seen = false;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        if (seen) throw DataError("polynomial file has more than one coefficient line");
        seen = true;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            Integer c;
            if (c.set_str(tok, 10) != 0) throw DataError("bad coefficient '" + tok + "'");
            coeffs.push_back(c);
        }
    }
    if (!seen || coeffs.empty()) throw DataError("polynomial file has no coefficients");
    return IntPoly(std::move(coeffs));
}

std::string format_poly(const IntPoly& a)
{
    std::string out;
    if (a.is_zero()) return "0\n";
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i) out += ' ';
        out += a.coeffs()[i].get_str();
    }
    out += '\n';
    return out;
}

IntPoly read_poly_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DataError("cannot open polynomial file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_poly(ss.str());
}

void write_poly_file(const std::string& path, const IntPoly& a)
{
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    out << format_poly(a);
}

}  // namespace modgal

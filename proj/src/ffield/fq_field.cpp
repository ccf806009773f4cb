#include "modgal/ffield/fq_field.hpp"

#include <limits>
#include <sstream>

namespace modgal {

FqField::FqField(std::uint64_t p, int k, std::optional<ModPoly> modulus)
    : p_(p), k_(k), fp_(p), modulus_(p)
{
    if (!is_prime(p)) throw DomainError("field characteristic must be prime");
    if (k < 1 || k > kMaxDegree) throw DomainError("extension degree out of range");
    if (modulus) {
        if (modulus->modulus() != p) throw DomainError("modulus is over a different prime field");
        if (modulus->is_zero() || modulus->degree() != k) throw DomainError("modulus degree must equal the extension degree");
        if (!is_irreducible(*modulus)) throw DomainError("field modulus is reducible: " + modulus->to_string());
        modulus_ = modulus->monic();
    } else {
        modulus_ = least_irreducible(p, k);
    }
    // x^k = -(m_0 + ... + m_{k-1} x^{k-1}); shift repeatedly for higher powers
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) row[static_cast<std::size_t>(i)] = fp_.neg(modulus_[static_cast<std::size_t>(i)]);
    for (int j = 0; j + 1 < k; ++j) {
        reduction_.push_back(row);
        std::vector<std::uint64_t> next(static_cast<std::size_t>(k), 0);
        const std::uint64_t top = row[static_cast<std::size_t>(k - 1)];
        for (int i = k - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i - 1)];
        for (int i = 0; i < k; ++i)
            next[static_cast<std::size_t>(i)] =
                fp_.add(next[static_cast<std::size_t>(i)], fp_.mul(top, fp_.neg(modulus_[static_cast<std::size_t>(i)])));
        row = std::move(next);
    }
}

std::shared_ptr<const FqField> FqField::make(std::uint64_t p, int k, std::optional<ModPoly> modulus)
{
    return std::make_shared<const FqField>(p, k, std::move(modulus));
}

std::uint64_t FqField::order() const
{
    std::uint64_t q = 1;
    for (int i = 0; i < k_; ++i) {
        if (q > std::numeric_limits<std::uint64_t>::max() / p_) throw DomainError("field order overflows 64 bits");
        q *= p_;
    }
    return q;
}

FqElement FqField::zero() const
{
    FqElement e;
    e.field_ = this;
    return e;
}

FqElement FqField::one() const { return from_int(1); }

FqElement FqField::generator() const
{
    if (k_ == 1) {
        // x reduces to -m_0 in a degree-one field
        FqElement e = zero();
        e.c_[0] = fp_.neg(modulus_[0]);
        return e;
    }
    FqElement e = zero();
    e.c_[1] = 1;
    return e;
}

FqElement FqField::from_int(std::int64_t n) const
{
    FqElement e = zero();
    e.c_[0] = fp_.reduce(n);
    return e;
}

FqElement FqField::from_coords(const std::vector<std::uint64_t>& coords) const
{
    if (coords.size() > static_cast<std::size_t>(k_)) throw DomainError("too many coordinates for field");
    FqElement e = zero();
    for (std::size_t i = 0; i < coords.size(); ++i) e.c_[i] = coords[i] % p_;
    return e;
}

FqElement FqField::from_poly(const ModPoly& a) const
{
    if (a.modulus() != p_) throw DomainError("polynomial over a different prime field");
    // Horner in the field
    FqElement x = generator();
    FqElement acc = zero();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = acc * x + from_int(static_cast<std::int64_t>(a.coeffs()[i]));
    return acc;
}

FqElement FqField::from_index(std::uint64_t index) const
{
    FqElement e = zero();
    for (int i = 0; i < k_; ++i) {
        e.c_[static_cast<std::size_t>(i)] = index % p_;
        index /= p_;
    }
    return e;
}

std::vector<FqElement> FqField::elements() const
{
    const std::uint64_t q = order();
    std::vector<FqElement> out;
    out.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) out.push_back(from_index(i));
    return out;
}

// ---------------------------------------------------------------- FqElement

bool FqElement::is_zero() const
{
    for (auto c : c_)
        if (c) return false;
    return true;
}

bool FqElement::is_one() const
{
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

std::vector<std::uint64_t> FqElement::coords() const
{
    return std::vector<std::uint64_t>(c_.begin(), c_.begin() + field_->k_);
}

std::uint64_t FqElement::index() const
{
    std::uint64_t idx = 0;
    for (int i = field_->k_; i-- > 0;) idx = idx * field_->p_ + c_[static_cast<std::size_t>(i)];
    return idx;
}

bool FqElement::in_prime_field() const
{
    for (int i = 1; i < field_->k_; ++i)
        if (c_[static_cast<std::size_t>(i)]) return false;
    return true;
}

FqElement FqElement::operator+(const FqElement& o) const
{
    FqElement r = *this;
    const auto& F = field_->fp_;
    for (int i = 0; i < field_->k_; ++i) r.c_[static_cast<std::size_t>(i)] = F.add(c_[static_cast<std::size_t>(i)], o.c_[static_cast<std::size_t>(i)]);
    return r;
}

FqElement FqElement::operator-(const FqElement& o) const
{
    FqElement r = *this;
    const auto& F = field_->fp_;
    for (int i = 0; i < field_->k_; ++i) r.c_[static_cast<std::size_t>(i)] = F.sub(c_[static_cast<std::size_t>(i)], o.c_[static_cast<std::size_t>(i)]);
    return r;
}

FqElement FqElement::operator-() const
{
    FqElement r = *this;
    const auto& F = field_->fp_;
    for (int i = 0; i < field_->k_; ++i) r.c_[static_cast<std::size_t>(i)] = F.neg(c_[static_cast<std::size_t>(i)]);
    return r;
}

FqElement FqElement::operator*(const FqElement& o) const
{
    const int k = field_->k_;
    const std::uint64_t p = field_->p_;
    FqElement r = field_->zero();
    if (k == 1) {
        r.c_[0] = c_[0] * o.c_[0] % p;
        return r;
    }
    std::array<std::uint64_t, 2 * FqField::kMaxDegree> prod{};
    for (int i = 0; i < k; ++i) {
        const std::uint64_t a = c_[static_cast<std::size_t>(i)];
        if (!a) continue;
        for (int j = 0; j < k; ++j) prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + a * o.c_[static_cast<std::size_t>(j)]) % p;
    }
    for (int i = 0; i < k; ++i) r.c_[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
    for (int j = 0; j + 1 < k; ++j) {
        const std::uint64_t t = prod[static_cast<std::size_t>(k + j)];
        if (!t) continue;
        const auto& row = field_->reduction_[static_cast<std::size_t>(j)];
        for (int i = 0; i < k; ++i) r.c_[static_cast<std::size_t>(i)] = (r.c_[static_cast<std::size_t>(i)] + t * row[static_cast<std::size_t>(i)]) % p;
    }
    return r;
}

FqElement FqElement::pow(std::uint64_t e) const
{
    FqElement result = field_->one();
    FqElement base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

FqElement FqElement::pow(const Integer& e) const
{
    if (e < 0) return inverse().pow(Integer(-e));
    FqElement result = field_->one();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = result * result;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result * *this;
    }
    return result;
}

FqElement FqElement::inverse() const
{
    if (is_zero()) throw DomainError("inverse of zero in F_q");
    if (field_->k_ == 1) {
        FqElement r = *this;
        r.c_[0] = field_->fp_.inv(c_[0]);
        return r;
    }
    ModPoly a(field_->p_, coords());
    ModPoly inv = invmod(a, field_->modulus_);
    return field_->from_coords(inv.coeffs());
}

FqElement FqElement::operator/(const FqElement& o) const { return *this * o.inverse(); }

FqElement FqElement::frobenius() const { return pow(field_->p_); }

bool FqElement::is_square() const
{
    if (is_zero()) return true;
    if (field_->p_ == 2) return true;
    // (q - 1) / 2 as a multi-precision exponent
    Integer q = modgal::pow(Integer(static_cast<unsigned long>(field_->p_)), static_cast<unsigned long>(field_->k_));
    return pow(Integer((q - 1) / 2)).is_one();
}

std::string FqElement::to_string() const
{
    if (field_->k_ == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < field_->k_; ++i) os << (i ? " " : "") << c_[static_cast<std::size_t>(i)];
    os << "]";
    return os.str();
}

}  // namespace modgal

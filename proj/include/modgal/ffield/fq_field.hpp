#ifndef MODGAL_FFIELD_FQ_FIELD_HPP
#define MODGAL_FFIELD_FQ_FIELD_HPP

#include "modgal/exact/mod_poly.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace modgal {

class FqElement;

/// The finite field F_p[x]/(modulus) with q = p^k elements.
///
/// Elements hold a pointer to their field, so a field must outlive its
/// elements; fields are normally owned through std::shared_ptr.
class FqField {
public:
    static constexpr int kMaxDegree = 16;

    /// Without a modulus the lexicographically least irreducible polynomial
    /// of degree k is used. A reducible modulus is rejected.
    FqField(std::uint64_t p, int k, std::optional<ModPoly> modulus = std::nullopt);
    static std::shared_ptr<const FqField> make(std::uint64_t p, int k, std::optional<ModPoly> modulus = std::nullopt);

    std::uint64_t characteristic() const { return p_; }
    int degree() const { return k_; }
    /// Number of elements; throws if p^k does not fit in 64 bits.
    std::uint64_t order() const;
    const ModPoly& modulus() const { return modulus_; }
    const PrimeField& prime_field() const { return fp_; }

    FqElement zero() const;
    FqElement one() const;
    /// The class of x, a root of the modulus.
    FqElement generator() const;
    FqElement from_int(std::int64_t n) const;
    FqElement from_coords(const std::vector<std::uint64_t>& coords) const;
    /// Image of a polynomial over F_p under x -> generator.
    FqElement from_poly(const ModPoly& a) const;
    /// Enumeration index sum c_i p^i, and its inverse.
    FqElement from_index(std::uint64_t index) const;
    std::vector<FqElement> elements() const;

    friend bool operator==(const FqField& a, const FqField& b)
    {
        return a.p_ == b.p_ && a.modulus_ == b.modulus_;
    }

private:
    friend class FqElement;
    std::uint64_t p_;
    int k_;
    PrimeField fp_;
    ModPoly modulus_;
    // x^(k+j) mod modulus, j = 0..k-2, as coordinate rows
    std::vector<std::vector<std::uint64_t>> reduction_;
};

/// Element of an FqField in the power basis of the modulus.
class FqElement {
public:
    FqElement() = default;

    const FqField& field() const { return *field_; }
    bool is_zero() const;
    bool is_one() const;
    std::uint64_t coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
    std::vector<std::uint64_t> coords() const;
    std::uint64_t index() const;
    /// Coordinates beyond the constant term vanish.
    bool in_prime_field() const;

    FqElement operator+(const FqElement& o) const;
    FqElement operator-(const FqElement& o) const;
    FqElement operator-() const;
    FqElement operator*(const FqElement& o) const;
    FqElement operator/(const FqElement& o) const;
    FqElement& operator+=(const FqElement& o) { return *this = *this + o; }
    FqElement& operator*=(const FqElement& o) { return *this = *this * o; }
    FqElement pow(const Integer& e) const;
    FqElement pow(std::uint64_t e) const;
    FqElement inverse() const;
    /// x -> x^p
    FqElement frobenius() const;
    bool is_square() const;

    friend bool operator==(const FqElement& a, const FqElement& b) { return a.c_ == b.c_; }
    friend bool operator<(const FqElement& a, const FqElement& b) { return a.index() < b.index(); }

    std::string to_string() const;

private:
    friend class FqField;
    const FqField* field_ = nullptr;
    std::array<std::uint64_t, FqField::kMaxDegree> c_{};
};

using FqFieldPtr = std::shared_ptr<const FqField>;

inline FqFieldPtr make_field(std::uint64_t p, int k, std::optional<ModPoly> modulus = std::nullopt)
{
    return FqField::make(p, k, std::move(modulus));
}

}  // namespace modgal

#endif  // MODGAL_FFIELD_FQ_FIELD_HPP

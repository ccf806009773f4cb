#ifndef MODGAL_FFIELD_PROJECTIVE_GROUP_HPP
#define MODGAL_FFIELD_PROJECTIVE_GROUP_HPP

#include "modgal/ffield/fq_field.hpp"

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace modgal {

/// Lookup tables for a small field, elements named by FqField index.
class SmallField {
public:
    static constexpr std::uint64_t kMaxOrder = 64;
    explicit SmallField(const FqField& field);

    std::uint32_t q() const { return q_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t inv(std::uint32_t a) const;
    bool is_square(std::uint32_t a) const { return square_[a]; }
    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1; }

private:
    std::uint32_t q_;
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
    std::vector<bool> square_;
};

enum class GroupKind { PSL2, PGL2 };

/// PGL2(F_q) or PSL2(F_q) as an explicit list of normalised matrices
/// [1 b; c d] or [0 1; c d]. PSL2 is the image of matrices with square
/// determinant. Point q of P^1 is infinity.
class ProjectiveGroup {
public:
    using Matrix = std::array<std::uint32_t, 4>;

    ProjectiveGroup(const FqField& field, GroupKind kind);

    const SmallField& field() const { return F_; }
    std::size_t order() const { return elems_.size(); }
    const Matrix& element(std::size_t i) const { return elems_[i]; }
    std::size_t identity() const { return identity_; }
    std::size_t index_of(const Matrix& m) const;
    std::size_t multiply(std::size_t i, std::size_t j) const;
    std::uint32_t theta(std::size_t i) const;
    std::uint32_t act(std::size_t i, std::uint32_t point) const;
    /// Cycle lengths on the q+1 points, sorted ascending.
    std::vector<int> cycle_type(std::size_t i) const;

private:
    Matrix normalise(Matrix m) const;
    std::uint64_t key(const Matrix& m) const;

    SmallField F_;
    std::vector<Matrix> elems_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::size_t identity_ = 0;
};

using CycleType = std::vector<int>;

/// All cycle types of the group acting on P^1(F_q); q <= 64.
std::set<CycleType> cycle_type_fingerprint(const FqField& field, GroupKind kind);
/// One type per line as comma-separated ascending parts, lines sorted as strings.
std::string format_fingerprint(const std::set<CycleType>& types);

}  // namespace modgal

#endif  // MODGAL_FFIELD_PROJECTIVE_GROUP_HPP

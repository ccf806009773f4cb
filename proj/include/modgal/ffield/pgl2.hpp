#ifndef MODGAL_FFIELD_PGL2_HPP
#define MODGAL_FFIELD_PGL2_HPP

#include "modgal/ffield/fq_field.hpp"

#include <cstdint>
#include <vector>

namespace modgal {

/// Conjugacy-invariant data of a class in PGL2(F_q), up to the scaling
/// (trace, det) ~ (c trace, c^2 det).
struct PGL2Class {
    FqElement trace;
    FqElement det;
};

/// tr^2 / det. Throws on a zero determinant.
FqElement theta(const PGL2Class& c);

struct TracePower {
    FqElement trace;
    FqElement det;
};

/// Trace and determinant of gamma^n from those of gamma, via
/// t_{n+1} = t t_n - d t_{n-1}, t_0 = 2, t_1 = t.
TracePower trace_power(const FqElement& trace, const FqElement& det, std::uint64_t n);

struct ThetaCoverage {
    bool full = false;
    std::vector<FqElement> missing;  // sorted by field index
};

/// Compares a set of theta values with all of F_q. Requires q >= 4.
ThetaCoverage theta_coverage_verdict(const std::vector<FqElement>& seen, const FqField& field);

/// 2x2 matrix over F_q.
struct Mat2 {
    FqElement a, b, c, d;

    static Mat2 identity(const FqField& F) { return {F.one(), F.zero(), F.zero(), F.one()}; }
    FqElement trace() const { return a + d; }
    FqElement det() const { return a * d - b * c; }
    Mat2 operator*(const Mat2& o) const
    {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 inverse() const;
    Mat2 pow(std::uint64_t n) const;
    PGL2Class cls() const { return {trace(), det()}; }
};

}  // namespace modgal

#endif  // MODGAL_FFIELD_PGL2_HPP

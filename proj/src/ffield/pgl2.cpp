#include "modgal/ffield/pgl2.hpp"

#include <algorithm>

namespace modgal {

FqElement theta(const PGL2Class& c)
{
    if (c.det.is_zero()) throw DomainError("theta of a class with zero determinant");
    return c.trace * c.trace / c.det;
}

TracePower trace_power(const FqElement& trace, const FqElement& det, std::uint64_t n)
{
    // companion matrix [t -d; 1 0] has the same characteristic polynomial
    const FqField& F = trace.field();
    Mat2 m{trace, -det, F.one(), F.zero()};
    Mat2 r = m.pow(n);
    return {r.trace(), det.pow(n)};
}

ThetaCoverage theta_coverage_verdict(const std::vector<FqElement>& seen, const FqField& field)
{
    const std::uint64_t q = field.order();
    if (q < 4) throw DomainError("theta coverage needs q >= 4");
    std::vector<bool> hit(q, false);
    for (const auto& x : seen) {
        if (!(x.field() == field)) throw DomainError("theta value from a different field");
        hit[x.index()] = true;
    }
    ThetaCoverage out;
    for (std::uint64_t i = 0; i < q; ++i)
        if (!hit[i]) out.missing.push_back(field.from_index(i));
    out.full = out.missing.empty();
    return out;
}

Mat2 Mat2::inverse() const
{
    FqElement D = det();
    if (D.is_zero()) throw DomainError("singular matrix");
    FqElement inv = D.inverse();
    return {d * inv, -b * inv, -c * inv, a * inv};
}

Mat2 Mat2::pow(std::uint64_t n) const
{
    Mat2 result = identity(a.field());
    Mat2 base = *this;
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

}  // namespace modgal

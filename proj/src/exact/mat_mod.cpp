#include "modgal/exact/mat_mod.hpp"

#include "modgal/exact/mod_poly.hpp"

namespace modgal {

MatModP rref(MatModP rows, std::uint64_t p)
{
    const PrimeField F(p);
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const std::uint64_t inv = F.inv(rows[r][c]);
        for (auto& x : rows[r]) x = F.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const std::uint64_t f = p - rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (rows[r][j]) rows[i][j] = (rows[i][j] + f * rows[r][j]) % p;
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::size_t rank(const MatModP& rows, std::uint64_t p) { return rref(rows, p).size(); }

MatModP transpose(const MatModP& a)
{
    if (a.empty()) return {};
    MatModP t(a[0].size(), std::vector<std::uint64_t>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

MatModP right_kernel(const MatModP& M, std::uint64_t p)
{
    if (M.empty()) return {};
    const std::size_t cols = M[0].size();
    MatModP R = rref(M, p);
    std::vector<long> pivot_of_col(cols, -1);
    for (std::size_t i = 0; i < R.size(); ++i)
        for (std::size_t c = 0; c < cols; ++c)
            if (R[i][c]) {
                pivot_of_col[c] = static_cast<long>(i);
                break;
            }
    MatModP out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[f] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) {
                const std::uint64_t x = R[static_cast<std::size_t>(pivot_of_col[c])][f];
                v[c] = x ? p - x : 0;
            }
        out.push_back(std::move(v));
    }
    return out;
}

MatModP left_kernel(const MatModP& M, std::uint64_t p)
{
    if (M.empty()) return {};
    return right_kernel(transpose(M), p);
}

MatModP multiply(const MatModP& a, const MatModP& b, std::uint64_t p)
{
    if (a.empty()) return {};
    const std::size_t n = a.size(), m = b.size(), k = b.empty() ? 0 : b[0].size();
    MatModP c(n, std::vector<std::uint64_t>(k, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < m; ++l) {
            const std::uint64_t x = a[i][l];
            if (!x) continue;
            for (std::size_t j = 0; j < k; ++j) c[i][j] = (c[i][j] + x * b[l][j]) % p;
        }
    return c;
}

}  // namespace modgal

#include "modgal/exact/mat_q.hpp"

namespace modgal {

QMat identity_matrix(std::size_t n)
{
    QMat m(n, QVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat rref(QMat rows, std::vector<std::size_t>* pivots)
{
    if (pivots) pivots->clear();
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Rational inv = 1 / rows[r][c];
        for (std::size_t j = c; j < cols; ++j)
            if (rows[r][j] != 0) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    rows.resize(r);
    return rows;
}

QMat left_kernel(const QMat& M)
{
    if (M.empty()) return {};
    const std::size_t m = M.size(), k = M[0].size();
    // a M = 0  <=>  M^T a^T = 0
    QMat t(k, QVec(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) t[j][i] = M[i][j];
    std::vector<std::size_t> piv;
    const QMat R = rref(t, &piv);
    std::vector<long> row_of(m, -1);
    for (std::size_t i = 0; i < piv.size(); ++i) row_of[piv[i]] = static_cast<long>(i);
    QMat out;
    for (std::size_t f = 0; f < m; ++f) {
        if (row_of[f] >= 0) continue;
        QVec v(m, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -R[i][f];
        out.push_back(std::move(v));
    }
    return rref(std::move(out));
}

QMat multiply(const QMat& a, const QMat& b)
{
    if (a.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat c(n, QVec(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[t][j] != 0) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

QVec multiply(const QVec& v, const QMat& M) { return multiply(QMat{v}, M)[0]; }

QMat add(const QMat& a, const QMat& b)
{
    QMat c = a;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += b[i][j];
    return c;
}

QMat scale(const Rational& s, const QMat& a)
{
    QMat c = a;
    for (auto& r : c)
        for (auto& x : r) x *= s;
    return c;
}

bool is_zero(const QVec& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

QVec coordinates(const QVec& v, const QMat& B, const std::vector<std::size_t>& pivots)
{
    QVec c(B.size());
    QVec rest = v;
    for (std::size_t i = 0; i < B.size(); ++i) {
        c[i] = v[pivots[i]];
        if (c[i] != 0)
            for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= c[i] * B[i][j];
    }
    if (!is_zero(rest)) throw Error("vector is not in the subspace");
    return c;
}

QMat restrict_to(const QMat& M, const QMat& B, const std::vector<std::size_t>& pivots)
{
    QMat R;
    for (const auto& row : multiply(B, M)) R.push_back(coordinates(row, B, pivots));
    return R;
}

std::vector<Rational> charpoly(const QMat& M0)
{
    const std::size_t n = M0.size();
    QMat H = M0;
    // Similarity transform to upper Hessenberg form.
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        std::size_t piv = k + 1;
        while (piv < n && H[piv][k] == 0) ++piv;
        if (piv == n) continue;
        if (piv != k + 1) {
            std::swap(H[piv], H[k + 1]);
            for (auto& r : H) std::swap(r[piv], r[k + 1]);
        }
        for (std::size_t i = k + 2; i < n; ++i) {
            if (H[i][k] == 0) continue;
            const Rational f = H[i][k] / H[k + 1][k];
            for (std::size_t j = 0; j < n; ++j) H[i][j] -= f * H[k + 1][j];
            for (std::size_t j = 0; j < n; ++j) H[j][k + 1] += f * H[j][i];
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_i h_im prod(h_{j,j-1}) p_{i-1}
    std::vector<std::vector<Rational>> p(n + 1);
    p[0] = {Rational(1)};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<Rational> cur(m + 1, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            cur[i + 1] += p[m - 1][i];
            cur[i] -= H[m - 1][m - 1] * p[m - 1][i];
        }
        Rational prod = 1;
        for (std::size_t i = m - 1; i-- > 0;) {
            prod *= H[i + 1][i];
            if (prod == 0) break;
            const Rational f = prod * H[i][m - 1];
            for (std::size_t t = 0; t < p[i].size(); ++t) cur[t] -= f * p[i][t];
        }
        p[m] = std::move(cur);
    }
    return p[n];
}

IntPoly integral_charpoly(const QMat& M)
{
    std::vector<Integer> c;
    for (auto& x : charpoly(M)) {
        if (x.get_den() != 1) throw Error("characteristic polynomial is not integral");
        c.push_back(x.get_num());
    }
    return IntPoly(std::move(c));
}

QMat evaluate(const std::vector<Rational>& p, const QMat& M)
{
    const std::size_t n = M.size();
    QMat acc(n, QVec(n, Rational(0)));
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = multiply(acc, M);
        for (std::size_t i = 0; i < n; ++i) acc[i][i] += p[k];
    }
    return acc;
}

}  // namespace modgal

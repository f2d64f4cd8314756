#include "superkoszul/linalg.hpp"

#include <algorithm>

namespace superkoszul::linalg {

namespace {

using IVec = std::vector<Integer>;

IVec to_primitive(const Vec& v)
{
    Integer den = 1;
    for (const auto& x : v)
        if (x != 0)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    IVec out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        out[i] = v[i].get_num() * (den / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g > 1)
        for (auto& x : out)
            if (x != 0)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

void make_primitive(IVec& v)
{
    Integer g = 0;
    for (const auto& x : v)
        if (x != 0)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v)
            if (x != 0)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::size_t integer_rank(std::vector<IVec> rows, std::size_t cols)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i][c] != 0 && (piv == rows.size() || abs(rows[i][c]) < abs(rows[piv][c])))
                piv = i;
        }
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        const IVec& p = rows[r];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0)
                continue;
            Integer a = p[c];
            Integer b = rows[i][c];
            Integer g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            a /= g;
            b /= g;
            for (std::size_t k = c; k < cols; ++k)
                rows[i][k] = a * rows[i][k] - b * p[k];
            make_primitive(rows[i]);
        }
        ++r;
    }
    return r;
}

// Reduced row echelon form over the rationals; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        Rational inv = 1 / rows[r][c];
        for (std::size_t k = c; k < cols; ++k)
            rows[r][k] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Rational f = rows[i][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[i][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

std::size_t rank(const Mat& m)
{
    std::vector<IVec> rows;
    rows.reserve(m.rows.size());
    for (const auto& row : m.rows) {
        IVec v = to_primitive(row);
        if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; }))
            rows.push_back(std::move(v));
    }
    return integer_rank(std::move(rows), m.cols);
}

std::size_t stacked_rank(const Mat& a, const Mat& b)
{
    Mat s;
    s.cols = std::max(a.cols, b.cols);
    s.rows = a.rows;
    s.rows.insert(s.rows.end(), b.rows.begin(), b.rows.end());
    return rank(s);
}

Mat transpose(const Mat& m)
{
    Mat t(m.cols, m.rows.size());
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            t[j][i] = m[i][j];
    return t;
}

Mat multiply(const Mat& a, const Mat& b)
{
    Mat out(a.rows.size(), b.cols);
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                if (b[k][j] != 0)
                    out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

bool is_zero(const Mat& m)
{
    for (const auto& row : m.rows)
        for (const auto& x : row)
            if (x != 0)
                return false;
    return true;
}

std::vector<Vec> kernel(const Mat& m)
{
    std::vector<Vec> rows = m.rows;
    auto pivots = rref(rows, m.cols);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free])
            continue;
        Vec x(m.cols);
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = -rows[i][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b)
{
    std::vector<Vec> rows = m.rows;
    for (std::size_t i = 0; i < rows.size(); ++i)
        rows[i].push_back(b[i]);
    auto pivots = rref(rows, m.cols + 1);
    if (!pivots.empty() && pivots.back() == m.cols)
        return std::nullopt;
    Vec x(m.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = rows[i][m.cols];
    return x;
}

bool in_row_span(const Mat& rows, const Vec& v)
{
    Mat one;
    one.cols = v.size();
    one.push_row(v);
    return stacked_rank(rows, one) == rank(rows);
}

}  // namespace superkoszul::linalg

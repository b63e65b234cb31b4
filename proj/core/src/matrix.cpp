#include "disjcalc/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace disjcalc {

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const
{
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

Matrix operator+(const Matrix& x, const Matrix& y)
{
    assert(x.rows == y.rows && x.cols == y.cols);
    Matrix z(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i)
        z.a[i] = x.a[i] + y.a[i];
    return z;
}

Matrix operator-(const Matrix& x, const Matrix& y)
{
    assert(x.rows == y.rows && x.cols == y.cols);
    Matrix z(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i)
        z.a[i] = x.a[i] - y.a[i];
    return z;
}

Matrix Matrix::operator-() const
{
    Matrix z(rows, cols);
    for (size_t i = 0; i < a.size(); ++i)
        z.a[i] = -a[i];
    return z;
}

Matrix Matrix::scaled(const Rational& c) const
{
    Matrix z(rows, cols);
    for (size_t i = 0; i < a.size(); ++i)
        z.a[i] = a[i] * c;
    return z;
}

Matrix operator*(const Matrix& x, const Matrix& y)
{
    assert(x.cols == y.rows);
    Matrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rational& xv = x.at(i, k);
            if (xv == 0)
                continue;
            for (int j = 0; j < y.cols; ++j) {
                const Rational& yv = y.at(k, j);
                if (yv != 0)
                    z.at(i, j) += xv * yv;
            }
        }
    return z;
}

int RowReducer::add_row(std::vector<Rational> v)
{
    assert(static_cast<int>(v.size()) == cols_);
    reduce(v);
    int piv = -1;
    for (int c = 0; c < cols_; ++c)
        if (v[static_cast<size_t>(c)] != 0) {
            piv = c;
            break;
        }
    if (piv < 0)
        return -1;
    Rational lead = v[static_cast<size_t>(piv)];
    for (auto& x : v)
        x /= lead;
    // Clear this pivot from existing rows to keep fully reduced form.
    for (auto& row : rows_) {
        Rational c = row[static_cast<size_t>(piv)];
        if (c != 0)
            for (int j = piv; j < cols_; ++j)
                row[static_cast<size_t>(j)] -= c * v[static_cast<size_t>(j)];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return piv;
}

void RowReducer::reduce(std::vector<Rational>& v) const
{
    for (size_t r = 0; r < rows_.size(); ++r) {
        int piv = pivots_[r];
        Rational c = v[static_cast<size_t>(piv)];
        if (c != 0)
            for (int j = piv; j < cols_; ++j)
                v[static_cast<size_t>(j)] -= c * rows_[r][static_cast<size_t>(j)];
    }
}

bool RowReducer::is_pivot(int col) const
{
    return std::binary_search(pivots_.begin(), pivots_.end(), col);
}

std::vector<int> RowReducer::free_cols() const
{
    std::vector<int> out;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot(c))
            out.push_back(c);
    return out;
}

int rank_of(const Matrix& m)
{
    RowReducer rr(m.cols);
    for (int i = 0; i < m.rows; ++i) {
        std::vector<Rational> row(m.a.begin() + static_cast<std::ptrdiff_t>(i) * m.cols,
                                  m.a.begin() + static_cast<std::ptrdiff_t>(i + 1) * m.cols);
        rr.add_row(std::move(row));
    }
    return rr.rank();
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m)
{
    // Reduce the transpose-free way: treat columns as unknowns.
    RowReducer rr(m.cols);
    for (int i = 0; i < m.rows; ++i) {
        std::vector<Rational> row(m.a.begin() + static_cast<std::ptrdiff_t>(i) * m.cols,
                                  m.a.begin() + static_cast<std::ptrdiff_t>(i + 1) * m.cols);
        rr.add_row(std::move(row));
    }
    std::vector<std::vector<Rational>> out;
    for (int fc : rr.free_cols()) {
        std::vector<Rational> v(static_cast<size_t>(m.cols));
        v[static_cast<size_t>(fc)] = 1;
        const auto& rows = rr.rows();
        const auto& pivots = rr.pivot_cols();
        for (size_t r = 0; r < rows.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -rows[r][static_cast<size_t>(fc)];
        out.push_back(std::move(v));
    }
    return out;
}

LinearSolve solve(const Matrix& m, const std::vector<Rational>& b)
{
    assert(static_cast<int>(b.size()) == m.rows);
    // Augment with b and reduce.
    RowReducer rr(m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        std::vector<Rational> row(static_cast<size_t>(m.cols) + 1);
        for (int j = 0; j < m.cols; ++j)
            row[static_cast<size_t>(j)] = m.at(i, j);
        row[static_cast<size_t>(m.cols)] = b[static_cast<size_t>(i)];
        rr.add_row(std::move(row));
    }
    LinearSolve res;
    if (rr.is_pivot(m.cols))
        return res; // inconsistent
    res.ok = true;
    res.x.assign(static_cast<size_t>(m.cols), Rational(0));
    const auto& rows = rr.rows();
    const auto& pivots = rr.pivot_cols();
    for (size_t r = 0; r < rows.size(); ++r)
        res.x[static_cast<size_t>(pivots[r])] = rows[r][static_cast<size_t>(m.cols)];
    return res;
}

std::vector<Rational> apply(const Matrix& m, const std::vector<Rational>& v)
{
    assert(static_cast<int>(v.size()) == m.cols);
    std::vector<Rational> out(static_cast<size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) {
        Rational acc = 0;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && v[static_cast<size_t>(j)] != 0)
                acc += m.at(i, j) * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

} // namespace disjcalc

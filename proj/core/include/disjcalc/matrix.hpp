#pragma once

#include "disjcalc/rational.hpp"

#include <vector>

namespace disjcalc {

/// Dense matrix over the rationals.  Row-major.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    static Matrix identity(int n);
    static Matrix zero(int r, int c) { return Matrix(r, c); }

    Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool is_zero() const;
    friend Matrix operator+(const Matrix& x, const Matrix& y);
    friend Matrix operator-(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    Matrix operator-() const;
    Matrix scaled(const Rational& c) const;
    bool operator==(const Matrix&) const = default;
};

/// Incremental exact row reduction.  Rows are reduced against the pivots
/// accumulated so far; pivot columns are chosen left to right, so the result
/// is deterministic for a fixed insertion order.
class RowReducer {
public:
    explicit RowReducer(int cols) : cols_(cols) {}

    /// Reduces v against the current echelon rows (in place).  Returns the
    /// pivot column if v was independent (and absorbed), -1 otherwise.
    int add_row(std::vector<Rational> v);

    /// Reduces v against the echelon rows without absorbing it.
    void reduce(std::vector<Rational>& v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const std::vector<int>& pivot_cols() const { return pivots_; }
    bool is_pivot(int col) const;

    /// Columns that are not pivots, ascending.
    std::vector<int> free_cols() const;

    /// Fully reduced echelon rows (pivot entries 1, pivots cleared above).
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

private:
    int cols_;
    std::vector<std::vector<Rational>> rows_; // echelon, pivot entry 1
    std::vector<int> pivots_;                 // pivot col per row, sorted
};

int rank_of(const Matrix& m);

/// Basis of ker(m) as columns-of-coefficients vectors (deterministic).
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

/// Solves m x = b; returns empty vector if inconsistent (b must be flagged
/// by the caller via solvable()).
struct LinearSolve {
    bool ok = false;
    std::vector<Rational> x;
};
LinearSolve solve(const Matrix& m, const std::vector<Rational>& b);

std::vector<Rational> apply(const Matrix& m, const std::vector<Rational>& v);

} // namespace disjcalc

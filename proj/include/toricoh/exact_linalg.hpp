#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "toricoh/common.hpp"

namespace toricoh {

using IntVector = std::vector<mpz_class>;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols_if_empty = 0);
    static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows_if_empty = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;
    IntMatrix transpose() const;
    IntMatrix select_rows(const std::vector<std::size_t>& idx) const;

    /// Rows as machine integers; throws InvalidInput if an entry does not fit.
    std::vector<std::vector<long>> to_long_rows() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntVector operator*(const IntMatrix& a, const IntVector& x);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// U * A * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ... | d_rank.
struct SnfResult {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    std::size_t rank = 0;

    IntVector invariant_factors() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// Lattice basis of {x in Z^cols : A x = 0}; saturated by construction.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

/// Some integer solution of A x = b, or nullopt if none exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Row-style Hermite normal form with zero rows dropped: pivots positive,
/// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_rows(const IntMatrix& a);

/// Basis (as columns) of the lattice spanned by the columns of A.
IntMatrix image_basis(const IntMatrix& a);

mpz_class determinant(const IntMatrix& a);

std::size_t rank_over_field(const IntMatrix& a, Characteristic ch);

/// Extremal minors of an n x d matrix of rank d.
struct MinorStats {
    /// max_abs_minor[j] = Q_j, the largest |j x j minor|; index 0 holds 1.
    std::vector<mpz_class> max_abs_minor;
    /// q_d, the smallest nonzero |d x d minor|.
    mpz_class min_nonzero_top;
};

MinorStats minor_stats(const IntMatrix& a, std::size_t d);

/// Sparse matrix with small integer entries, one sorted row per vector.
/// This is the shape of every coboundary map in the library.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, int>>> entries;
};

std::size_t rank_over_field(const SparseMatrix& a, Characteristic ch);

}  // namespace toricoh

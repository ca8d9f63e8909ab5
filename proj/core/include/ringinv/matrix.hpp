#pragma once

#include "ringinv/gaussian_rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ringinv {

/// Dense k x k matrix over the Gaussian rationals.
class Matrix {
public:
    explicit Matrix(std::size_t dim);
    static Matrix identity(std::size_t dim);
    /// Builds from row-major rows; throws std::invalid_argument unless square.
    static Matrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);

    std::size_t dim() const noexcept { return dim_; }

    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }

    std::span<const GaussianRational> entries() const noexcept { return data_; }

    bool is_zero() const;

    Matrix transpose() const;
    Matrix conjugate_transpose() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const GaussianRational& s, Matrix m);
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t dim_;
    std::vector<GaussianRational> data_;
};

/// Reduced row echelon form with the accumulated row operations:
/// `transform * input == reduced`, `transform` invertible.
struct RowEchelon {
    Matrix reduced;
    Matrix transform;
    std::vector<std::size_t> pivot_columns;

    std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination. The pivot in each column is the first nonzero
/// entry at or below the current row.
RowEchelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact inverse, or nullopt for a singular matrix.
std::optional<Matrix> invert(const Matrix& m);

/// Invertible row_ops, col_ops with `row_ops * m * col_ops == [I_r 0; 0 0]`.
struct RankNormalForm {
    Matrix row_ops;
    Matrix col_ops;
    std::size_t rank;
};

RankNormalForm rank_normal_form(const Matrix& m);

/// Block matrix [I_r 0; 0 0] of the given dimension.
Matrix rank_projector(std::size_t dim, std::size_t rank);

/// Solves `a * x == b`; free unknowns are set to zero. nullopt if inconsistent.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

/// Solves `x * a == b`; free unknowns are set to zero. nullopt if inconsistent.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);

}  // namespace ringinv

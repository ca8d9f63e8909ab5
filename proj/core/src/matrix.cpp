#include "ringinv/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ringinv {

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = GaussianRational(1);
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
    Matrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) {
            throw std::invalid_argument("matrix must be square");
        }
        for (std::size_t c = 0; c < rows.size(); ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : data_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

Matrix Matrix::conjugate_transpose() const {
    Matrix t(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            t(c, r) = (*this)(r, c).conj();
        }
    }
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += o.data_[i];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= o.data_[i];
    }
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.dim_;
    Matrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto& lhs = a(r, k);
            if (lhs.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += lhs * b(k, c);
            }
        }
    }
    return out;
}

Matrix operator*(const GaussianRational& s, Matrix m) {
    for (auto& e : m.data_) {
        e *= s;
    }
    return m;
}

Matrix Matrix::operator-() const {
    Matrix out(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = -data_[i];
    }
    return out;
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < m.dim(); ++c) {
        std::swap(m(a, c), m(b, c));
    }
}

void scale_row(Matrix& m, std::size_t r, const GaussianRational& s) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
        m(r, c) *= s;
    }
}

// row[target] -= factor * row[source]
void eliminate_row(Matrix& m, std::size_t target, std::size_t source, const GaussianRational& factor) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
        if (!m(source, c).is_zero()) {
            m(target, c) -= factor * m(source, c);
        }
    }
}

}  // namespace

RowEchelon row_reduce(const Matrix& m) {
    const std::size_t n = m.dim();
    Matrix reduced = m;
    Matrix transform = Matrix::identity(n);
    std::vector<std::size_t> pivots;

    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && reduced(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            continue;
        }
        swap_rows(reduced, row, pivot);
        swap_rows(transform, row, pivot);

        const GaussianRational inv = reduced(row, col).reciprocal();
        scale_row(reduced, row, inv);
        scale_row(transform, row, inv);

        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || reduced(r, col).is_zero()) {
                continue;
            }
            const GaussianRational factor = reduced(r, col);
            eliminate_row(reduced, r, row, factor);
            eliminate_row(transform, r, row, factor);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(reduced), std::move(transform), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::optional<Matrix> invert(const Matrix& m) {
    RowEchelon ech = row_reduce(m);
    if (ech.rank() != m.dim()) {
        return std::nullopt;
    }
    return std::move(ech.transform);
}

Matrix rank_projector(std::size_t dim, std::size_t rank) {
    Matrix p(dim);
    for (std::size_t i = 0; i < rank; ++i) {
        p(i, i) = GaussianRational(1);
    }
    return p;
}

RankNormalForm rank_normal_form(const Matrix& m) {
    const std::size_t n = m.dim();
    RowEchelon ech = row_reduce(m);
    const std::size_t r = ech.rank();

    // Column order: pivot columns first, then the free columns.
    std::vector<std::size_t> order = ech.pivot_columns;
    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivot_columns) {
        is_pivot[c] = true;
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) {
            order.push_back(c);
        }
    }
    Matrix perm(n);
    for (std::size_t j = 0; j < n; ++j) {
        perm(order[j], j) = GaussianRational(1);
    }

    // reduced * perm = [I_r M; 0 0]; clear M with [I -M; 0 I].
    Matrix permuted = ech.reduced * perm;
    Matrix clear = Matrix::identity(n);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = r; j < n; ++j) {
            clear(i, j) = -permuted(i, j);
        }
    }
    return {std::move(ech.transform), perm * clear, r};
}

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.dim();
    RowEchelon ech = row_reduce(a);
    Matrix rhs = ech.transform * b;
    for (std::size_t r = ech.rank(); r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (!rhs(r, c).is_zero()) {
                return std::nullopt;
            }
        }
    }
    Matrix x(n);
    for (std::size_t i = 0; i < ech.rank(); ++i) {
        for (std::size_t c = 0; c < n; ++c) {
            x(ech.pivot_columns[i], c) = rhs(i, c);
        }
    }
    return x;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
    auto xt = solve_right(a.transpose(), b.transpose());
    if (!xt) {
        return std::nullopt;
    }
    return xt->transpose();
}

}  // namespace ringinv

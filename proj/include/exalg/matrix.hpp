#ifndef EXALG_MATRIX_HPP
#define EXALG_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "exalg/scalar.hpp"

namespace exalg {

// Dense matrix over an exact field.  Elimination never pivots on magnitude;
// exact equality makes any nonzero pivot valid.
template <class S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const S& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::domain_error("Matrix: shape mismatch in product");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const S& x = at(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const S& y = o.at(k, j);
                    if (!is_zero(y)) r.at(i, j) += x * y;
                }
            }
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("Matrix: shape mismatch");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Matrix conj_transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = conj(at(i, j));
        return r;
    }

    // In-place reduced row-echelon form; returns pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && is_zero(at(piv, col))) ++piv;
            if (piv == rows_) continue;
            if (piv != row)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(row, j));
            S inv = S(1) / at(row, col);
            for (std::size_t j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || is_zero(at(i, col))) continue;
                S f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j) at(i, j) = at(i, j) - f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    // Basis of {x : A x = 0}, one vector per free column, in RREF-canonical order.
    std::vector<std::vector<S>> kernel_basis() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::vector<S>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<S> v(cols_, S(0));
            v[free] = S(1);
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Solves A x = b exactly; nullopt if inconsistent.  With free columns the
    // solution sets them to zero.
    std::optional<std::vector<S>> solve(const std::vector<S>& b) const {
        if (b.size() != rows_) throw std::domain_error("Matrix::solve: bad rhs size");
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<S> x(cols_, S(0));
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
        return x;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) throw std::domain_error("Matrix::inverse: not square");
        Matrix aug(rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = S(1);
        }
        auto pivots = aug.rref();
        if (pivots.size() != rows_) return std::nullopt;
        if (rows_ > 0 && pivots.back() != rows_ - 1) return std::nullopt;
        Matrix inv(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
        return inv;
    }

private:
    std::size_t rows_, cols_;
    std::vector<S> a_;
};

}  // namespace exalg

#endif

#pragma once

#include <span>
#include <vector>

#include "molq/scalar.hpp"

namespace molq {

/// Dense exact matrix over the Gaussian rationals. Everything in this project
/// lives in dimension <= 16, so the representation is a flat dense array and
/// elimination is plain Gauss-Jordan with exact division.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }

    Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    [[nodiscard]] const Scalar& at(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    [[nodiscard]] std::span<const Scalar> row(int i) const {
        return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
    }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    void swap_rows(int i, int j);
    void truncate_rows(int r);
    void append_row(std::span<const Scalar> r);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& m);

/// Entry (i, j) of the result is conj of entry (j, i); over Q this is the
/// plain transpose.
Matrix conj_transpose(const Matrix& m);

Matrix stack(const Matrix& top, const Matrix& bottom);
Matrix select_columns(const Matrix& m, std::span<const int> cols);

struct Echelon {
    Matrix reduced;            ///< reduced row echelon form, zero rows removed
    std::vector<int> pivots;   ///< pivot column per remaining row
};

Echelon echelon(const Matrix& m);
Matrix rref(const Matrix& m);
int rank(const Matrix& m);

/// Canonical basis (rref rows) of {v : m v^T = 0}. rank(m) + kernel rows = cols(m).
Matrix kernel(const Matrix& m);

/// Exact inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace molq

#include "molq/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace molq {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return {};
    const int cols = static_cast<int>(rows.front().size());
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw std::invalid_argument("ragged rows in matrix literal");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

void Matrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void Matrix::truncate_rows(int r) {
    rows_ = r;
    data_.resize(static_cast<std::size_t>(r) * cols_);
}

void Matrix::append_row(std::span<const Scalar> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch in +");
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch in -");
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in *");
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = c * m.at(i, j);
    return out;
}

Matrix conj_transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j).conj();
    return out;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw std::invalid_argument("column mismatch in stack");
    Matrix out(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) out.at(top.rows() + i, j) = bottom.at(i, j);
    return out;
}

Matrix select_columns(const Matrix& m, std::span<const int> cols) {
    Matrix out(m.rows(), static_cast<int>(cols.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out.at(i, j) = m.at(i, cols[j]);
    return out;
}

Echelon echelon(const Matrix& m) {
    Echelon e;
    e.reduced = m;
    Matrix& r = e.reduced;
    int lead = 0;
    for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
        int pivot = -1;
        for (int i = lead; i < r.rows(); ++i) {
            if (!r.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        r.swap_rows(lead, pivot);
        const Scalar inv = Scalar(1) / r.at(lead, col);
        for (int j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            const Scalar f = r.at(i, col);
            for (int j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        e.pivots.push_back(col);
        ++lead;
    }
    r.truncate_rows(static_cast<int>(e.pivots.size()));
    return e;
}

Matrix rref(const Matrix& m) { return echelon(m).reduced; }

int rank(const Matrix& m) { return static_cast<int>(echelon(m).pivots.size()); }

Matrix kernel(const Matrix& m) {
    const int n = m.cols();
    const Echelon e = echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (int p : e.pivots) is_pivot[p] = true;

    Matrix basis(0, n);
    std::vector<Scalar> v(static_cast<std::size_t>(n));
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::fill(v.begin(), v.end(), Scalar(0));
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced.at(static_cast<int>(k), f);
        basis.append_row(v);
    }
    if (basis.rows() == 0) return Matrix(0, n);
    return rref(basis);
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const Echelon e = echelon(aug);
    if (static_cast<int>(e.pivots.size()) != n || e.pivots.back() != n - 1)
        throw std::domain_error("matrix is singular");
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = e.reduced.at(i, n + j);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
    }
    return os << "]";
}

}  // namespace molq

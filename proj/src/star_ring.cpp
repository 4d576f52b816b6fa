#include "molq/star_ring.hpp"

#include <stdexcept>

namespace molq {

Matrix mp_inverse(const Matrix& a) {
    const Echelon e = echelon(a);
    const int r = static_cast<int>(e.pivots.size());
    if (r == 0) return {a.cols(), a.rows()};

    // Full-rank factorization: the pivot columns of a times its rref.
    const Matrix b = select_columns(a, e.pivots);  // m x r
    const Matrix& c = e.reduced;                   // r x n
    const Matrix bs = conj_transpose(b);
    const Matrix cs = conj_transpose(c);
    return cs * inverse(c * cs) * inverse(bs * b) * bs;
}

bool is_projection(const Matrix& p) {
    return p.is_square() && p * p == p && conj_transpose(p) == p;
}

ProjMatrix::ProjMatrix(Matrix m) : p(std::move(m)) {
    if (!is_projection(p)) throw std::invalid_argument("not a projection (p = p^2 = p*)");
}

bool proj_leq(const ProjMatrix& e, const ProjMatrix& f) {
    if (e.size() != f.size()) throw std::invalid_argument("projection size mismatch");
    return f.p * e.p == e.p;
}

ProjMatrix proj_join(const ProjMatrix& e, const ProjMatrix& f) {
    if (e.size() != f.size()) throw std::invalid_argument("projection size mismatch");
    const Matrix s = e.p + f.p;
    return ProjMatrix(s * mp_inverse(s));
}

ProjMatrix proj_ortho(const ProjMatrix& e) {
    return ProjMatrix(Matrix::identity(e.size()) - e.p);
}

ProjMatrix proj_meet(const ProjMatrix& e, const ProjMatrix& f) {
    return proj_ortho(proj_join(proj_ortho(e), proj_ortho(f)));
}

Subspace proj_to_subspace(const ProjMatrix& e, Field field) {
    return Subspace::from_rows(field, e.size(), e.p);
}

ProjMatrix subspace_to_proj(const Subspace& u) {
    const int m = u.ambient();
    if (u.dim() == 0) return ProjMatrix(Matrix(m, m));
    const Matrix& b = u.basis();
    const Matrix bs = conj_transpose(b);
    return ProjMatrix(bs * inverse(b * bs) * b);
}

Matrix block_double(const Matrix& x) {
    if (!x.is_square()) throw std::invalid_argument("block_double expects a square matrix");
    const int m = x.rows();
    Matrix out(2 * m, 2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            out.at(i, j) = x.at(i, j);
            out.at(m + i, m + j) = x.at(i, j);
        }
    return out;
}

}  // namespace molq

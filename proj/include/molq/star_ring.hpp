#pragma once

#include "molq/subspace.hpp"

namespace molq {

/// The unique pseudo-inverse a+ with a a+ a = a, a+ a a+ = a+ and both
/// a a+ and a+ a self-adjoint. Computed exactly through the rank
/// factorization a = b c taken from the rref of a:
/// a+ = c* (c c*)^-1 (b* b)^-1 b*. Defined for every matrix, zero included.
Matrix mp_inverse(const Matrix& a);

bool is_projection(const Matrix& p);

/// Projection of a matrix *-ring: square, idempotent and self-adjoint,
/// checked at construction.
struct ProjMatrix {
    Matrix p;

    explicit ProjMatrix(Matrix m);

    [[nodiscard]] int size() const { return p.rows(); }
    friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;
};

/// e <= f iff f e = e.
bool proj_leq(const ProjMatrix& e, const ProjMatrix& f);

/// Ring-term realizations of the projection-lattice operations:
/// join = (e+f)(e+f)+, ortho = 1 - e, meet by De Morgan.
ProjMatrix proj_join(const ProjMatrix& e, const ProjMatrix& f);
ProjMatrix proj_meet(const ProjMatrix& e, const ProjMatrix& f);
ProjMatrix proj_ortho(const ProjMatrix& e);

/// Mutually inverse order isomorphisms between the projection lattice of
/// M_m(F) and L(F^m): a projection corresponds to its fixed row space, a
/// subspace to the orthogonal projector onto it.
Subspace proj_to_subspace(const ProjMatrix& e, Field field);
ProjMatrix subspace_to_proj(const Subspace& u);

/// The *-ring embedding X -> diag(X, X) into matrices of twice the size.
Matrix block_double(const Matrix& x);

}  // namespace molq

#include "molq/sampling.hpp"

namespace molq {

int Sampler::uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Scalar Sampler::scalar(Field field) {
    const Rational re(uniform(-3, 3));
    if (field == Field::Q) return {re};
    return {re, Rational(uniform(-3, 3))};
}

Matrix Sampler::matrix(Field field, int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = scalar(field);
    return m;
}

Subspace Sampler::subspace(const Lattice& lattice) {
    return subspace_of_dim(lattice, uniform(0, lattice.dim));
}

Subspace Sampler::subspace_of_dim(const Lattice& lattice, int k) {
    // Sampled rows may be dependent, in which case the space is thinner than
    // asked for; that is fine for law checks.
    return Subspace::from_rows(lattice.field, lattice.dim, matrix(lattice.field, k, lattice.dim));
}

std::vector<Subspace> Sampler::chain4(const Lattice& lattice, bool force_complement) {
    const Subspace c0 = subspace_of_dim(lattice, uniform(0, 1));
    if (!force_complement) {
        const Subspace c1 = join(c0, subspace(lattice));
        const Subspace c2 = join(c0, subspace(lattice));
        const Subspace c3 = join(join(c1, c2), subspace_of_dim(lattice, uniform(0, 1)));
        return {c0, c1, c2, c3};
    }
    const Subspace c3 = join(c0, subspace(lattice));
    const Subspace c2 = join(c0, meet(subspace(lattice), c3));
    // Relative orthocomplement of c2 in [c0, c3]: a genuine complement there.
    const Subspace c1 = join(meet(ortho(c2), c3), c0);
    return {c0, c1, c2, c3};
}

TermPtr Sampler::term(int max_vars, int depth) {
    const int leaf = uniform(0, depth == 0 ? 2 : 5);
    switch (leaf) {
        case 0: return Term::var("x" + std::to_string(uniform(1, max_vars)));
        case 1: return Term::zero();
        case 2: return Term::one();
        case 3: return Term::ortho(term(max_vars, depth - 1));
        case 4: return Term::meet(term(max_vars, depth - 1), term(max_vars, depth - 1));
        default: return Term::join(term(max_vars, depth - 1), term(max_vars, depth - 1));
    }
}

}  // namespace molq

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "molq/subspace.hpp"
#include "molq/term.hpp"

namespace molq {

/// Seeded, reproducible sample generation for the randomized law suites.
/// Entries are small integers so exact arithmetic stays fast.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi);  // inclusive bounds

    Scalar scalar(Field field);
    Matrix matrix(Field field, int rows, int cols);

    Subspace subspace(const Lattice& lattice);                 // dimension drawn 0..d
    Subspace subspace_of_dim(const Lattice& lattice, int k);   // spanned by k sampled rows

    /// c0 <= c1,c2 <= c3; with force_complement the pair (c1, c2) is built to
    /// be complementary within [c0, c3].
    std::vector<Subspace> chain4(const Lattice& lattice, bool force_complement);

    /// Random term over variables x1..x`max_vars`.
    TermPtr term(int max_vars, int depth);

private:
    std::mt19937_64 rng_;
};

}  // namespace molq

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "molq/subspace.hpp"

namespace molq {

/// Outcome of one randomized law suite. Failure notes carry enough context to
/// reproduce (seed, sample index, law name).
struct LawReport {
    std::uint64_t checks = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
    void expect(bool condition, const std::string& note) {
        ++checks;
        if (!condition) failures.push_back(note);
    }
};

/// Ortholattice axioms (involution, order reversal, complementation) plus the
/// modular law on seeded random triples of L(field^dim).
LawReport mol_axiom_suite(const Lattice& lattice, int samples, std::uint64_t seed);

/// The four pseudo-inverse equations, commutation with block doubling, and
/// agreement of the projection-lattice operations with the subspace ones.
LawReport penrose_suite(Field field, int max_size, int samples, std::uint64_t seed);

/// Canonical frames verify for d in [d_min, d_max]; seeded search finds no
/// nontrivial d-frame one dimension short.
LawReport frame_suite(int d_min, int d_max, int tries, std::uint64_t seed);

}  // namespace molq

#pragma once

#include <span>
#include <string>
#include <vector>

#include "molq/subspace.hpp"

namespace molq {

/// A d-frame candidate: components a0..ad plus the designated bot and top.
/// Valid frames satisfy top = join of all components and, for every j and
/// every (d-1)-subset S of the other indices, a_j & (join over S) = bot.
struct Frame {
    int d = 0;
    std::vector<Subspace> a;  ///< d+1 components
    Subspace bot, top;

    [[nodiscard]] bool is_trivial() const { return bot == top; }

    /// Tuple in the canonical order (bot, a0..ad, top), matching the
    /// z-variable order of the witness terms.
    [[nodiscard]] std::vector<Subspace> to_tuple() const;
    static Frame from_tuple(std::span<const Subspace> parts);

    friend bool operator==(const Frame&, const Frame&) = default;
};

struct FrameCheck {
    bool ok = false;
    bool trivial = false;
    std::vector<std::string> violations;
};

/// Exact verification of all frame axioms; violations name the failing law.
FrameCheck verify_frame(const Frame& f);

/// The coordinate-system frame of L(Q^d): a_i = span(e_{i+1}) for i < d,
/// a_d = span(e_1 + ... + e_d), bot = 0, top = Q^d. Requires d >= 2.
Frame canonical_frame(int d);

/// Normalization gadget: frames pass through unchanged, anything else
/// collapses to the trivial frame at the join of all inputs. Idempotent, and
/// the output always verifies.
Frame normalize_frame(const Frame& candidate);

/// Pairwise distinct atoms span(v0 + i*v1), i = 1..n, on the a0-a1 line of a
/// nontrivial frame with one-dimensional a0, a1. Each is a complement of a1
/// in [0, a0 | a1] and distinct from a1.
std::vector<Subspace> line_atoms(const Frame& f, int n);

}  // namespace molq

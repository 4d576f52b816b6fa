#pragma once

#include <cstdint>
#include <vector>

#include "molq/subspace.hpp"

namespace molq {

/// Element of the direct limit of L(F^(2^n)) along U -> U (+) U: a level n
/// and a subspace of the 2^n-dimensional space. Two elements are the same
/// limit point iff they agree after lifting to a common level.
struct LimitElement {
    int level = 0;
    Subspace space;
};

/// Levels are capped so every ambient dimension stays at most 16.
constexpr int kMaxLevel = 4;

LimitElement make_limit(int level, Subspace space);

/// The doubling embedding U -> {(u, v) : u, v in U} one level up. Commutes
/// with meet, join and ortho and preserves normalized dimension.
LimitElement doubled(const LimitElement& x);

LimitElement lift_to(const LimitElement& x, int level);

bool limit_equal(const LimitElement& x, const LimitElement& y);

LimitElement limit_meet(const LimitElement& x, const LimitElement& y);
LimitElement limit_join(const LimitElement& x, const LimitElement& y);
LimitElement limit_ortho(const LimitElement& x);

/// Normalized dimension r / 2^n; the value is kept in lowest terms, the
/// (numerator, level) pair as given.
struct DyadicDim {
    int numerator = 0;
    int level = 0;
    Rational value;
};

DyadicDim delta(const LimitElement& x);

/// delta(x | y) - delta(x & y); zero exactly on equal limit elements.
Rational limit_metric(const LimitElement& x, const LimitElement& y);

/// Deterministic enumeration at one level: the 2^(2^level) coordinate
/// subspaces in bitmask order, then `random_count` seeded samples.
std::vector<LimitElement> testset_enumeration(int level, int random_count, std::uint64_t seed);

/// Realification of a Qi-subspace: coordinates interleave as
/// (re_1, im_1, ..., re_k, im_k), dimension doubles, and meet, join and
/// ortho are preserved.
Subspace realify(const Subspace& u);

}  // namespace molq

#include "molq/limit.hpp"

#include <stdexcept>

#include "molq/sampling.hpp"

namespace molq {

namespace {

int ambient_for(int level) { return 1 << level; }

void require_level(int level) {
    if (level < 0 || level > kMaxLevel)
        throw std::invalid_argument("level must lie in [0, " + std::to_string(kMaxLevel) + "]");
}

}  // namespace

LimitElement make_limit(int level, Subspace space) {
    require_level(level);
    if (space.ambient() != ambient_for(level))
        throw std::invalid_argument("ambient dimension must be 2^level");
    return {level, std::move(space)};
}

LimitElement doubled(const LimitElement& x) {
    require_level(x.level + 1);
    const int m = x.space.ambient();
    const Matrix& b = x.space.basis();
    Matrix rows(2 * b.rows(), 2 * m);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < m; ++j) {
            rows.at(i, j) = b.at(i, j);
            rows.at(b.rows() + i, m + j) = b.at(i, j);
        }
    return {x.level + 1, Subspace::from_rows(x.space.field(), 2 * m, rows)};
}

LimitElement lift_to(const LimitElement& x, int level) {
    if (level < x.level) throw std::invalid_argument("cannot lift below the element's level");
    LimitElement out = x;
    while (out.level < level) out = doubled(out);
    return out;
}

namespace {

std::pair<Subspace, Subspace> at_common_level(const LimitElement& x, const LimitElement& y) {
    const int level = std::max(x.level, y.level);
    return {lift_to(x, level).space, lift_to(y, level).space};
}

}  // namespace

bool limit_equal(const LimitElement& x, const LimitElement& y) {
    const auto [a, b] = at_common_level(x, y);
    return a == b;
}

LimitElement limit_meet(const LimitElement& x, const LimitElement& y) {
    const int level = std::max(x.level, y.level);
    const auto [a, b] = at_common_level(x, y);
    return {level, meet(a, b)};
}

LimitElement limit_join(const LimitElement& x, const LimitElement& y) {
    const int level = std::max(x.level, y.level);
    const auto [a, b] = at_common_level(x, y);
    return {level, join(a, b)};
}

LimitElement limit_ortho(const LimitElement& x) { return {x.level, ortho(x.space)}; }

DyadicDim delta(const LimitElement& x) {
    Rational value(x.space.dim(), ambient_for(x.level));
    value.canonicalize();
    return {x.space.dim(), x.level, value};
}

Rational limit_metric(const LimitElement& x, const LimitElement& y) {
    return delta(limit_join(x, y)).value - delta(limit_meet(x, y)).value;
}

std::vector<LimitElement> testset_enumeration(int level, int random_count, std::uint64_t seed) {
    require_level(level);
    const int m = ambient_for(level);
    std::vector<LimitElement> out;
    out.reserve((static_cast<std::size_t>(1) << m) + static_cast<std::size_t>(random_count));

    for (std::uint64_t mask = 0; mask < (static_cast<std::uint64_t>(1) << m); ++mask) {
        Matrix rows(0, m);
        std::vector<Scalar> row(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            std::fill(row.begin(), row.end(), Scalar(0));
            row[static_cast<std::size_t>(i)] = 1;
            rows.append_row(row);
        }
        out.push_back({level, Subspace::from_rows(Field::Q, m, rows)});
    }

    Sampler sampler(seed);
    const Lattice lat{Field::Q, m};
    for (int i = 0; i < random_count; ++i) out.push_back({level, sampler.subspace(lat)});
    return out;
}

Subspace realify(const Subspace& u) {
    if (u.field() != Field::Qi) throw std::invalid_argument("realify expects a Qi subspace");
    const int k = u.ambient();
    const Matrix& b = u.basis();
    // Each complex basis row contributes the realifications of itself and of
    // i times itself.
    Matrix rows(2 * b.rows(), 2 * k);
    for (int r = 0; r < b.rows(); ++r)
        for (int j = 0; j < k; ++j) {
            const Scalar& e = b.at(r, j);
            rows.at(2 * r, 2 * j) = Scalar(e.re());
            rows.at(2 * r, 2 * j + 1) = Scalar(e.im());
            // i * (re + im i) = -im + re i
            rows.at(2 * r + 1, 2 * j) = Scalar(-e.im());
            rows.at(2 * r + 1, 2 * j + 1) = Scalar(e.re());
        }
    return Subspace::from_rows(Field::Q, 2 * k, rows);
}

}  // namespace molq

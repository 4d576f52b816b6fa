#include "molq/frame.hpp"

#include <stdexcept>

namespace molq {

std::vector<Subspace> Frame::to_tuple() const {
    std::vector<Subspace> parts;
    parts.reserve(a.size() + 2);
    parts.push_back(bot);
    parts.insert(parts.end(), a.begin(), a.end());
    parts.push_back(top);
    return parts;
}

Frame Frame::from_tuple(std::span<const Subspace> parts) {
    if (parts.size() < 4) throw std::invalid_argument("frame tuple needs at least 4 entries");
    Frame f;
    f.d = static_cast<int>(parts.size()) - 3;
    f.bot = parts.front();
    f.top = parts.back();
    f.a.assign(parts.begin() + 1, parts.end() - 1);
    return f;
}

namespace {

std::string idx(int i) { return std::to_string(i); }

}  // namespace

FrameCheck verify_frame(const Frame& f) {
    FrameCheck out;
    if (f.d < 1 || static_cast<int>(f.a.size()) != f.d + 1) {
        out.violations.push_back("component count does not match d");
        return out;
    }
    const Lattice lat = f.bot.lattice();
    for (const Subspace& s : f.a) {
        if (s.lattice() != lat || f.top.lattice() != lat) {
            out.violations.push_back("components live in different spaces");
            return out;
        }
    }

    Subspace all = f.a[0];
    for (int i = 1; i <= f.d; ++i) all = join(all, f.a[i]);
    if (all != f.top) out.violations.push_back("top != join of a0..a" + idx(f.d));

    // Diamond law, join half: leaving out any one component still joins to
    // top. Without it tuples like (1, 0, ..., 0) would pass as nontrivial
    // frames, and those have no atom components.
    const int m = f.d + 1;
    for (int j = 0; j < m; ++j) {
        Subspace rest = f.bot;
        for (int i = 0; i < m; ++i)
            if (i != j) rest = join(rest, f.a[i]);
        if (rest != f.top)
            out.violations.push_back("join of all a_i, i != " + idx(j) + ", is not top");
    }

    // Diamond law, meet half (general position): a_j meets the join of every
    // (d-1)-subset of the other components in bot.
    for (int j = 0; j < m; ++j) {
        std::vector<int> others;
        for (int i = 0; i < m; ++i)
            if (i != j) others.push_back(i);
        // all (d-1)-subsets of the d indices in `others`: drop one at a time
        for (int skip = 0; skip < f.d; ++skip) {
            Subspace s = lat.zero();
            std::string names;
            for (int t = 0; t < f.d; ++t) {
                if (t == skip) continue;
                s = join(s, f.a[others[t]]);
                names += (names.empty() ? "" : "|") + std::string("a") + idx(others[t]);
            }
            if (meet(f.a[j], s) != f.bot)
                out.violations.push_back("a" + idx(j) + " & (" + names + ") != bot");
        }
    }

    out.ok = out.violations.empty();
    out.trivial = out.ok && f.is_trivial();
    return out;
}

Frame canonical_frame(int d) {
    if (d < 2) throw std::invalid_argument("canonical_frame requires d >= 2");
    const Lattice lat{Field::Q, d};
    Frame f;
    f.d = d;
    for (int i = 0; i < d; ++i) {
        Matrix row(1, d);
        row.at(0, i) = 1;
        f.a.push_back(Subspace::from_rows(Field::Q, d, row));
    }
    Matrix diag(1, d);
    for (int j = 0; j < d; ++j) diag.at(0, j) = 1;
    f.a.push_back(Subspace::from_rows(Field::Q, d, diag));
    f.bot = lat.zero();
    f.top = lat.one();
    return f;
}

Frame normalize_frame(const Frame& candidate) {
    if (verify_frame(candidate).ok) return candidate;
    Subspace all = join(candidate.bot, candidate.top);
    for (const Subspace& s : candidate.a) all = join(all, s);
    Frame f;
    f.d = candidate.d;
    f.a.assign(candidate.a.size(), all);
    f.bot = all;
    f.top = all;
    return f;
}

std::vector<Subspace> line_atoms(const Frame& f, int n) {
    if (f.is_trivial()) throw std::invalid_argument("line_atoms requires a nontrivial frame");
    if (f.a.size() < 2 || f.a[0].dim() != 1 || f.a[1].dim() != 1)
        throw std::invalid_argument("line_atoms requires one-dimensional a0 and a1");
    const auto v0 = f.a[0].basis().row(0);
    const auto v1 = f.a[1].basis().row(0);
    std::vector<Subspace> atoms;
    atoms.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        std::vector<Scalar> v(v0.begin(), v0.end());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += Scalar(i) * v1[j];
        atoms.push_back(Subspace::span_vector(f.a[0].field(), v));
    }
    return atoms;
}

}  // namespace molq

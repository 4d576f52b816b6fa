#include <doctest.h>

#include "molq/parser.hpp"
#include "molq/sampling.hpp"
#include "molq/subspace.hpp"

using namespace molq;

namespace {

const Lattice kQ2{Field::Q, 2};
const Lattice kQ3{Field::Q, 3};
const Lattice kQ4{Field::Q, 4};

Subspace span_q(int ambient, std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Scalar>> data;
    for (const auto& r : rows) data.emplace_back(r.begin(), r.end());
    return Subspace::from_rows(Field::Q, ambient, Matrix::from_rows(data));
}

}  // namespace

TEST_CASE("meet and join basics") {
    const Subspace e1 = span_q(2, {{1, 0}});
    const Subspace e2 = span_q(2, {{0, 1}});
    const Subspace diag = span_q(2, {{1, 1}});

    CHECK(meet(e1, diag) == kQ2.zero());
    CHECK(meet(e1, e1) == e1);
    CHECK(join(e1, e2) == kQ2.one());
    CHECK(join(e1, kQ2.zero()) == e1);
    CHECK_THROWS_AS(join(e1, span_q(3, {{1, 0, 0}})), std::invalid_argument);
}

TEST_CASE("ortho basics") {
    const Subspace e1 = span_q(2, {{1, 0}});
    CHECK(ortho(e1) == span_q(2, {{0, 1}}));
    CHECK(ortho(kQ2.zero()) == kQ2.one());
    CHECK(ortho(kQ2.one()) == kQ2.zero());
}

TEST_CASE("lattice laws on random samples") {
    Sampler sampler(2024);
    for (const Lattice lat : {kQ4, Lattice{Field::Qi, 3}}) {
        for (int round = 0; round < 60; ++round) {
            const Subspace u = sampler.subspace(lat);
            const Subspace v = sampler.subspace(lat);
            const Subspace w = sampler.subspace(lat);

            CHECK(meet(u, v).dim() + join(u, v).dim() == u.dim() + v.dim());
            CHECK(join(join(u, v), w) == join(u, join(v, w)));
            CHECK(meet(meet(u, v), w) == meet(u, meet(v, w)));
            CHECK(ortho(ortho(u)) == u);
            CHECK(ortho(u).dim() == lat.dim - u.dim());
            CHECK(meet(u, ortho(u)) == lat.zero());
            CHECK(join(u, ortho(u)) == lat.one());
            // De Morgan, a consequence worth pinning for the Qi case.
            CHECK(ortho(join(u, v)) == meet(ortho(u), ortho(v)));
        }
    }
}

TEST_CASE("outputs are already canonical") {
    Sampler sampler(5);
    for (int round = 0; round < 40; ++round) {
        const Subspace u = sampler.subspace(kQ4);
        const Subspace v = sampler.subspace(kQ4);
        for (const Subspace& s : {meet(u, v), join(u, v), ortho(u)})
            CHECK(Subspace::from_rows(s.field(), s.ambient(), s.basis()) == s);
    }
}

TEST_CASE("eval") {
    const Subspace e1 = span_q(2, {{1, 0}});
    CHECK(eval(parse("x | x'"), {{"x", e1}}, kQ2) == kQ2.one());
    CHECK(eval(parse("x & x'"), {{"x", e1}}, kQ2) == kQ2.zero());
    CHECK_THROWS_AS(eval(parse("x & y"), {{"x", e1}}, kQ2), EvalError);

    // Modular law through the identity-to-term translation, with x >= z.
    Sampler sampler(6);
    const TermPtr modular = identity_to_term(parse("x & (y | (z & x))"),
                                             parse("(x & y) | (z & x)"));
    for (int round = 0; round < 40; ++round) {
        Substitution sub{{"x", sampler.subspace(kQ3)},
                         {"y", sampler.subspace(kQ3)},
                         {"z", sampler.subspace(kQ3)}};
        CHECK(eval(modular, sub, kQ3) == kQ3.one());
    }
}

TEST_CASE("maximal chains have d+1 elements") {
    // Build a maximal chain explicitly by joining one basis vector at a time;
    // each step grows dimension by exactly 1, and nothing fits strictly
    // between consecutive entries.
    for (int d = 2; d <= 4; ++d) {
        const Lattice lat{Field::Q, d};
        std::vector<Subspace> chain{lat.zero()};
        for (int i = 0; i < d; ++i) {
            Matrix row(1, d);
            row.at(0, i) = 1;
            chain.push_back(join(chain.back(), Subspace::from_rows(Field::Q, d, row)));
        }
        CHECK(static_cast<int>(chain.size()) == d + 1);
        CHECK(chain.front() == lat.zero());
        CHECK(chain.back() == lat.one());
        for (int i = 0; i + 1 <= d; ++i) {
            CHECK(leq(chain[i], chain[i + 1]));
            CHECK(chain[i + 1].dim() == chain[i].dim() + 1);  // covering step
        }
    }
}

TEST_CASE("interval MOL and relative orthocomplement") {
    Sampler sampler(7);
    for (int round = 0; round < 40; ++round) {
        const Subspace b = sampler.subspace(kQ4);
        const Subspace c = join(b, sampler.subspace(kQ4));
        const IntervalMOL interval(b, c);
        const Subspace x = join(b, meet(sampler.subspace(kQ4), c));
        const Subspace r = interval.rel_ortho(x);
        CHECK(interval.contains(r));
        CHECK(meet(x, r) == b);
        CHECK(join(x, r) == c);
        CHECK(interval.rel_ortho(r) == x);  // involutive within the interval
    }
}

TEST_CASE("interval isomorphism onto a lower-dimensional lattice") {
    // The coordinate case: a = span{e1, e2} inside Q^4.
    const Subspace a = span_q(4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    const IntervalIso iso(a);
    CHECK(iso.chart().dim == 2);

    const Subspace u = span_q(4, {{1, 1, 0, 0}});
    CHECK(iso.to_chart(u) == span_q(2, {{1, 1}}));
    CHECK(iso.from_chart(iso.to_chart(u)) == u);

    Sampler sampler(8);
    for (int round = 0; round < 40; ++round) {
        const Subspace x = meet(sampler.subspace(kQ4), a);
        const Subspace y = meet(sampler.subspace(kQ4), a);
        CHECK(iso.to_chart(join(x, y)) == join(iso.to_chart(x), iso.to_chart(y)));
        CHECK(iso.to_chart(meet(x, y)) == meet(iso.to_chart(x), iso.to_chart(y)));
        CHECK((x == y) == (iso.to_chart(x) == iso.to_chart(y)));
        CHECK(iso.to_chart(x).dim() == x.dim());
    }

    // Identity chart when a is everything.
    const IntervalIso full(kQ3.one());
    const Subspace v = span_q(3, {{1, 2, 3}});
    CHECK(full.to_chart(v) == v);
}

TEST_CASE("general interval: perspectivity and tautology transfer") {
    Sampler sampler(9);
    const TermPtr taut = parse("(x | x') & (y | y')");
    const TermPtr mod = identity_to_term(parse("x & (y | (z & x))"), parse("(x & y) | (z & x)"));
    for (int round = 0; round < 10; ++round) {
        const Subspace b = sampler.subspace(kQ4);
        const Subspace c = join(b, sampler.subspace(kQ4));
        const IntervalIso iso(b, c);
        const IntervalMOL interval(b, c);

        // The perspectivity [b,c] ~ [0,a] is a mutually inverse pair.
        const Subspace x = join(b, meet(sampler.subspace(kQ4), c));
        CHECK(iso.from_axis(iso.to_axis(x)) == x);
        CHECK(iso.to_chart(x).dim() == x.dim() - b.dim());

        // Terms that hold in the big lattice hold in the interval, with the
        // interval's own orthocomplement.
        for (int s = 0; s < 10; ++s) {
            Substitution sub{{"x", join(b, meet(sampler.subspace(kQ4), c))},
                             {"y", join(b, meet(sampler.subspace(kQ4), c))},
                             {"z", join(b, meet(sampler.subspace(kQ4), c))}};
            CHECK(interval.eval(taut, sub) == c);
            CHECK(interval.eval(mod, sub) == c);
        }
    }
}

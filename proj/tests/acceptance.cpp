// Acceptance suite: one line per criterion, [PASS]/[FAIL], exit 0 only if
// everything passes. All checks are exact (zero tolerance); the wall-clock
// bounds are part of the criteria and enforced.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "molq/laws.hpp"
#include "molq/limit.hpp"
#include "molq/parser.hpp"
#include "molq/sampling.hpp"
#include "molq/star_ring.hpp"
#include "molq/testset.hpp"

using namespace molq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& note) {
        if (!ok && pass) {
            pass = false;
            detail = note;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Ortholattice + modular law, exact, d in {2,3,4,5}, 1000 triples each.
Outcome criterion_mol_axioms() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    for (int d = 2; d <= 5; ++d) {
        const LawReport report = mol_axiom_suite({Field::Q, d}, 1000, 1000 + d);
        out.require(report.ok(), "d=" + std::to_string(d) + ": " +
                                     (report.ok() ? "" : report.failures.front()));
    }
    out.require(seconds_since(start) < 30.0, "runtime bound 30 s exceeded");
    return out;
}

// 2. s-term contract on 500 chains in L(Q^4), >= 100 complement cases.
Outcome criterion_s_contract() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    const Lattice lat{Field::Q, 4};
    Sampler sampler(2002);
    const TermPtr s =
        s_term(Term::var("y0"), Term::var("y1"), Term::var("y2"), Term::var("y3"));
    int complement_cases = 0;
    for (int round = 0; round < 500; ++round) {
        const std::vector<Subspace> c = sampler.chain4(lat, round % 3 == 0);
        const Subspace r = eval(
            s, {{"y0", c[0]}, {"y1", c[1]}, {"y2", c[2]}, {"y3", c[3]}}, lat);
        out.require(meet(r, c[2]) == c[0], "r & c2 != c0");
        out.require(join(r, c[2]) == c[3], "r | c2 != c3");
        if (meet(c[1], c[2]) == c[0] && join(c[1], c[2]) == c[3]) {
            ++complement_cases;
            out.require(r == c[1], "fixed point missed on a complement chain");
        }
    }
    out.require(complement_cases >= 100,
                "only " + std::to_string(complement_cases) + " complement cases sampled");
    out.require(seconds_since(start) < 20.0, "runtime bound 20 s exceeded");
    if (out.pass) out.detail = std::to_string(complement_cases) + " complement cases";
    return out;
}

// 3. identity_to_term soundness, exhaustive over a fixed 4-element sample.
Outcome criterion_identity_soundness() {
    Outcome out;
    const Lattice lat{Field::Q, 2};
    Matrix e1(1, 2), diag(1, 2);
    e1.at(0, 0) = 1;
    diag.at(0, 0) = 1;
    diag.at(0, 1) = 1;
    const std::vector<Subspace> sample{lat.zero(), lat.one(),
                                       Subspace::from_rows(Field::Q, 2, e1),
                                       Subspace::from_rows(Field::Q, 2, diag)};
    Sampler sampler(2003);
    for (int round = 0; round < 20; ++round) {
        const TermPtr t1 = sampler.term(3, 3);
        const TermPtr t2 = sampler.term(3, 3);
        const TermPtr eq = identity_to_term(t1, t2);
        const std::vector<std::string> vars = variables(Term::meet(t1, t2));
        std::vector<std::size_t> idx(vars.size(), 0);
        bool more = true;
        while (more) {
            Substitution sub;
            for (std::size_t i = 0; i < vars.size(); ++i) sub[vars[i]] = sample[idx[i]];
            const bool top = eval(eq, sub, lat) == lat.one();
            const bool same = eval(t1, sub, lat) == eval(t2, sub, lat);
            out.require(top == same, "value 1 iff equal evaluations violated");
            more = false;
            for (std::size_t i = idx.size(); i-- > 0;) {
                if (++idx[i] < sample.size()) {
                    more = true;
                    break;
                }
                idx[i] = 0;
            }
        }
    }
    return out;
}

// 4. Witness value: eval of the witness term on the canonical frame plus
// distinct line atoms is exactly a1 | ... | a_{d-1}.
Outcome criterion_witness_value() {
    Outcome out;
    for (int d = 2; d <= 4; ++d) {
        const Lattice lat{Field::Q, d};
        const Frame frame = canonical_frame(d);
        Subspace expected = lat.zero();
        for (int k = 1; k <= d - 1; ++k) expected = join(expected, frame.a[k]);
        for (int n = 2; n <= 4; ++n) {
            const auto start = std::chrono::steady_clock::now();
            const TdnTerm t = tdn_term(d, n);
            const Subspace value = eval_tdn(t, frame, line_atoms(frame, n), lat);
            const double elapsed = seconds_since(start);
            const std::string tag = " (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")";
            out.require(value == expected, "witness value mismatch" + tag);
            out.require(value.dim() == d - 1, "witness dimension" + tag);
            out.require(value != lat.one(), "witness value not below 1" + tag);
            out.require(elapsed < 1.0, "per-case bound 1 s exceeded" + tag);
        }
    }
    return out;
}

std::vector<Subspace> distinct_random_subspaces(Sampler& sampler, const Lattice& lat, int count) {
    std::vector<Subspace> elements;
    std::set<std::string> seen;
    while (static_cast<int>(elements.size()) < count) {
        const Subspace s = sampler.subspace(lat);
        if (seen.insert(s.key()).second) elements.push_back(s);
    }
    return elements;
}

// 5. Pigeonhole direction: exhaustive substitution into the witness term with
// n = |T|+1 gives 1 over every sampled T, within the default budget.
Outcome criterion_pigeonhole() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t total = 0;
    for (int d = 2; d <= 3; ++d) {
        const Lattice lat{Field::Q, d};
        for (int round = 0; round < 10; ++round) {
            Sampler sampler(5000 + 100 * d + round);
            const int size = round % 3 + 1;
            const TestSet testset = make_testset(lat, distinct_random_subspaces(sampler, lat, size));
            const TdnTerm t = tdn_term(d, size + 1);
            const HoldsReport report = holds_over(TdnTarget{t}, testset, kDefaultBudget);
            total += report.stats.substitutions;
            out.require(report.holds, "witness term not 1 over a set of size " +
                                          std::to_string(size) + " (d=" + std::to_string(d) + ")");
        }
    }
    const double elapsed = seconds_since(start);
    out.require(elapsed < 300.0, "runtime bound 5 min exceeded");
    if (out.pass) {
        char buffer[64];
        std::snprintf(buffer, sizeof buffer, "%llu substitutions in %.1fs",
                      static_cast<unsigned long long>(total), elapsed);
        out.detail = buffer;
    }
    return out;
}

// 6. End-to-end refutation certificates, re-verified independently.
Outcome criterion_refuter() {
    Outcome out;
    const Lattice lat{Field::Q, 2};
    for (int round = 0; round < 10; ++round) {
        Sampler sampler(6000 + round);
        const int size = round % 3 + 1;
        const TestSet testset = make_testset(lat, distinct_random_subspaces(sampler, lat, size));
        const RefutationCertificate cert = refute_testset(testset);
        out.require(cert.testset_check.holds, "exhaustive direction failed");
        out.require(cert.witness_value != lat.one(), "witness value is 1");
        out.require(cert.tdn.n == size + 1, "n != |T|+1");
        out.require(verify_certificate(cert, testset), "independent re-check failed");
    }
    return out;
}

// 7. Doubling embedding: operations and normalized dimension are preserved.
Outcome criterion_doubling() {
    Outcome out;
    Sampler sampler(7007);
    for (int round = 0; round < 200; ++round) {
        const int level = sampler.uniform(0, 3);
        const Lattice lat{Field::Q, 1 << level};
        const LimitElement x{level, sampler.subspace(lat)};
        const LimitElement y{level, sampler.subspace(lat)};

        out.require(doubled(limit_meet(x, y)).space == limit_meet(doubled(x), doubled(y)).space,
                    "meet not preserved");
        out.require(doubled(limit_join(x, y)).space == limit_join(doubled(x), doubled(y)).space,
                    "join not preserved");
        out.require(doubled(limit_ortho(x)).space == limit_ortho(doubled(x)).space,
                    "ortho not preserved");
        out.require(delta(doubled(x)).value == delta(x).value, "delta changed under doubling");

        Rational scaled = delta(x).value * (1 << level);
        scaled.canonicalize();
        out.require(scaled.get_den() == 1, "delta denominator does not divide 2^level");
    }
    return out;
}

// 8. Complexification: realify preserves meet, join, ortho exactly.
Outcome criterion_realify() {
    Outcome out;
    Sampler sampler(8008);
    for (int k = 2; k <= 3; ++k) {
        const Lattice lat{Field::Qi, k};
        for (int round = 0; round < 100; ++round) {
            const Subspace u = sampler.subspace(lat);
            const Subspace v = sampler.subspace(lat);
            out.require(realify(meet(u, v)) == meet(realify(u), realify(v)), "meet not preserved");
            out.require(realify(join(u, v)) == join(realify(u), realify(v)), "join not preserved");
            out.require(realify(ortho(u)) == ortho(realify(u)), "ortho not preserved");
        }
    }
    return out;
}

// 9. Interval embedding of L(Q^3) into L(Q^4) as [0, span{e1,e2,e3}]:
// transported meet, join and relative orthocomplement agree exactly.
Outcome criterion_interval() {
    Outcome out;
    const Lattice small{Field::Q, 3};
    Matrix top3(3, 4);
    for (int i = 0; i < 3; ++i) top3.at(i, i) = 1;
    const Subspace axis = Subspace::from_rows(Field::Q, 4, top3);
    const IntervalIso iso(axis);
    const IntervalMOL interval(Subspace::zero(Field::Q, 4), axis);

    Sampler sampler(9009);
    for (int round = 0; round < 200; ++round) {
        const Subspace u = sampler.subspace(small);
        const Subspace v = sampler.subspace(small);
        const Subspace up_u = iso.from_chart(u);
        const Subspace up_v = iso.from_chart(v);
        out.require(iso.to_chart(meet(up_u, up_v)) == meet(u, v), "meet transport");
        out.require(iso.to_chart(join(up_u, up_v)) == join(u, v), "join transport");
        out.require(iso.to_chart(interval.rel_ortho(up_u)) == ortho(u), "ortho transport");
        out.require(iso.to_chart(up_u) == u, "round trip");
    }
    return out;
}

// 10. Pseudo-inverse laws over both fields plus the projection-lattice
// correspondence; 100 + 100 matrices and projection pairs each.
Outcome criterion_penrose() {
    Outcome out;
    const LawReport q = penrose_suite(Field::Q, 6, 100, 1010);
    const LawReport qi = penrose_suite(Field::Qi, 6, 100, 1011);
    out.require(q.ok(), q.ok() ? "" : q.failures.front());
    out.require(qi.ok(), qi.ok() ? "" : qi.failures.front());
    return out;
}

// 11. Frame laws: canonical frames verify for d = 2..6, and a seeded search
// finds no nontrivial d-frame one dimension short (1000 tries per d).
Outcome criterion_frames() {
    Outcome out;
    const LawReport report = frame_suite(2, 6, 1000, 1112);
    out.require(report.ok(), report.ok() ? "" : report.failures.front());
    return out;
}

}  // namespace

int main() {
    using Entry = std::pair<std::string, std::function<Outcome()>>;
    const std::vector<Entry> criteria{
        {"mol-axioms d=2..5, 1000 triples each, exact", criterion_mol_axioms},
        {"s-term contract, 500 chains in L(Q^4)", criterion_s_contract},
        {"identity_to_term soundness, exhaustive 4-element sample", criterion_identity_soundness},
        {"witness value a1|...|a_{d-1} for d,n in {2,3,4}", criterion_witness_value},
        {"pigeonhole direction, exhaustive over sampled sets", criterion_pigeonhole},
        {"refutation certificates, independently re-verified", criterion_refuter},
        {"doubling embedding preserves ops and delta", criterion_doubling},
        {"realification preserves meet/join/ortho", criterion_realify},
        {"interval embedding L(Q^3) in L(Q^4)", criterion_interval},
        {"Penrose suite + projection lattice correspondence", criterion_penrose},
        {"frame laws and low-dimension triviality", criterion_frames},
    };

    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome outcome = criteria[i].second();
        const double elapsed = seconds_since(start);
        all_pass = all_pass && outcome.pass;
        std::printf("[%s] %2zu. %s%s%s [%.2fs]\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.empty() ? "" : " -- ",
                    outcome.detail.c_str(), elapsed);
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                                 : "acceptance: FAILURES present");
    return all_pass ? 0 : 1;
}

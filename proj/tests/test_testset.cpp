#include <doctest.h>

#include "molq/parser.hpp"
#include "molq/sampling.hpp"
#include "molq/testset.hpp"

using namespace molq;

namespace {

const Lattice kQ2{Field::Q, 2};
const Lattice kQ3{Field::Q, 3};

Subspace span_q(int ambient, std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Scalar>> data;
    for (const auto& r : rows) data.emplace_back(r.begin(), r.end());
    return Subspace::from_rows(Field::Q, ambient, Matrix::from_rows(data));
}

}  // namespace

TEST_CASE("make_testset validates") {
    CHECK_THROWS_AS(make_testset(kQ2, {kQ2.zero(), kQ2.zero()}), std::invalid_argument);
    CHECK_THROWS_AS(make_testset(kQ2, {kQ3.zero()}), std::invalid_argument);
    CHECK(make_testset(kQ2, {kQ2.zero(), kQ2.one()}).elements.size() == 2);
}

TEST_CASE("holds_over on plain terms") {
    const TestSet top_only = make_testset(kQ2, {kQ2.one()});
    const TestSet both = make_testset(kQ2, {kQ2.zero(), kQ2.one()});

    CHECK(holds_over(PlainTarget{parse("x | x'")}, both).holds);
    CHECK(holds_over(PlainTarget{parse("x")}, top_only).holds);

    const HoldsReport report = holds_over(PlainTarget{parse("x")}, both);
    CHECK(!report.holds);
    REQUIRE(report.counterexample.has_value());
    CHECK(report.counterexample->at("x") == kQ2.zero());
    CHECK(*report.counterexample_value == kQ2.zero());
    CHECK(report.stats.substitutions == 1);  // first substitution already fails
}

TEST_CASE("first counterexample is lexicographically first") {
    // x & y over {0, 1}: the first failing substitution in odometer order is
    // x=0, y=0.
    const TestSet both = make_testset(kQ2, {kQ2.zero(), kQ2.one()});
    const HoldsReport report = holds_over(PlainTarget{parse("x & y")}, both);
    REQUIRE(!report.holds);
    CHECK(report.counterexample->at("x") == kQ2.zero());
    CHECK(report.counterexample->at("y") == kQ2.zero());

    // x' | y over {0, 1}: substitutions run (0,0), (0,1), (1,0): the third
    // one fails first.
    const HoldsReport r2 = holds_over(PlainTarget{parse("x' | y")}, both);
    REQUIRE(!r2.holds);
    CHECK(r2.counterexample->at("x") == kQ2.one());
    CHECK(r2.counterexample->at("y") == kQ2.zero());
    CHECK(r2.stats.substitutions == 3);
}

TEST_CASE("budget guard") {
    std::vector<Subspace> elements{kQ2.zero(), kQ2.one(), span_q(2, {{1, 0}}),
                                   span_q(2, {{0, 1}}), span_q(2, {{1, 1}})};
    const TestSet testset = make_testset(kQ2, std::move(elements));
    // tdn(2,3) has 8 variables: 5^8 substitutions blow a budget of 1000.
    CHECK_THROWS_AS(holds_over(TdnTarget{tdn_term(2, 3)}, testset, 1000), BudgetExceeded);
    CHECK(holds_over(PlainTarget{parse("x | x'")}, testset, 10).holds);
}

TEST_CASE("witness term holds over small sets after normalization") {
    const TestSet both = make_testset(kQ2, {kQ2.zero(), kQ2.one()});
    const HoldsReport report = holds_over(TdnTarget{tdn_term(2, 3)}, both);
    CHECK(report.holds);
    CHECK(report.stats.substitutions == 256);  // 2^(d+3+n) = 2^8
}

TEST_CASE("holds_over is monotone under shrinking the set") {
    Sampler sampler(31);
    for (int round = 0; round < 5; ++round) {
        std::vector<Subspace> elements{kQ2.zero(), kQ2.one(), sampler.subspace(kQ2)};
        TestSet big;
        try {
            big = make_testset(kQ2, elements);
        } catch (const std::invalid_argument&) {
            continue;  // random element collided with a bound
        }
        const TestSet small = make_testset(kQ2, {elements[0], elements[1]});
        const Target t{PlainTarget{sampler.term(2, 3)}};
        if (holds_over(t, big).holds) CHECK(holds_over(t, small).holds);
    }
}

TEST_CASE("refute_testset produces a verifiable certificate") {
    SUBCASE("d=2, T={0,1}") {
        const TestSet testset = make_testset(kQ2, {kQ2.zero(), kQ2.one()});
        const RefutationCertificate cert = refute_testset(testset);
        CHECK(cert.tdn.d == 2);
        CHECK(cert.tdn.n == 3);
        CHECK(cert.witness_value == span_q(2, {{0, 1}}));  // a1 of the canonical frame
        CHECK(cert.witness_value.dim() == 1);
        CHECK(cert.testset_check.holds);
        CHECK(verify_certificate(cert, testset));
    }

    SUBCASE("d=3, two-element set") {
        const TestSet testset = make_testset(kQ3, {kQ3.zero(), span_q(3, {{1, 0, 0}})});
        const RefutationCertificate cert = refute_testset(testset);
        CHECK(cert.tdn.n == 3);
        // Witness value is a1 | a2 of the canonical 3-frame.
        CHECK(cert.witness_value == span_q(3, {{0, 1, 0}, {0, 0, 1}}));
        CHECK(cert.witness_value.dim() == 2);
        CHECK(verify_certificate(cert, testset));
    }

    SUBCASE("d=2, singleton set") {
        const TestSet testset = make_testset(kQ2, {kQ2.zero()});
        const RefutationCertificate cert = refute_testset(testset);
        CHECK(cert.tdn.n == 2);
        CHECK(cert.testset_check.holds);
        CHECK(cert.witness_value != kQ2.one());
        CHECK(verify_certificate(cert, testset));
    }
}

TEST_CASE("tampered certificates fail verification") {
    const TestSet testset = make_testset(kQ2, {kQ2.zero(), kQ2.one()});
    RefutationCertificate cert = refute_testset(testset);
    cert.witness_value = kQ2.one();
    CHECK(!verify_certificate(cert, testset));
}

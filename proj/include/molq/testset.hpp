#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <variant>

#include "molq/frame.hpp"
#include "molq/subspace.hpp"

namespace molq {

/// Finite candidate test set: pairwise distinct elements of one lattice.
struct TestSet {
    Lattice lattice;
    std::vector<Subspace> elements;
};

/// Validates distinctness and a common ambient space.
TestSet make_testset(const Lattice& lattice, std::vector<Subspace> elements);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Interning cache for one lattice: subspaces become small ids and the three
/// operations are memoized on ids. Exhaustive searches revisit the same few
/// hundred subspaces millions of times, which this collapses to table lookups.
class MemoLattice {
public:
    explicit MemoLattice(const Lattice& lattice);

    int intern(const Subspace& s);
    [[nodiscard]] const Subspace& at(int id) const { return pool_[static_cast<std::size_t>(id)]; }

    int meet_id(int a, int b);
    int join_id(int a, int b);
    int ortho_id(int a);
    [[nodiscard]] int zero_id() const { return zero_id_; }
    [[nodiscard]] int one_id() const { return one_id_; }
    [[nodiscard]] const Lattice& lattice() const { return lattice_; }

private:
    Lattice lattice_;
    std::vector<Subspace> pool_;
    std::unordered_map<std::string, int> index_;
    std::unordered_map<std::uint64_t, int> meet_memo_, join_memo_;
    std::unordered_map<int, int> ortho_memo_;
    int zero_id_ = 0, one_id_ = 0;
};

/// Term evaluation over interned ids; env maps variable name -> id.
int eval_ids(const TermPtr& t, MemoLattice& lat, const std::unordered_map<std::string, int>& env);

/// What an exhaustive search substitutes into: either a plain term (variables
/// in sorted order) or a witness term, whose z-part passes through
/// normalize_frame before each evaluation.
struct PlainTarget {
    TermPtr term;
};
struct TdnTarget {
    TdnTerm tdn;
};
using Target = std::variant<PlainTarget, TdnTarget>;

std::vector<std::string> target_vars(const Target& t);

/// Single-substitution evaluation of a target (no memoization); the tdn case
/// normalizes the z-part first.
Subspace eval_target(const Target& t, const Substitution& sub, const Lattice& lattice);

/// Witness-term evaluation under an explicit frame: z-variables take the
/// frame components (in tuple order), x-variables the given values.
Subspace eval_tdn(const TdnTerm& tdn, const Frame& z, std::span<const Subspace> xs,
                  const Lattice& lattice);

Substitution tdn_substitution(const TdnTerm& tdn, const Frame& z, std::span<const Subspace> xs);

struct SearchStats {
    std::uint64_t substitutions = 0;
    double seconds = 0.0;
};

struct HoldsReport {
    bool holds = false;
    /// First failing substitution in odometer order over the canonical
    /// variable list, if any, with the value it produced.
    std::optional<Substitution> counterexample;
    std::optional<Subspace> counterexample_value;
    SearchStats stats;
};

/// True iff every substitution of test-set elements for the target's
/// variables evaluates to 1. |T|^#vars must stay within budget.
HoldsReport holds_over(const Target& target, const TestSet& testset,
                       std::uint64_t budget = kDefaultBudget);

struct RefutationCertificate {
    TdnTerm tdn;
    Substitution witness;
    Subspace witness_value;   ///< join of the frame components a1..a_{d-1}; never 1
    HoldsReport testset_check;
};

/// The refuter: for T in L(Q^d) with d >= 2, substitute the canonical frame
/// and n = |T|+1 distinct line atoms into the witness term to get a value
/// below 1, and confirm exhaustively that the same term is 1 over T.
RefutationCertificate refute_testset(const TestSet& testset,
                                     std::uint64_t budget = kDefaultBudget);

/// Independent re-check of a certificate: re-evaluates the witness from
/// scratch and re-runs the exhaustive confirmation.
bool verify_certificate(const RefutationCertificate& cert, const TestSet& testset,
                        std::uint64_t budget = kDefaultBudget);

}  // namespace molq

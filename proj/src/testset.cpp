#include "molq/testset.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

namespace molq {

TestSet make_testset(const Lattice& lattice, std::vector<Subspace> elements) {
    std::set<std::string> seen;
    for (const Subspace& s : elements) {
        if (s.lattice() != lattice)
            throw std::invalid_argument("test-set element from a different lattice");
        if (!seen.insert(s.key()).second)
            throw std::invalid_argument("test-set elements must be pairwise distinct");
    }
    return {lattice, std::move(elements)};
}

MemoLattice::MemoLattice(const Lattice& lattice) : lattice_(lattice) {
    zero_id_ = intern(lattice.zero());
    one_id_ = intern(lattice.one());
}

int MemoLattice::intern(const Subspace& s) {
    if (s.lattice() != lattice_) throw std::invalid_argument("interning into the wrong lattice");
    auto [it, inserted] = index_.try_emplace(s.key(), static_cast<int>(pool_.size()));
    if (inserted) pool_.push_back(s);
    return it->second;
}

namespace {
inline std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}
}  // namespace

int MemoLattice::meet_id(int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = meet_memo_.find(pair_key(a, b));
    if (it != meet_memo_.end()) return it->second;
    const int r = intern(meet(at(a), at(b)));
    meet_memo_.emplace(pair_key(a, b), r);
    return r;
}

int MemoLattice::join_id(int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = join_memo_.find(pair_key(a, b));
    if (it != join_memo_.end()) return it->second;
    const int r = intern(join(at(a), at(b)));
    join_memo_.emplace(pair_key(a, b), r);
    return r;
}

int MemoLattice::ortho_id(int a) {
    auto it = ortho_memo_.find(a);
    if (it != ortho_memo_.end()) return it->second;
    const int r = intern(ortho(at(a)));
    ortho_memo_.emplace(a, r);
    return r;
}

int eval_ids(const TermPtr& t, MemoLattice& lat, const std::unordered_map<std::string, int>& env) {
    switch (t->kind()) {
        case TermKind::Var: {
            auto it = env.find(t->name());
            if (it == env.end()) throw EvalError("unbound variable \"" + t->name() + "\"");
            return it->second;
        }
        case TermKind::Zero: return lat.zero_id();
        case TermKind::One: return lat.one_id();
        case TermKind::Meet: return lat.meet_id(eval_ids(t->lhs(), lat, env), eval_ids(t->rhs(), lat, env));
        case TermKind::Join: return lat.join_id(eval_ids(t->lhs(), lat, env), eval_ids(t->rhs(), lat, env));
        case TermKind::Ortho: return lat.ortho_id(eval_ids(t->lhs(), lat, env));
    }
    throw std::logic_error("corrupt term kind");
}

std::vector<std::string> target_vars(const Target& t) {
    if (const auto* plain = std::get_if<PlainTarget>(&t)) return variables(plain->term);
    return std::get<TdnTarget>(t).tdn.vars;
}

Substitution tdn_substitution(const TdnTerm& tdn, const Frame& z, std::span<const Subspace> xs) {
    if (static_cast<int>(xs.size()) != tdn.n)
        throw std::invalid_argument("expected one x value per x variable");
    const std::vector<Subspace> tuple = z.to_tuple();
    if (static_cast<int>(tuple.size()) != tdn.d + 3)
        throw std::invalid_argument("frame arity does not match the term's d");
    Substitution sub;
    for (std::size_t i = 0; i < tuple.size(); ++i) sub[tdn.vars[i]] = tuple[i];
    for (std::size_t i = 0; i < xs.size(); ++i) sub[tdn.vars[tuple.size() + i]] = xs[i];
    return sub;
}

Subspace eval_tdn(const TdnTerm& tdn, const Frame& z, std::span<const Subspace> xs,
                  const Lattice& lattice) {
    const Frame normalized = normalize_frame(z);
    return eval(tdn.term, tdn_substitution(tdn, normalized, xs), lattice);
}

Subspace eval_target(const Target& t, const Substitution& sub, const Lattice& lattice) {
    if (const auto* plain = std::get_if<PlainTarget>(&t)) return eval(plain->term, sub, lattice);

    const TdnTerm& tdn = std::get<TdnTarget>(t).tdn;
    std::vector<Subspace> z_part, x_part;
    for (const std::string& v : tdn.z_vars()) {
        auto it = sub.find(v);
        if (it == sub.end()) throw EvalError("unbound variable \"" + v + "\"");
        z_part.push_back(it->second);
    }
    for (const std::string& v : tdn.x_vars()) {
        auto it = sub.find(v);
        if (it == sub.end()) throw EvalError("unbound variable \"" + v + "\"");
        x_part.push_back(it->second);
    }
    return eval_tdn(tdn, Frame::from_tuple(z_part), x_part, lattice);
}

namespace {

/// Exhaustive odometer over element indices; the last variable varies
/// fastest, so index tuples appear in lexicographic order.
class Odometer {
public:
    Odometer(std::size_t width, std::size_t base) : digits_(width, 0), base_(base) {}

    [[nodiscard]] const std::vector<std::size_t>& digits() const { return digits_; }

    bool advance() {
        for (std::size_t i = digits_.size(); i-- > 0;) {
            if (++digits_[i] < base_) return true;
            digits_[i] = 0;
        }
        return false;
    }

private:
    std::vector<std::size_t> digits_;
    std::size_t base_;
};

void check_budget(std::size_t vars, std::size_t set_size, std::uint64_t budget) {
    if (set_size == 0) throw std::invalid_argument("empty test set");
    long double total = 1;
    for (std::size_t i = 0; i < vars; ++i) {
        total *= static_cast<long double>(set_size);
        if (total > static_cast<long double>(budget))
            throw BudgetExceeded("substitution count " + std::to_string(set_size) + "^" +
                                 std::to_string(vars) + " exceeds budget " + std::to_string(budget));
    }
}

}  // namespace

HoldsReport holds_over(const Target& target, const TestSet& testset, std::uint64_t budget) {
    const std::vector<std::string> vars = target_vars(target);
    check_budget(vars.size(), testset.elements.size(), budget);

    const auto start = std::chrono::steady_clock::now();
    HoldsReport report;

    MemoLattice lat(testset.lattice);
    std::vector<int> element_ids;
    element_ids.reserve(testset.elements.size());
    for (const Subspace& s : testset.elements) element_ids.push_back(lat.intern(s));

    const TdnTarget* tdn_target = std::get_if<TdnTarget>(&target);
    const std::size_t z_count = tdn_target ? static_cast<std::size_t>(tdn_target->tdn.d) + 3 : 0;

    std::unordered_map<std::string, int> env;
    const TermPtr& term =
        tdn_target ? tdn_target->tdn.term : std::get<PlainTarget>(target).term;

    // Cache of the normalized z-part; the odometer varies x fastest, so the
    // z prefix is stable across long runs.
    std::vector<std::size_t> cached_z;
    std::vector<int> normalized_ids;

    Odometer odo(vars.size(), testset.elements.size());
    bool more = true;
    while (more) {
        const std::vector<std::size_t>& digits = odo.digits();

        if (tdn_target) {
            const bool z_changed = cached_z.size() != z_count ||
                                   !std::equal(cached_z.begin(), cached_z.end(), digits.begin());
            if (z_changed) {
                std::vector<Subspace> z_part;
                z_part.reserve(z_count);
                for (std::size_t i = 0; i < z_count; ++i)
                    z_part.push_back(testset.elements[digits[i]]);
                const Frame normalized = normalize_frame(Frame::from_tuple(z_part));
                normalized_ids.clear();
                for (const Subspace& s : normalized.to_tuple()) normalized_ids.push_back(lat.intern(s));
                cached_z.assign(digits.begin(), digits.begin() + static_cast<long>(z_count));
            }
            for (std::size_t i = 0; i < z_count; ++i) env[vars[i]] = normalized_ids[i];
            for (std::size_t i = z_count; i < vars.size(); ++i)
                env[vars[i]] = element_ids[digits[i]];
        } else {
            for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = element_ids[digits[i]];
        }

        const int value = eval_ids(term, lat, env);
        ++report.stats.substitutions;
        if (value != lat.one_id()) {
            Substitution counterexample;
            for (std::size_t i = 0; i < vars.size(); ++i)
                counterexample[vars[i]] = testset.elements[digits[i]];
            report.counterexample = std::move(counterexample);
            report.counterexample_value = lat.at(value);
            report.holds = false;
            report.stats.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return report;
        }
        more = odo.advance();
    }

    report.holds = true;
    report.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

RefutationCertificate refute_testset(const TestSet& testset, std::uint64_t budget) {
    const int d = testset.lattice.dim;
    if (d < 2) throw std::invalid_argument("refutation needs ambient dimension >= 2");
    if (testset.lattice.field != Field::Q)
        throw std::invalid_argument("refutation witnesses are built over Q");

    const int n = static_cast<int>(testset.elements.size()) + 1;
    RefutationCertificate cert;
    cert.tdn = tdn_term(d, std::max(n, 2));

    const Frame frame = canonical_frame(d);
    const std::vector<Subspace> atoms = line_atoms(frame, cert.tdn.n);
    cert.witness = tdn_substitution(cert.tdn, frame, atoms);
    cert.witness_value = eval_tdn(cert.tdn, frame, atoms, testset.lattice);
    cert.testset_check = holds_over(TdnTarget{cert.tdn}, testset, budget);
    return cert;
}

bool verify_certificate(const RefutationCertificate& cert, const TestSet& testset,
                        std::uint64_t budget) {
    // Witness direction: re-evaluate through the plain evaluator and confirm
    // the value is both as recorded and strictly below 1.
    const Subspace value = eval_target(TdnTarget{cert.tdn}, cert.witness, testset.lattice);
    if (value != cert.witness_value) return false;
    if (value == testset.lattice.one()) return false;
    // Test-set direction: independent exhaustive confirmation.
    return holds_over(TdnTarget{cert.tdn}, testset, budget).holds;
}

}  // namespace molq

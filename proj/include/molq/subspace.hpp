#pragma once

#include <map>
#include <string>
#include <vector>

#include "molq/matrix.hpp"
#include "molq/term.hpp"

namespace molq {

class Subspace;

/// One lattice instance L(F^d): the field tag plus the ambient dimension.
struct Lattice {
    Field field = Field::Q;
    int dim = 0;

    [[nodiscard]] Subspace zero() const;
    [[nodiscard]] Subspace one() const;

    friend bool operator==(const Lattice&, const Lattice&) = default;
};

/// Exact subspace of F^d in canonical form: the basis is the rref row basis
/// with zero rows removed, so equality of subspaces is equality of matrices.
class Subspace {
public:
    Subspace() = default;

    /// Canonicalizes the given spanning rows (they may be dependent).
    static Subspace from_rows(Field field, int ambient, const Matrix& rows);
    static Subspace zero(Field field, int ambient);
    static Subspace full(Field field, int ambient);
    static Subspace span_vector(Field field, std::span<const Scalar> v);

    [[nodiscard]] Field field() const { return field_; }
    [[nodiscard]] int ambient() const { return ambient_; }
    [[nodiscard]] int dim() const { return basis_.rows(); }
    [[nodiscard]] const Matrix& basis() const { return basis_; }
    [[nodiscard]] Lattice lattice() const { return {field_, ambient_}; }

    [[nodiscard]] bool is_zero() const { return dim() == 0; }
    [[nodiscard]] bool is_full() const { return dim() == ambient_; }

    /// Compact serialization; two subspaces are equal iff their keys are.
    [[nodiscard]] std::string key() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    friend bool operator<(const Subspace& a, const Subspace& b) { return a.key() < b.key(); }

private:
    Subspace(Field field, int ambient, Matrix basis)
        : field_(field), ambient_(ambient), basis_(std::move(basis)) {}

    Field field_ = Field::Q;
    int ambient_ = 0;
    Matrix basis_;
};

/// Intersection, computed through plain-bilinear annihilators.
Subspace meet(const Subspace& u, const Subspace& v);
/// Sum of subspaces: rref of the stacked bases.
Subspace join(const Subspace& u, const Subspace& v);
/// Orthocomplement for the canonical form <v, w> = sum v_i * conj(w_i).
Subspace ortho(const Subspace& u);

bool leq(const Subspace& u, const Subspace& v);

using Substitution = std::map<std::string, Subspace>;

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structural evaluation of a term: Meet/Join/Ortho map to the lattice
/// operations, Zero/One to the bounds. Unbound variables raise EvalError.
Subspace eval(const TermPtr& t, const Substitution& sub, const Lattice& lattice);

/// An interval [lower, upper] of L(F^d) as a MOL of its own; the relative
/// orthocomplement x -> (x' & upper) | lower complements within the interval.
struct IntervalMOL {
    Subspace lower, upper;

    IntervalMOL(Subspace lo, Subspace up);

    [[nodiscard]] bool contains(const Subspace& x) const;
    [[nodiscard]] Subspace rel_ortho(const Subspace& x) const;
    /// Evaluation inside the interval: Zero -> lower, One -> upper,
    /// Ortho -> rel_ortho.
    [[nodiscard]] Subspace eval(const TermPtr& t, const Substitution& sub) const;
};

/// Order isomorphism data [lower, upper] ~ [0, axis] ~ L(F^k) with
/// axis = lower' & upper and k = dim(axis). to_axis/from_axis is the modular
/// perspectivity x -> x & axis / y -> y | lower; to_chart/from_chart add the
/// coordinate change onto the axis basis. Meets and joins transport exactly;
/// the interval's own orthocomplement is the IntervalMOL one.
class IntervalIso {
public:
    IntervalIso(Subspace lower, Subspace upper);
    explicit IntervalIso(const Subspace& axis);

    [[nodiscard]] const Subspace& axis() const { return axis_; }
    [[nodiscard]] const Lattice& chart() const { return chart_; }

    [[nodiscard]] Subspace to_axis(const Subspace& x) const;
    [[nodiscard]] Subspace from_axis(const Subspace& y) const;
    [[nodiscard]] Subspace to_chart(const Subspace& x) const;
    [[nodiscard]] Subspace from_chart(const Subspace& w) const;

private:
    Subspace lower_, upper_, axis_;
    Lattice chart_;
    std::vector<int> pivots_;  // pivot columns of the axis basis
};

}  // namespace molq

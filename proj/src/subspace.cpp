#include "molq/subspace.hpp"

#include <sstream>

namespace molq {

Subspace Lattice::zero() const { return Subspace::zero(field, dim); }
Subspace Lattice::one() const { return Subspace::full(field, dim); }

Subspace Subspace::from_rows(Field field, int ambient, const Matrix& rows) {
    if (rows.cols() != ambient && !(rows.rows() == 0 && rows.cols() == 0))
        throw std::invalid_argument("basis width does not match ambient dimension");
    if (field == Field::Q) {
        for (int i = 0; i < rows.rows(); ++i)
            for (int j = 0; j < rows.cols(); ++j)
                if (!rows.at(i, j).is_real())
                    throw std::invalid_argument("imaginary entry in a subspace tagged Q");
    }
    Matrix basis = rref(rows);
    if (basis.cols() == 0 && ambient > 0) basis = Matrix(0, ambient);
    return {field, ambient, std::move(basis)};
}

Subspace Subspace::zero(Field field, int ambient) { return {field, ambient, Matrix(0, ambient)}; }

Subspace Subspace::full(Field field, int ambient) {
    return {field, ambient, Matrix::identity(ambient)};
}

Subspace Subspace::span_vector(Field field, std::span<const Scalar> v) {
    Matrix m(0, static_cast<int>(v.size()));
    m.append_row(v);
    return from_rows(field, static_cast<int>(v.size()), m);
}

std::string Subspace::key() const {
    std::ostringstream os;
    os << field_name(field_) << '|' << ambient_ << '|' << dim() << '|';
    for (int i = 0; i < basis_.rows(); ++i)
        for (int j = 0; j < basis_.cols(); ++j) os << to_string(basis_.at(i, j)) << ',';
    return os.str();
}

namespace {

void require_compatible(const Subspace& u, const Subspace& v, const char* op) {
    if (u.ambient() != v.ambient() || u.field() != v.field())
        throw std::invalid_argument(std::string("ambient/field mismatch in ") + op);
}

Matrix entrywise_conj(const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).conj();
    return out;
}

}  // namespace

Subspace join(const Subspace& u, const Subspace& v) {
    require_compatible(u, v, "join");
    return Subspace::from_rows(u.field(), u.ambient(), stack(u.basis(), v.basis()));
}

Subspace meet(const Subspace& u, const Subspace& v) {
    require_compatible(u, v, "meet");
    // u = ann(ann(u)) for the plain bilinear pairing, so the intersection is
    // the joint annihilator of both annihilators.
    const Matrix ann_u = kernel(u.basis());
    const Matrix ann_v = kernel(v.basis());
    return Subspace::from_rows(u.field(), u.ambient(), kernel(stack(ann_u, ann_v)));
}

Subspace ortho(const Subspace& u) {
    // v is orthogonal to row w iff sum v_i conj(w_i) = 0: the kernel of the
    // entrywise conjugate of the basis.
    return Subspace::from_rows(u.field(), u.ambient(), kernel(entrywise_conj(u.basis())));
}

bool leq(const Subspace& u, const Subspace& v) {
    require_compatible(u, v, "leq");
    return rank(stack(v.basis(), u.basis())) == v.dim();
}

Subspace eval(const TermPtr& t, const Substitution& sub, const Lattice& lattice) {
    switch (t->kind()) {
        case TermKind::Var: {
            auto it = sub.find(t->name());
            if (it == sub.end()) throw EvalError("unbound variable \"" + t->name() + "\"");
            return it->second;
        }
        case TermKind::Zero: return lattice.zero();
        case TermKind::One: return lattice.one();
        case TermKind::Meet: return meet(eval(t->lhs(), sub, lattice), eval(t->rhs(), sub, lattice));
        case TermKind::Join: return join(eval(t->lhs(), sub, lattice), eval(t->rhs(), sub, lattice));
        case TermKind::Ortho: return ortho(eval(t->lhs(), sub, lattice));
    }
    throw std::logic_error("corrupt term kind");
}

IntervalMOL::IntervalMOL(Subspace lo, Subspace up) : lower(std::move(lo)), upper(std::move(up)) {
    if (!leq(lower, upper)) throw std::invalid_argument("interval needs lower <= upper");
}

bool IntervalMOL::contains(const Subspace& x) const { return leq(lower, x) && leq(x, upper); }

Subspace IntervalMOL::rel_ortho(const Subspace& x) const {
    return join(meet(ortho(x), upper), lower);
}

Subspace IntervalMOL::eval(const TermPtr& t, const Substitution& sub) const {
    switch (t->kind()) {
        case TermKind::Var: {
            auto it = sub.find(t->name());
            if (it == sub.end()) throw EvalError("unbound variable \"" + t->name() + "\"");
            return it->second;
        }
        case TermKind::Zero: return lower;
        case TermKind::One: return upper;
        case TermKind::Meet: return meet(eval(t->lhs(), sub), eval(t->rhs(), sub));
        case TermKind::Join: return join(eval(t->lhs(), sub), eval(t->rhs(), sub));
        case TermKind::Ortho: return rel_ortho(eval(t->lhs(), sub));
    }
    throw std::logic_error("corrupt term kind");
}

IntervalIso::IntervalIso(Subspace lower, Subspace upper)
    : lower_(std::move(lower)), upper_(std::move(upper)), axis_(meet(ortho(lower_), upper_)) {
    if (!leq(lower_, upper_)) throw std::invalid_argument("interval needs lower <= upper");
    chart_ = {axis_.field(), axis_.dim()};
    pivots_ = echelon(axis_.basis()).pivots;
}

IntervalIso::IntervalIso(const Subspace& axis)
    : IntervalIso(Subspace::zero(axis.field(), axis.ambient()), axis) {}

Subspace IntervalIso::to_axis(const Subspace& x) const { return meet(x, axis_); }

Subspace IntervalIso::from_axis(const Subspace& y) const { return join(y, lower_); }

Subspace IntervalIso::to_chart(const Subspace& x) const {
    const Subspace y = to_axis(x);
    // The axis basis is rref, so the coordinates of a row are its entries at
    // the pivot columns.
    Matrix coords(y.dim(), chart_.dim);
    for (int i = 0; i < y.dim(); ++i)
        for (int j = 0; j < chart_.dim; ++j) coords.at(i, j) = y.basis().at(i, pivots_[j]);
    return Subspace::from_rows(chart_.field, chart_.dim, coords);
}

Subspace IntervalIso::from_chart(const Subspace& w) const {
    if (w.ambient() != chart_.dim) throw std::invalid_argument("chart dimension mismatch");
    return from_axis(Subspace::from_rows(axis_.field(), axis_.ambient(), w.basis() * axis_.basis()));
}

}  // namespace molq

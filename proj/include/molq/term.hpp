#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace molq {

enum class TermKind { Var, Zero, One, Meet, Join, Ortho };

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable ortholattice term tree. Subtrees are shared freely; equality is
/// structural, never pointer identity.
class Term {
public:
    static TermPtr var(std::string name);
    static TermPtr zero();
    static TermPtr one();
    static TermPtr meet(TermPtr lhs, TermPtr rhs);
    static TermPtr join(TermPtr lhs, TermPtr rhs);
    static TermPtr ortho(TermPtr arg);

    [[nodiscard]] TermKind kind() const { return kind_; }
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const TermPtr& lhs() const { return lhs_; }
    [[nodiscard]] const TermPtr& rhs() const { return rhs_; }

    Term(TermKind kind, std::string name, TermPtr lhs, TermPtr rhs)
        : kind_(kind), name_(std::move(name)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

private:
    TermKind kind_;
    std::string name_;
    TermPtr lhs_, rhs_;
};

bool structurally_equal(const TermPtr& a, const TermPtr& b);

/// Deterministic fully parenthesized form: "(x & y)", "((x | y))'" never
/// appears -- ortho prints postfix as in "(x & y)'".
std::string print(const TermPtr& t);

/// Occurring variable names, sorted, without duplicates.
std::vector<std::string> variables(const TermPtr& t);

struct UnboundVariable : std::runtime_error {
    explicit UnboundVariable(const std::string& var)
        : std::runtime_error("unbound variable \"" + var + "\""), variable(var) {}
    std::string variable;
};

/// Total replacement of variables by terms; throws UnboundVariable when the
/// map misses one. (There are no binders, so replacement is capture-free.)
TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& map);

/// (x' & c) | b -- the relative orthocomplement of x in the interval [b, c].
TermPtr rel_ortho(const TermPtr& x, const TermPtr& b, const TermPtr& c);

/// (t1 & t2) | (t1' & t2'): evaluates to 1 in a modular ortholattice exactly
/// when t1 and t2 evaluate equal.
TermPtr identity_to_term(const TermPtr& t1, const TermPtr& t2);

/// Complement builder: with y0 <= y1,y2 <= y3 the value is a complement of y2
/// in [y0, y3], and equals y1 whenever y1 already is one. Built as the
/// relative orthocomplement of y1|y2 in [d1, y3] where d1 is the relative
/// orthocomplement of y1&y2 in [y0, y1].
TermPtr s_term(const TermPtr& y0, const TermPtr& y1, const TermPtr& y2, const TermPtr& y3);

/// s(zbot, (x_i & (z0 | z1)) | zbot, z1, z0 | z1) over the frame-component
/// variables zbot, z0, z1 and the point variable x_i. Requires d >= 2, i >= 1.
TermPtr xhat_term(int d, int i);

/// One witness term together with its canonical variable list. The term tree
/// itself does not mention every z_k, but a substitution must bind the whole
/// list: the z-part is normalized to a frame before evaluation.
struct TdnTerm {
    int d = 0;
    int n = 0;
    TermPtr term;
    std::vector<std::string> vars;  ///< zbot, z0..zd, ztop, x1..xn (d+3+n names)

    [[nodiscard]] std::vector<std::string> z_vars() const {
        return {vars.begin(), vars.begin() + d + 3};
    }
    [[nodiscard]] std::vector<std::string> x_vars() const {
        return {vars.begin() + d + 3, vars.end()};
    }
};

/// ztop' | z1 | ... | z_{d-1} | (all meets xhat_i & xhat_j, i < j).
/// Requires d >= 2 and n >= 2.
TdnTerm tdn_term(int d, int n);

}  // namespace molq

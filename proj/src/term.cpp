#include "molq/term.hpp"

#include <algorithm>
#include <set>

namespace molq {

TermPtr Term::var(std::string name) {
    return std::make_shared<Term>(TermKind::Var, std::move(name), nullptr, nullptr);
}

TermPtr Term::zero() {
    static const TermPtr z = std::make_shared<Term>(TermKind::Zero, "", nullptr, nullptr);
    return z;
}

TermPtr Term::one() {
    static const TermPtr o = std::make_shared<Term>(TermKind::One, "", nullptr, nullptr);
    return o;
}

TermPtr Term::meet(TermPtr lhs, TermPtr rhs) {
    return std::make_shared<Term>(TermKind::Meet, "", std::move(lhs), std::move(rhs));
}

TermPtr Term::join(TermPtr lhs, TermPtr rhs) {
    return std::make_shared<Term>(TermKind::Join, "", std::move(lhs), std::move(rhs));
}

TermPtr Term::ortho(TermPtr arg) {
    return std::make_shared<Term>(TermKind::Ortho, "", std::move(arg), nullptr);
}

bool structurally_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case TermKind::Var: return a->name() == b->name();
        case TermKind::Zero:
        case TermKind::One: return true;
        case TermKind::Ortho: return structurally_equal(a->lhs(), b->lhs());
        case TermKind::Meet:
        case TermKind::Join:
            return structurally_equal(a->lhs(), b->lhs()) && structurally_equal(a->rhs(), b->rhs());
    }
    return false;
}

namespace {

void print_into(const TermPtr& t, std::string& out) {
    switch (t->kind()) {
        case TermKind::Var: out += t->name(); break;
        case TermKind::Zero: out += '0'; break;
        case TermKind::One: out += '1'; break;
        case TermKind::Meet:
        case TermKind::Join:
            out += '(';
            print_into(t->lhs(), out);
            out += t->kind() == TermKind::Meet ? " & " : " | ";
            print_into(t->rhs(), out);
            out += ')';
            break;
        case TermKind::Ortho:
            print_into(t->lhs(), out);
            out += '\'';
            break;
    }
}

void collect_vars(const TermPtr& t, std::set<std::string>& out) {
    if (!t) return;
    if (t->kind() == TermKind::Var) out.insert(t->name());
    collect_vars(t->lhs(), out);
    collect_vars(t->rhs(), out);
}

}  // namespace

std::string print(const TermPtr& t) {
    std::string out;
    print_into(t, out);
    return out;
}

std::vector<std::string> variables(const TermPtr& t) {
    std::set<std::string> names;
    collect_vars(t, names);
    return {names.begin(), names.end()};
}

TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& map) {
    switch (t->kind()) {
        case TermKind::Var: {
            auto it = map.find(t->name());
            if (it == map.end()) throw UnboundVariable(t->name());
            return it->second;
        }
        case TermKind::Zero:
        case TermKind::One: return t;
        case TermKind::Ortho: return Term::ortho(substitute(t->lhs(), map));
        case TermKind::Meet: return Term::meet(substitute(t->lhs(), map), substitute(t->rhs(), map));
        case TermKind::Join: return Term::join(substitute(t->lhs(), map), substitute(t->rhs(), map));
    }
    throw std::logic_error("corrupt term kind");
}

TermPtr rel_ortho(const TermPtr& x, const TermPtr& b, const TermPtr& c) {
    return Term::join(Term::meet(Term::ortho(x), c), b);
}

TermPtr identity_to_term(const TermPtr& t1, const TermPtr& t2) {
    return Term::join(Term::meet(t1, t2), Term::meet(Term::ortho(t1), Term::ortho(t2)));
}

TermPtr s_term(const TermPtr& y0, const TermPtr& y1, const TermPtr& y2, const TermPtr& y3) {
    const TermPtr d1 = rel_ortho(Term::meet(y1, y2), y0, y1);
    return rel_ortho(Term::join(y1, y2), d1, y3);
}

TermPtr xhat_term(int d, int i) {
    if (d < 2) throw std::invalid_argument("xhat_term requires d >= 2");
    if (i < 1) throw std::invalid_argument("xhat_term requires i >= 1");
    const TermPtr zbot = Term::var("zbot");
    const TermPtr z0 = Term::var("z0");
    const TermPtr z1 = Term::var("z1");
    const TermPtr xi = Term::var("x" + std::to_string(i));
    const TermPtr line = Term::join(z0, z1);
    return s_term(zbot, Term::join(Term::meet(xi, line), zbot), z1, line);
}

TdnTerm tdn_term(int d, int n) {
    if (d < 2) throw std::invalid_argument("tdn_term requires d >= 2");
    if (n < 2) throw std::invalid_argument("tdn_term requires n >= 2");

    TermPtr acc = Term::ortho(Term::var("ztop"));
    for (int k = 1; k <= d - 1; ++k) acc = Term::join(acc, Term::var("z" + std::to_string(k)));

    std::vector<TermPtr> xhat;
    xhat.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) xhat.push_back(xhat_term(d, i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) acc = Term::join(acc, Term::meet(xhat[i], xhat[j]));

    TdnTerm out;
    out.d = d;
    out.n = n;
    out.term = acc;
    out.vars.push_back("zbot");
    for (int k = 0; k <= d; ++k) out.vars.push_back("z" + std::to_string(k));
    out.vars.push_back("ztop");
    for (int i = 1; i <= n; ++i) out.vars.push_back("x" + std::to_string(i));
    return out;
}

}  // namespace molq

#include "cedille/term.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace cedille {

namespace {

constexpr std::array<std::string_view, 10> kKeywords = {
    "lam", "Lam", "all", "Pi", "iota", "beta", "delta", "sigma", "rho", "phi",
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

VarCategory category_of(std::string_view name) {
    if (!name.empty() && name.front() == '$') return VarCategory::Kind;
    if (!name.empty() && std::isupper(static_cast<unsigned char>(name.front()))) return VarCategory::Type;
    return VarCategory::Term;
}

bool is_keyword(std::string_view word) {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_valid_var_name(std::string_view name) {
    if (name.empty() || is_keyword(name)) return false;
    std::size_t start = 0;
    if (name.front() == '$') {
        if (name.size() == 1) return false;
        start = 1;
    } else if (!std::isalpha(static_cast<unsigned char>(name.front()))) {
        return false;
    }
    return std::all_of(name.begin() + static_cast<std::ptrdiff_t>(start), name.end(), ident_char);
}

std::string_view tag_name(Tag tag) {
    switch (tag) {
    case Tag::Var: return "Var";
    case Tag::Star: return "Star";
    case Tag::Box: return "Box";
    case Tag::Proj1: return "Proj1";
    case Tag::Proj2: return "Proj2";
    case Tag::Beta: return "Beta";
    case Tag::Delta: return "Delta";
    case Tag::Sigma: return "Sigma";
    case Tag::App: return "App";
    case Tag::ErasedApp: return "ErasedApp";
    case Tag::Rho: return "Rho";
    case Tag::Forall: return "Forall";
    case Tag::Pi: return "Pi";
    case Tag::Iota: return "Iota";
    case Tag::Lambda: return "Lambda";
    case Tag::ErasedLambda: return "ErasedLambda";
    case Tag::UnannotatedLambda: return "UnannotatedLambda";
    case Tag::IntersectIntro: return "IntersectIntro";
    case Tag::Phi: return "Phi";
    case Tag::Let: return "Let";
    case Tag::Eq: return "Eq";
    }
    return "?";
}

std::size_t tag_arity(Tag tag) {
    switch (tag) {
    case Tag::Var:
    case Tag::Star:
    case Tag::Box:
        return 0;
    case Tag::Proj1:
    case Tag::Proj2:
    case Tag::Sigma:
    case Tag::UnannotatedLambda:
        return 1;
    case Tag::Beta:
    case Tag::Delta:
    case Tag::App:
    case Tag::ErasedApp:
    case Tag::Forall:
    case Tag::Pi:
    case Tag::Iota:
    case Tag::Lambda:
    case Tag::ErasedLambda:
    case Tag::Eq:
        return 2;
    case Tag::Rho:
    case Tag::IntersectIntro:
    case Tag::Phi:
    case Tag::Let:
        return 3;
    }
    return 0;
}

int tag_bound_child(Tag tag) {
    switch (tag) {
    case Tag::Forall:
    case Tag::Pi:
    case Tag::Iota:
    case Tag::Lambda:
    case Tag::ErasedLambda:
    case Tag::Rho:
        return 1;
    case Tag::UnannotatedLambda:
        return 0;
    case Tag::IntersectIntro:
    case Tag::Let:
        return 2;
    default:
        return -1;
    }
}

bool tag_has_binder(Tag tag) { return tag_bound_child(tag) >= 0; }

struct Term::Node {
    Tag tag;
    Var var;
    std::array<Term, 3> kids;
    VarSet fv;
    std::size_t size;
};

Term Term::make(Tag tag, Var binder, std::array<Term, 3> children) {
    const std::size_t n = tag_arity(tag);
    for (std::size_t i = 0; i < 3; ++i) {
        if ((i < n) != static_cast<bool>(children[i]))
            throw std::invalid_argument(std::string("wrong number of children for ") +
                                        std::string(tag_name(tag)));
    }
    const int scoped = tag_bound_child(tag);
    if (tag == Tag::Var || scoped >= 0) {
        if (!is_valid_var_name(binder.name) || category_of(binder.name) != binder.category)
            throw std::invalid_argument("invalid variable name '" + binder.name + "'");
    } else {
        binder = Var();
    }
    if ((tag == Tag::UnannotatedLambda || tag == Tag::Rho || tag == Tag::IntersectIntro) &&
        binder.category != VarCategory::Term)
        throw std::invalid_argument(std::string(tag_name(tag)) + " must bind a term variable");

    VarSet fv;
    std::size_t size = 1;
    if (tag == Tag::Var) fv.insert(binder);
    for (std::size_t i = 0; i < n; ++i) {
        const VarSet& kid = children[i].free_vars();
        size += children[i].size();
        if (static_cast<int>(i) == scoped) {
            for (const Var& v : kid)
                if (v != binder) fv.insert(v);
        } else {
            fv.insert(kid.begin(), kid.end());
        }
    }
    return Term(std::make_shared<const Node>(
        Node{tag, std::move(binder), std::move(children), std::move(fv), size}));
}

Term Term::var(Var v) { return make(Tag::Var, std::move(v), {}); }
Term Term::star() {
    static const Term s = make(Tag::Star, Var(), {});
    return s;
}
Term Term::box() {
    static const Term b = make(Tag::Box, Var(), {});
    return b;
}
Term Term::proj1(Term t) { return make(Tag::Proj1, Var(), {std::move(t)}); }
Term Term::proj2(Term t) { return make(Tag::Proj2, Var(), {std::move(t)}); }
Term Term::beta(Term lhs, Term witness) {
    return make(Tag::Beta, Var(), {std::move(lhs), std::move(witness)});
}
Term Term::delta(Term motive, Term proof) {
    return make(Tag::Delta, Var(), {std::move(motive), std::move(proof)});
}
Term Term::sigma(Term proof) { return make(Tag::Sigma, Var(), {std::move(proof)}); }
Term Term::app(Term fun, Term arg) { return make(Tag::App, Var(), {std::move(fun), std::move(arg)}); }
Term Term::erased_app(Term fun, Term arg) {
    return make(Tag::ErasedApp, Var(), {std::move(fun), std::move(arg)});
}
Term Term::rho(Term proof, Var x, Term guide, Term subject) {
    return make(Tag::Rho, std::move(x), {std::move(proof), std::move(guide), std::move(subject)});
}
Term Term::forall(Var x, Term domain, Term body) {
    return make(Tag::Forall, std::move(x), {std::move(domain), std::move(body)});
}
Term Term::pi(Var x, Term domain, Term body) {
    return make(Tag::Pi, std::move(x), {std::move(domain), std::move(body)});
}
Term Term::iota(Var x, Term first, Term second) {
    return make(Tag::Iota, std::move(x), {std::move(first), std::move(second)});
}
Term Term::lambda(Var x, Term domain, Term body) {
    return make(Tag::Lambda, std::move(x), {std::move(domain), std::move(body)});
}
Term Term::erased_lambda(Var x, Term domain, Term body) {
    return make(Tag::ErasedLambda, std::move(x), {std::move(domain), std::move(body)});
}
Term Term::unannotated_lambda(Var x, Term body) {
    return make(Tag::UnannotatedLambda, std::move(x), {std::move(body)});
}
Term Term::intersect_intro(Term first, Term second, Var x, Term guide) {
    return make(Tag::IntersectIntro, std::move(x), {std::move(first), std::move(second), std::move(guide)});
}
Term Term::phi(Term proof, Term subject, Term erased) {
    return make(Tag::Phi, Var(), {std::move(proof), std::move(subject), std::move(erased)});
}
Term Term::let(Var x, Term definiens, Term annotation, Term body) {
    return make(Tag::Let, std::move(x), {std::move(definiens), std::move(annotation), std::move(body)});
}
Term Term::eq(Term lhs, Term rhs) { return make(Tag::Eq, Var(), {std::move(lhs), std::move(rhs)}); }

Tag Term::tag() const { return node_->tag; }
const Var& Term::var() const { return node_->var; }
bool Term::has_binder() const { return tag_has_binder(node_->tag); }
std::size_t Term::arity() const { return tag_arity(node_->tag); }
const Term& Term::child(std::size_t i) const { return node_->kids.at(i); }
const std::array<Term, 3>& Term::children() const { return node_->kids; }
int Term::bound_child() const { return tag_bound_child(node_->tag); }
std::size_t Term::size() const { return node_ ? node_->size : 0; }

const VarSet& Term::free_vars() const {
    static const VarSet empty;
    return node_ ? node_->fv : empty;
}

VarSet free_vars(const Term& t) { return t.free_vars(); }

Var fresh_var(const Var& base, const VarSet& avoid) {
    std::string stem = base.name;
    while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
    if (stem == "$") stem = "$k";
    for (unsigned long i = 1;; ++i) {
        Var candidate(stem + std::to_string(i), base.category);
        if (!avoid.count(candidate)) return candidate;
    }
}

Term rename_binder(const Term& binding, const Var& to) {
    const int scoped = binding.bound_child();
    if (scoped < 0) throw std::invalid_argument("rename_binder on a term without a binder");
    if (binding.var() == to) return binding;
    std::array<Term, 3> kids = binding.children();
    kids[scoped] = subst(kids[scoped], binding.var(), Term::var(to));
    return Term::make(binding.tag(), to, std::move(kids));
}

Term subst(const Term& t, const Var& x, const Term& value) {
    if (!t.occurs_free(x)) return t;
    if (t.is(Tag::Var)) return value;

    const int scoped = t.bound_child();
    Var binder = t.var();
    std::array<Term, 3> kids = t.children();
    for (std::size_t i = 0; i < t.arity(); ++i) {
        if (static_cast<int>(i) != scoped) {
            kids[i] = subst(kids[i], x, value);
            continue;
        }
        // x is not the binder here: x occurs free in t and this child is
        // under the binder, so either x occurs free in the child or the
        // child is returned unchanged below.
        if (binder == x || !kids[i].occurs_free(x)) continue;
        if (value.occurs_free(binder)) {
            VarSet avoid = value.free_vars();
            avoid.insert(kids[i].free_vars().begin(), kids[i].free_vars().end());
            avoid.insert(x);
            Var renamed = fresh_var(binder, avoid);
            kids[i] = subst(kids[i], binder, Term::var(renamed));
            binder = renamed;
        }
        kids[i] = subst(kids[i], x, value);
    }
    return Term::make(t.tag(), std::move(binder), std::move(kids));
}

namespace {

struct BinderPair {
    const Var* left;
    const Var* right;
};

bool alpha_rec(const Term& a, const Term& b, std::vector<BinderPair>& env) {
    if (env.empty() && a.same_node(b)) return true;
    if (a.tag() != b.tag()) return false;
    if (a.is(Tag::Var)) {
        for (auto it = env.rbegin(); it != env.rend(); ++it) {
            const bool l = *it->left == a.var();
            const bool r = *it->right == b.var();
            if (l || r) return l && r;
        }
        return a.var() == b.var();
    }
    const int scoped = a.bound_child();
    if (scoped >= 0 && a.var().category != b.var().category) return false;
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (static_cast<int>(i) == scoped) {
            env.push_back({&a.var(), &b.var()});
            const bool ok = alpha_rec(a.child(i), b.child(i), env);
            env.pop_back();
            if (!ok) return false;
        } else if (!alpha_rec(a.child(i), b.child(i), env)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool alpha_eq(const Term& a, const Term& b) {
    if (!a || !b) return !a && !b;
    if (a.size() != b.size() || a.free_vars() != b.free_vars()) return false;
    std::vector<BinderPair> env;
    return alpha_rec(a, b, env);
}

bool is_pure(const Term& t) {
    switch (t.tag()) {
    case Tag::Var: return t.var().category == VarCategory::Term;
    case Tag::App: return is_pure(t.child(0)) && is_pure(t.child(1));
    case Tag::UnannotatedLambda: return is_pure(t.child(0));
    default: return false;
    }
}

bool contains_tag(const Term& t, Tag tag) {
    if (t.tag() == tag) return true;
    for (std::size_t i = 0; i < t.arity(); ++i)
        if (contains_tag(t.child(i), tag)) return true;
    return false;
}

}  // namespace cedille

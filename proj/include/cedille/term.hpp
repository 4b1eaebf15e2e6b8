#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace cedille {

enum class VarCategory { Term, Type, Kind };

enum class Sort { Star, Box };

// Term variables are lower-case identifiers, type variables upper-case,
// kind variables start with '$'. The category of a name never changes.
VarCategory category_of(std::string_view name);
bool is_valid_var_name(std::string_view name);
bool is_keyword(std::string_view word);

struct Var {
    std::string name;
    VarCategory category = VarCategory::Term;

    Var() = default;
    explicit Var(std::string n) : name(std::move(n)), category(category_of(name)) {}
    Var(std::string n, VarCategory c) : name(std::move(n)), category(c) {}

    auto operator<=>(const Var&) const = default;
};

using VarSet = std::set<Var>;

enum class Tag {
    Var,
    Star,
    Box,
    Proj1,
    Proj2,
    Beta,              // beta lhs {witness}
    Delta,             // delta motive proof
    Sigma,             // sigma proof
    App,
    ErasedApp,
    Rho,               // rho proof @ x . guide - subject
    Forall,
    Pi,
    Iota,
    Lambda,
    ErasedLambda,
    UnannotatedLambda,
    IntersectIntro,    // [first, second @ x . guide]
    Phi,               // phi proof - subject {erased}
    Let,               // [x = definiens : annotation] - body
    Eq,
};

inline constexpr std::size_t kTagCount = static_cast<std::size_t>(Tag::Eq) + 1;

std::string_view tag_name(Tag tag);

// Immutable, shared term node. Copying a Term copies a pointer. Free
// variables are computed once at construction.
//
// Child layout per tag:
//   Proj1/Proj2/Sigma      [t]
//   Beta                   [lhs, witness]
//   Delta                  [motive, proof]
//   App/ErasedApp          [fun, arg]
//   Rho                    [proof, guide, subject]      binder scopes guide
//   Forall/Pi/Iota/Lambda/ErasedLambda
//                          [domain, body]               binder scopes body
//   UnannotatedLambda      [body]                       binder scopes body
//   IntersectIntro         [first, second, guide]       binder scopes guide
//   Phi                    [proof, subject, erased]
//   Let                    [definiens, annotation, body] binder scopes body
//   Eq                     [lhs, rhs]
class Term {
public:
    Term() = default;

    static Term var(Var v);
    static Term var(std::string name) { return var(Var(std::move(name))); }
    static Term star();
    static Term box();
    static Term sort(Sort s) { return s == Sort::Star ? star() : box(); }
    static Term proj1(Term t);
    static Term proj2(Term t);
    static Term beta(Term lhs, Term witness);
    static Term delta(Term motive, Term proof);
    static Term sigma(Term proof);
    static Term app(Term fun, Term arg);
    static Term erased_app(Term fun, Term arg);
    static Term rho(Term proof, Var x, Term guide, Term subject);
    static Term forall(Var x, Term domain, Term body);
    static Term pi(Var x, Term domain, Term body);
    static Term iota(Var x, Term first, Term second);
    static Term lambda(Var x, Term domain, Term body);
    static Term erased_lambda(Var x, Term domain, Term body);
    static Term unannotated_lambda(Var x, Term body);
    static Term intersect_intro(Term first, Term second, Var x, Term guide);
    static Term phi(Term proof, Term subject, Term erased);
    static Term let(Var x, Term definiens, Term annotation, Term body);
    static Term eq(Term lhs, Term rhs);

    // Generic constructor used by traversals; `binder` is ignored for tags
    // without one. Throws std::invalid_argument on arity or category errors.
    static Term make(Tag tag, Var binder, std::array<Term, 3> children);

    explicit operator bool() const noexcept { return node_ != nullptr; }
    bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

    Tag tag() const;
    bool is(Tag t) const { return node_ && tag() == t; }

    // Variable occurrence for Tag::Var, binder for binding forms.
    const Var& var() const;
    bool has_binder() const;
    std::size_t arity() const;
    const Term& child(std::size_t i) const;
    const std::array<Term, 3>& children() const;
    // Index of the child the binder scopes over, or -1.
    int bound_child() const;

    const VarSet& free_vars() const;
    bool occurs_free(const Var& v) const { return free_vars().count(v) != 0; }
    std::size_t size() const;

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

std::size_t tag_arity(Tag tag);
bool tag_has_binder(Tag tag);
int tag_bound_child(Tag tag);

VarSet free_vars(const Term& t);

// A name of the same category as `base` that is not in `avoid`.
Var fresh_var(const Var& base, const VarSet& avoid);

// Capture-avoiding substitution of `value` for free occurrences of `x`.
Term subst(const Term& t, const Var& x, const Term& value);

// Renames the binder of a binding node to `to`, which must not occur free
// in the scoped child.
Term rename_binder(const Term& binding, const Var& to);

bool alpha_eq(const Term& a, const Term& b);

// Variables of category Term, application and unannotated lambda only.
bool is_pure(const Term& t);

bool contains_tag(const Term& t, Tag tag);

// Printing lives with the parser (print_term); these forward to it.
std::ostream& operator<<(std::ostream& os, const Term& t);
std::string to_string(const Term& t);

}  // namespace cedille

#include "cedille/typecheck.hpp"

#include <utility>

#include "cedille/erase.hpp"

namespace cedille {

TypeError::TypeError(ErrorCode code, Term subject, std::string detail, std::optional<Term> expected,
                     std::optional<Term> actual)
    : Error(code, std::string(to_string(code)) + ": " + detail),
      subject_(std::move(subject)),
      detail_(std::move(detail)),
      expected_(std::move(expected)),
      actual_(std::move(actual)) {}

bool var_sort_ok(const Var& x, Sort s) {
    return (x.category == VarCategory::Term && s == Sort::Star) ||
           (x.category == VarCategory::Type && s == Sort::Box);
}

namespace {

std::string sort_name(Sort s) { return s == Sort::Star ? "*" : "#"; }

// Church-encoded true = false; delta eliminates proofs of it.
const Term& false_equation() {
    static const Term eq = [] {
        const Var x("x"), y("y");
        return Term::eq(Term::unannotated_lambda(x, Term::unannotated_lambda(y, Term::var(x))),
                        Term::unannotated_lambda(x, Term::unannotated_lambda(y, Term::var(y))));
    }();
    return eq;
}

class Synth {
public:
    explicit Synth(const CheckOptions& options) : options_(options) {}

    Term infer(const Context& ctx, const Term& t) const {
        switch (t.tag()) {
        case Tag::Star:
            return Term::box();
        case Tag::Box:
            throw TypeError(ErrorCode::BoxNotTypable, t, "# has no type");
        case Tag::Var: {
            const Context::Entry* e = ctx.lookup(t.var());
            if (!e) throw TypeError(ErrorCode::UnboundVariable, t, "'" + t.var().name + "' is not in scope");
            return e->type;
        }
        case Tag::Pi:
        case Tag::Forall:
            return Term::sort(product(ctx, t));
        case Tag::Iota:
            return iota(ctx, t);
        case Tag::Lambda:
        case Tag::ErasedLambda:
            return abstraction(ctx, t);
        case Tag::App:
        case Tag::ErasedApp:
            return application(ctx, t);
        case Tag::Proj1:
        case Tag::Proj2: {
            Term ty = whnf_checked(ctx, infer(ctx, t.child(0)), t);
            if (!ty.is(Tag::Iota))
                throw TypeError(ErrorCode::ExpectedIotaType, t,
                                "projected term has type " + print_term(ty) + ", not an intersection", std::nullopt, ty);
            if (t.is(Tag::Proj1)) return ty.child(0);
            return subst_erasing(ty.child(1), ty.var(), t.child(0));
        }
        case Tag::Beta: {
            Term eq = Term::eq(t.child(0), t.child(0));
            infer(ctx, eq);
            require_scoped(ctx, erase(t.child(1)), t);
            return eq;
        }
        case Tag::Sigma: {
            Term eq = equation_of(ctx, t.child(0), t);
            return Term::eq(eq.child(1), eq.child(0));
        }
        case Tag::Delta: {
            Term eq = equation_of(ctx, t.child(1), t);
            if (!def_eq_checked(ctx, eq, false_equation(), t))
                throw TypeError(ErrorCode::DeltaEquationMismatch, t,
                                "delta needs a proof of " + print_term(false_equation()) + ", got " + print_term(eq),
                                false_equation(), eq);
            sort_of(ctx, t.child(0), t);
            return t.child(0);
        }
        case Tag::Rho: {
            Term eq = equation_of(ctx, t.child(0), t);
            Term actual = infer(ctx, t.child(2));
            Term expected = subst(t.child(1), t.var(), eq.child(1));
            require_def_eq(ctx, expected, actual, t);
            return subst(t.child(1), t.var(), eq.child(0));
        }
        case Tag::Phi: {
            Term eq = equation_of(ctx, t.child(0), t);
            Term target = erase(t.child(2));
            require_scoped(ctx, target, t);
            require_def_eq(ctx, eq.child(0), erase(t.child(1)), t);
            require_def_eq(ctx, eq.child(1), target, t);
            return infer(ctx, t.child(1));
        }
        case Tag::Eq: {
            for (std::size_t i = 0; i < 2; ++i)
                if (!is_pure(t.child(i)))
                    throw TypeError(ErrorCode::PurityViolation, t,
                                    "equation side " + print_term(t.child(i)) + " is not a pure term");
            require_scoped(ctx, t, t);
            return Term::star();
        }
        case Tag::IntersectIntro:
            return intersection(ctx, t);
        case Tag::Let:
            return let(ctx, t);
        case Tag::UnannotatedLambda:
            throw TypeError(ErrorCode::PurityViolation, t,
                            "an unannotated lambda has no type; it may only occur where it is erased");
        }
        throw std::logic_error("unhandled term");
    }

    Sort sort_of(const Context& ctx, const Term& t, const Term& subject) const {
        Term ty = whnf_checked(ctx, infer(ctx, t), subject);
        if (ty.is(Tag::Star)) return Sort::Star;
        if (ty.is(Tag::Box)) return Sort::Box;
        throw TypeError(ErrorCode::SortCheckFailed, subject,
                        print_term(t) + " has type " + print_term(ty) + ", which is not a sort", std::nullopt, ty);
    }

    void require_def_eq(const Context& ctx, const Term& expected, const Term& actual, const Term& subject) const {
        if (!def_eq_checked(ctx, expected, actual, subject))
            throw TypeError(ErrorCode::NotDefinitionallyEqual, subject,
                            "expected " + print_term(expected) + ", got " + print_term(actual), expected, actual);
    }

    bool def_eq_checked(const Context& ctx, const Term& a, const Term& b, const Term& subject) const {
        Fuel fuel(options_.fuel);
        try {
            return def_eq(ctx, a, b, fuel);
        } catch (const FuelExhausted& e) {
            throw TypeError(ErrorCode::FuelExhausted, subject,
                            std::string(e.what()) + " while comparing " + print_term(a) + " and " + print_term(b));
        }
    }

    Term whnf_checked(const Context& ctx, const Term& t, const Term& subject) const {
        Fuel fuel(options_.fuel);
        try {
            return whnf(ctx, t, fuel);
        } catch (const FuelExhausted& e) {
            throw TypeError(ErrorCode::FuelExhausted, subject,
                            std::string(e.what()) + " while head-normalizing " + print_term(t));
        }
    }

    const CheckOptions& options() const { return options_; }

private:
    void require_scoped(const Context& ctx, const Term& t, const Term& subject) const {
        for (const Var& v : t.free_vars())
            if (!ctx.contains(v))
                throw TypeError(ErrorCode::UnboundVariable, subject, "'" + v.name + "' is not in scope");
    }

    Term equation_of(const Context& ctx, const Term& proof, const Term& subject) const {
        Term ty = whnf_checked(ctx, infer(ctx, proof), subject);
        if (!ty.is(Tag::Eq))
            throw TypeError(ErrorCode::ExpectedEquationType, subject,
                            print_term(proof) + " has type " + print_term(ty) + ", not an equation", std::nullopt, ty);
        return ty;
    }

    Sort product(const Context& ctx, const Term& original) const {
        const Term t = rename_away_from(ctx, original);
        const Var& x = t.var();
        const Sort s = sort_of(ctx, t.child(0), original);
        if (!var_sort_ok(x, s))
            throw TypeError(ErrorCode::SortCheckFailed, original,
                            "'" + x.name + "' cannot range over " + print_term(t.child(0)) + " of sort " + sort_name(s));
        const Sort body = sort_of(ctx.declare(x, t.child(0)), t.child(1), original);
        if (t.is(Tag::Forall) && body != Sort::Star)
            throw TypeError(ErrorCode::SortCheckFailed, original, "the body of an implicit product must be a type");
        return body;
    }

    Term iota(const Context& ctx, const Term& original) const {
        const Term t = rename_away_from(ctx, original);
        const Var& x = t.var();
        if (x.category != VarCategory::Term)
            throw TypeError(ErrorCode::SortCheckFailed, original, "a dependent intersection binds a term variable");
        if (sort_of(ctx, t.child(0), original) != Sort::Star ||
            sort_of(ctx.declare(x, t.child(0)), t.child(1), original) != Sort::Star)
            throw TypeError(ErrorCode::SortCheckFailed, original, "both components of an intersection must be types");
        return Term::star();
    }

    Term abstraction(const Context& ctx, const Term& original) const {
        const Term t = rename_away_from(ctx, original);
        const Var& x = t.var();
        const Term body_type = infer(ctx.declare(x, t.child(0)), t.child(1));
        if (t.is(Tag::ErasedLambda) && erase(t.child(1)).occurs_free(x))
            throw TypeError(ErrorCode::ErasedVarOccursFree, original,
                            "'" + x.name + "' is bound by an erased lambda but occurs in the erasure of its body");
        Term product = t.is(Tag::Lambda) ? Term::pi(x, t.child(0), body_type) : Term::forall(x, t.child(0), body_type);
        sort_of(ctx, product, original);
        return product;
    }

    Term application(const Context& ctx, const Term& t) const {
        const bool erased = t.is(Tag::ErasedApp);
        Term fun_type = whnf_checked(ctx, infer(ctx, t.child(0)), t);
        if (!fun_type.is(erased ? Tag::Forall : Tag::Pi))
            throw TypeError(erased ? ErrorCode::ExpectedForallType : ErrorCode::ExpectedPiType, t,
                            print_term(t.child(0)) + " has type " + print_term(fun_type) + ", not " +
                                (erased ? "an implicit product" : "a product"),
                            std::nullopt, fun_type);
        Term arg_type = infer(ctx, t.child(1));
        require_def_eq(ctx, fun_type.child(0), arg_type, t);
        return subst_erasing(fun_type.child(1), fun_type.var(), t.child(1));
    }

    Term intersection(const Context& ctx, const Term& t) const {
        const Term& first = t.child(0);
        const Term& second = t.child(1);
        Term first_type = infer(ctx, first);
        Term second_type = infer(ctx, second);
        require_def_eq(ctx, subst_erasing(t.child(2), t.var(), first), second_type, t);
        Term result = Term::iota(t.var(), first_type, t.child(2));
        infer(ctx, result);
        const Term ef = erase(first);
        const Term es = erase(second);
        const bool same = options_.strict_intersections ? alpha_eq(ef, es) : def_eq_checked(ctx, ef, es, t);
        if (!same)
            throw TypeError(ErrorCode::ErasureMismatch, t,
                            "components erase to " + print_term(ef) + " and " + print_term(es), ef, es);
        return result;
    }

    Term let(const Context& ctx, const Term& original) const {
        const Term t = rename_away_from(ctx, original);
        const Var& x = t.var();
        const Term& def = t.child(0);
        Term type = t.child(1);
        if (x.category == VarCategory::Kind) {
            if (!type.is(Tag::Box))
                throw TypeError(ErrorCode::SortCheckFailed, original, "a kind variable must be annotated with #");
            if (sort_of(ctx, def, original) != Sort::Box)
                throw TypeError(ErrorCode::SortCheckFailed, original, print_term(def) + " is not a kind");
        } else {
            Term def_type = infer(ctx, def);
            const Sort s = sort_of(ctx, type, original);
            if (!var_sort_ok(x, s))
                throw TypeError(ErrorCode::SortCheckFailed, original,
                                "'" + x.name + "' cannot be defined at a type of sort " + sort_name(s));
            require_def_eq(ctx, type, def_type, original);
        }
        Term body_type = infer(ctx.define(x, def, type), t.child(2));
        return subst_erasing(body_type, x, def);
    }

    const CheckOptions& options_;
};

}  // namespace

Term infer(const Context& ctx, const Term& t, const CheckOptions& options) { return Synth(options).infer(ctx, t); }

Judgment ModuleChecker::add(const GlobalDef& def) {
    const Synth synth(options_);
    const Var& x = def.name;
    try {
        Term type;
        if (x.category == VarCategory::Kind) {
            if (!def.annotation.is(Tag::Box))
                throw TypeError(ErrorCode::SortCheckFailed, def.definiens, "a kind variable must be annotated with #");
            if (synth.sort_of(ctx_, def.definiens, def.definiens) != Sort::Box)
                throw TypeError(ErrorCode::SortCheckFailed, def.definiens, print_term(def.definiens) + " is not a kind");
            type = Term::box();
        } else {
            type = synth.infer(ctx_, def.definiens);
            const Sort s = synth.sort_of(ctx_, def.annotation, def.annotation);
            if (!var_sort_ok(x, s))
                throw TypeError(ErrorCode::SortCheckFailed, def.annotation,
                                "'" + x.name + "' cannot be defined at a type of sort " + sort_name(s));
            synth.require_def_eq(ctx_, def.annotation, type, def.definiens);
        }
        ctx_ = ctx_.define(x, def.definiens, def.annotation);
        return {x, def.definiens, type};
    } catch (TypeError& e) {
        e.set_definition(x.name);
        throw;
    }
}

std::vector<Judgment> check_module(const SourceModule& m, const CheckOptions& options) {
    ModuleChecker checker(options);
    std::vector<Judgment> out;
    out.reserve(m.definitions.size());
    for (const GlobalDef& d : m.definitions) out.push_back(checker.add(d));
    return out;
}

}  // namespace cedille

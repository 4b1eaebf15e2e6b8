#include "cedille/norm.hpp"

#include <stdexcept>
#include <string>

#include "cedille/erase.hpp"

namespace cedille {

FuelExhausted::FuelExhausted(std::uint64_t budget)
    : Error(ErrorCode::FuelExhausted,
            "reduction did not finish within " + std::to_string(budget) + " steps"),
      budget_(budget) {}

Context Context::extend(Entry e) const {
    if (contains(e.name)) throw std::logic_error("context already binds '" + e.name.name + "'");
    Context next;
    next.head_ = std::make_shared<const Node>(Node{std::move(e), head_, size() + 1});
    return next;
}

Context Context::declare(Var x, Term type) const {
    return extend(Entry{std::move(x), std::move(type), Term(), Term()});
}

Context Context::define(Var x, Term definiens, Term type) const {
    Term erased = erase(definiens);
    return extend(Entry{std::move(x), std::move(type), std::move(definiens), std::move(erased)});
}

const Context::Entry* Context::lookup(const Var& x) const {
    for (const Node* n = head_.get(); n; n = n->prev.get())
        if (n->entry.name == x) return &n->entry;
    return nullptr;
}

std::size_t Context::size() const { return head_ ? head_->size : 0; }

VarSet Context::names() const {
    VarSet out;
    for (const Node* n = head_.get(); n; n = n->prev.get()) out.insert(n->entry.name);
    return out;
}

std::vector<Context::Entry> Context::entries() const {
    std::vector<Entry> out;
    for (const Node* n = head_.get(); n; n = n->prev.get()) out.push_back(n->entry);
    return {out.rbegin(), out.rend()};
}

Term rename_away_from(const Context& ctx, const Term& binding) {
    if (!binding.has_binder() || !ctx.contains(binding.var())) return binding;
    VarSet avoid = ctx.names();
    const VarSet& scoped = binding.child(static_cast<std::size_t>(binding.bound_child())).free_vars();
    avoid.insert(scoped.begin(), scoped.end());
    return rename_binder(binding, fresh_var(binding.var(), avoid));
}

Term subst_erasing(const Term& t, const Var& x, const Term& value) {
    return subst(t, x, x.category == VarCategory::Term ? erase(value) : value);
}

namespace {

enum class Mode { Annotated, Erased };

Term head_reduce(const Context& ctx, Term t, Fuel& fuel, Mode mode) {
    for (;;) {
        switch (t.tag()) {
        case Tag::Var: {
            const Context::Entry* e = ctx.lookup(t.var());
            if (!e || !e->is_definition()) return t;
            fuel.consume();
            t = mode == Mode::Erased ? e->erased_definiens : e->definiens;
            continue;
        }
        case Tag::App:
        case Tag::ErasedApp: {
            Term fun = head_reduce(ctx, t.child(0), fuel, mode);
            const bool redex = t.is(Tag::App)
                                   ? fun.is(Tag::Lambda) || fun.is(Tag::UnannotatedLambda)
                                   : fun.is(Tag::ErasedLambda);
            if (!redex) {
                if (fun.same_node(t.child(0))) return t;
                return Term::make(t.tag(), Var(), {fun, t.child(1), Term()});
            }
            fuel.consume();
            const Term& body = fun.child(fun.arity() - 1);
            t = mode == Mode::Erased ? subst(body, fun.var(), t.child(1))
                                     : subst_erasing(body, fun.var(), t.child(1));
            continue;
        }
        case Tag::Let:
            fuel.consume();
            t = mode == Mode::Erased ? subst(t.child(2), t.var(), t.child(0))
                                     : subst_erasing(t.child(2), t.var(), t.child(0));
            continue;
        default:
            return t;
        }
    }
}

Term normalize(const Context& ctx, const Term& t, Fuel& fuel) {
    Term h = head_reduce(ctx, t, fuel, Mode::Erased);
    if (h.arity() == 0) return h;
    if (h.has_binder()) h = rename_away_from(ctx, h);

    std::array<Term, 3> kids;
    bool changed = false;
    for (std::size_t i = 0; i < h.arity(); ++i) {
        kids[i] = normalize(ctx, h.child(i), fuel);
        changed = changed || !kids[i].same_node(h.child(i));
    }
    if (h.is(Tag::UnannotatedLambda)) {
        const Term& body = kids[0];
        if (body.is(Tag::App) && body.child(1).is(Tag::Var) && body.child(1).var() == h.var() &&
            !body.child(0).occurs_free(h.var())) {
            fuel.consume();
            return body.child(0);
        }
    }
    return changed ? Term::make(h.tag(), h.var(), std::move(kids)) : h;
}

}  // namespace

Term whnf(const Context& ctx, const Term& t, Fuel& fuel) { return head_reduce(ctx, t, fuel, Mode::Annotated); }

Term nf(const Context& ctx, const Term& t, Fuel& fuel) { return normalize(ctx, erase(t), fuel); }

bool def_eq(const Context& ctx, const Term& a, const Term& b, Fuel& fuel) {
    Term ea = erase(a);
    Term eb = erase(b);
    if (alpha_eq(ea, eb)) return true;
    Term na = normalize(ctx, ea, fuel);
    Term nb = normalize(ctx, eb, fuel);
    return alpha_eq(na, nb);
}

}  // namespace cedille

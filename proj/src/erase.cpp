#include "cedille/erase.hpp"

namespace cedille {

Term erase(const Term& t) {
    switch (t.tag()) {
    case Tag::Var:
    case Tag::Star:
    case Tag::Box:
        return t;
    case Tag::Proj1:
    case Tag::Proj2:
    case Tag::Sigma:
        return erase(t.child(0));
    case Tag::Beta:
    case Tag::Delta:
    case Tag::ErasedApp:
        return erase(t.child(t.is(Tag::ErasedApp) ? 0 : 1));
    case Tag::App:
        return Term::app(erase(t.child(0)), erase(t.child(1)));
    case Tag::Rho:
    case Tag::Phi:
        return erase(t.child(2));
    case Tag::Forall:
    case Tag::Pi:
    case Tag::Iota:
    case Tag::Eq:
        return Term::make(t.tag(), t.var(), {erase(t.child(0)), erase(t.child(1)), Term()});
    case Tag::Lambda:
        if (t.var().category == VarCategory::Term) return Term::unannotated_lambda(t.var(), erase(t.child(1)));
        return Term::lambda(t.var(), erase(t.child(0)), erase(t.child(1)));
    case Tag::ErasedLambda:
        return erase(t.child(1));
    case Tag::UnannotatedLambda:
        return Term::unannotated_lambda(t.var(), erase(t.child(0)));
    case Tag::IntersectIntro:
        return erase(t.child(0));
    case Tag::Let: {
        Term body = erase(t.child(2));
        Term def = erase(t.child(0));
        if (t.var().category == VarCategory::Term)
            return Term::app(Term::unannotated_lambda(t.var(), std::move(body)), std::move(def));
        return subst(body, t.var(), def);
    }
    }
    return t;
}

}  // namespace cedille

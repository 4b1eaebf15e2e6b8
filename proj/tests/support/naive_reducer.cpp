#include "naive_reducer.hpp"

#include <stdexcept>
#include <vector>

namespace cedille::testing {

namespace {

DbTerm bound(std::size_t i) { return std::make_shared<const Db>(Db{Db::Kind::Bound, i, {}, nullptr, nullptr}); }
DbTerm free_var(std::string n) {
    return std::make_shared<const Db>(Db{Db::Kind::Free, 0, std::move(n), nullptr, nullptr});
}
DbTerm lam(DbTerm body) { return std::make_shared<const Db>(Db{Db::Kind::Lam, 0, {}, std::move(body), nullptr}); }
DbTerm app(DbTerm f, DbTerm a) {
    return std::make_shared<const Db>(Db{Db::Kind::App, 0, {}, std::move(f), std::move(a)});
}

DbTerm convert(const Term& t, std::vector<std::string>& scope) {
    switch (t.tag()) {
    case Tag::Var:
        for (std::size_t i = scope.size(); i-- > 0;)
            if (scope[i] == t.var().name) return bound(scope.size() - 1 - i);
        return free_var(t.var().name);
    case Tag::App: return app(convert(t.child(0), scope), convert(t.child(1), scope));
    case Tag::UnannotatedLambda: {
        scope.push_back(t.var().name);
        DbTerm body = convert(t.child(0), scope);
        scope.pop_back();
        return lam(std::move(body));
    }
    default: throw std::invalid_argument("to_db: term is not pure");
    }
}

// Adds d to every index >= cutoff.
DbTerm shift(const DbTerm& t, long d, std::size_t cutoff) {
    switch (t->kind) {
    case Db::Kind::Bound: return t->index >= cutoff ? bound(static_cast<std::size_t>(t->index + d)) : t;
    case Db::Kind::Free: return t;
    case Db::Kind::Lam: return lam(shift(t->left, d, cutoff + 1));
    case Db::Kind::App: return app(shift(t->left, d, cutoff), shift(t->right, d, cutoff));
    }
    return t;
}

// Replaces index j by s, lowering the indices above j.
DbTerm substitute(const DbTerm& t, std::size_t j, const DbTerm& s) {
    switch (t->kind) {
    case Db::Kind::Bound:
        if (t->index == j) return shift(s, static_cast<long>(j), 0);
        return t->index > j ? bound(t->index - 1) : t;
    case Db::Kind::Free: return t;
    case Db::Kind::Lam: return lam(substitute(t->left, j + 1, s));
    case Db::Kind::App: return app(substitute(t->left, j, s), substitute(t->right, j, s));
    }
    return t;
}

bool mentions(const DbTerm& t, std::size_t j) {
    switch (t->kind) {
    case Db::Kind::Bound: return t->index == j;
    case Db::Kind::Free: return false;
    case Db::Kind::Lam: return mentions(t->left, j + 1);
    case Db::Kind::App: return mentions(t->left, j) || mentions(t->right, j);
    }
    return false;
}

// One leftmost-outermost step, or nullptr when t is normal.
DbTerm step(const DbTerm& t) {
    switch (t->kind) {
    case Db::Kind::Bound:
    case Db::Kind::Free: return nullptr;
    case Db::Kind::Lam: {
        const DbTerm& b = t->left;
        if (b->kind == Db::Kind::App && b->right->kind == Db::Kind::Bound && b->right->index == 0 &&
            !mentions(b->left, 0))
            return shift(b->left, -1, 0);
        DbTerm next = step(b);
        return next ? lam(next) : nullptr;
    }
    case Db::Kind::App: {
        if (t->left->kind == Db::Kind::Lam) return substitute(t->left->left, 0, t->right);
        if (DbTerm next = step(t->left)) return app(next, t->right);
        if (DbTerm next = step(t->right)) return app(t->left, next);
        return nullptr;
    }
    }
    return nullptr;
}

}  // namespace

DbTerm to_db(const Term& t) {
    std::vector<std::string> scope;
    return convert(t, scope);
}

bool db_equal(const DbTerm& a, const DbTerm& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case Db::Kind::Bound: return a->index == b->index;
    case Db::Kind::Free: return a->name == b->name;
    case Db::Kind::Lam: return db_equal(a->left, b->left);
    case Db::Kind::App: return db_equal(a->left, b->left) && db_equal(a->right, b->right);
    }
    return false;
}

std::string db_show(const DbTerm& t) {
    switch (t->kind) {
    case Db::Kind::Bound: return std::to_string(t->index);
    case Db::Kind::Free: return t->name;
    case Db::Kind::Lam: return "(\\ " + db_show(t->left) + ")";
    case Db::Kind::App: return "(" + db_show(t->left) + " " + db_show(t->right) + ")";
    }
    return "?";
}

std::optional<DbTerm> naive_normalize(DbTerm t, std::uint64_t max_steps) {
    for (std::uint64_t n = 0;; ++n) {
        DbTerm next = step(t);
        if (!next) return t;
        if (n == max_steps) return std::nullopt;
        t = std::move(next);
    }
}

}  // namespace cedille::testing

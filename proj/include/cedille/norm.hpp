#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cedille/error.hpp"
#include "cedille/term.hpp"

namespace cedille {

inline constexpr std::uint64_t kDefaultFuel = 100000;

class FuelExhausted : public Error {
public:
    explicit FuelExhausted(std::uint64_t budget);
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t budget_;
};

// Step budget for reduction. Every beta step, eta step and definition
// unfolding consumes one unit.
class Fuel {
public:
    explicit Fuel(std::uint64_t steps = kDefaultFuel) : budget_(steps), remaining_(steps) {}

    void consume() {
        if (remaining_ == 0) throw FuelExhausted(budget_);
        --remaining_;
    }
    std::uint64_t remaining() const noexcept { return remaining_; }
    std::uint64_t used() const noexcept { return budget_ - remaining_; }

private:
    std::uint64_t budget_;
    std::uint64_t remaining_;
};

// Ordered telescope of declarations `x : T` and definitions `x = t : T`.
// Persistent: extension shares the existing entries. Names are unique;
// extending with a name already present throws std::logic_error.
class Context {
public:
    struct Entry {
        Var name;
        Term type;
        Term definiens;         // null for declarations
        Term erased_definiens;  // erase(definiens), cached
        bool is_definition() const { return static_cast<bool>(definiens); }
    };

    Context() = default;

    Context declare(Var x, Term type) const;
    Context define(Var x, Term definiens, Term type) const;

    const Entry* lookup(const Var& x) const;
    bool contains(const Var& x) const { return lookup(x) != nullptr; }
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    VarSet names() const;
    std::vector<Entry> entries() const;

private:
    struct Node {
        Entry entry;
        std::shared_ptr<const Node> prev;
        std::size_t size;
    };
    Context extend(Entry e) const;
    std::shared_ptr<const Node> head_;
};

// If `binding`'s binder is already in `ctx`, rename it apart from the
// context and from the scoped child.
Term rename_away_from(const Context& ctx, const Term& binding);

// Substitute `value` for `x` the way the checker does: term variables
// receive the erasure of `value`, type and kind variables receive it as is.
Term subst_erasing(const Term& t, const Var& x, const Term& value);

// Weak-head normal form: contracts head redexes of lambda, erased lambda,
// unannotated lambda and let, and unfolds head variables defined in ctx.
Term whnf(const Context& ctx, const Term& t, Fuel& fuel);

// Full beta-eta normal form of erase(t), normal order, with definitions
// unfolded to their erasures. Eta contracts unannotated lambdas only.
Term nf(const Context& ctx, const Term& t, Fuel& fuel);

// Definitional equality: alpha-equality of the normal forms of the erasures.
// Throws FuelExhausted rather than answering when the budget runs out.
bool def_eq(const Context& ctx, const Term& a, const Term& b, Fuel& fuel);

}  // namespace cedille

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cedille/error.hpp"
#include "cedille/norm.hpp"
#include "cedille/parser.hpp"
#include "cedille/term.hpp"

namespace cedille {

class TypeError : public Error {
public:
    TypeError(ErrorCode code, Term subject, std::string detail,
              std::optional<Term> expected = std::nullopt, std::optional<Term> actual = std::nullopt);

    const Term& subject() const noexcept { return subject_; }
    const std::string& detail() const noexcept { return detail_; }
    const std::optional<Term>& expected() const noexcept { return expected_; }
    const std::optional<Term>& actual() const noexcept { return actual_; }

    // Name of the global definition being checked, when known.
    const std::string& definition() const noexcept { return definition_; }
    void set_definition(std::string name) { definition_ = std::move(name); }

private:
    Term subject_;
    std::string detail_;
    std::optional<Term> expected_;
    std::optional<Term> actual_;
    std::string definition_;
};

struct CheckOptions {
    // Budget for each individual whnf or definitional-equality call.
    std::uint64_t fuel = kDefaultFuel;
    // Compare the erasures of an intersection's components up to alpha
    // only, instead of up to definitional equality.
    bool strict_intersections = false;
};

struct Judgment {
    Var name;
    Term subject;
    Term type;
};

// Var(x, s): term variables live at sort *, type variables at sort #.
bool var_sort_ok(const Var& x, Sort s);

// Synthesizes the type of t. Throws TypeError; running out of fuel is
// reported as TypeError with ErrorCode::FuelExhausted.
Term infer(const Context& ctx, const Term& t, const CheckOptions& options = {});

// Checks global definitions one at a time, extending its context with each
// accepted definition.
class ModuleChecker {
public:
    explicit ModuleChecker(CheckOptions options = {}) : options_(options) {}

    // Throws TypeError (with the definition name attached) and leaves the
    // context unchanged on failure.
    Judgment add(const GlobalDef& def);

    const Context& context() const noexcept { return ctx_; }
    const CheckOptions& options() const noexcept { return options_; }

private:
    CheckOptions options_;
    Context ctx_;
};

std::vector<Judgment> check_module(const SourceModule& m, const CheckOptions& options = {});

}  // namespace cedille

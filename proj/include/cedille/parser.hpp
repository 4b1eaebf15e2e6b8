#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cedille/error.hpp"
#include "cedille/term.hpp"

namespace cedille {

struct GlobalDef {
    Var name;
    Term definiens;
    Term annotation;
    SourceLocation location;
};

// A parsed `.cdc` file: `name = term : type .` statements in order.
struct SourceModule {
    std::string source_name;
    std::vector<GlobalDef> definitions;

    const GlobalDef* find(std::string_view name) const;
};

// Annotated: unannotated lambdas are admitted only in equation sides, the
// first component of beta and the braces of beta and phi. Erased: admitted
// everywhere, so printed erasures and normal forms parse back.
enum class TermSyntax { Annotated, Erased };

// Both throw ParseError. Equation sides and the first component of beta must
// be pure terms (ErrorCode::PurityViolation otherwise).
Term parse_term(std::string_view input, TermSyntax syntax = TermSyntax::Annotated);
SourceModule parse_module(std::string_view input, std::string source_name = "<input>");

// Canonical surface syntax with minimal parentheses; parse_term inverts it
// up to alpha-equivalence.
std::string print_term(const Term& t);

}  // namespace cedille

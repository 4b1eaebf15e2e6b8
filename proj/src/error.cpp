#include "cedille/error.hpp"

#include <array>
#include <utility>

namespace cedille {

namespace {

constexpr std::array<std::pair<ErrorCode, std::string_view>, 16> kNames = {{
    {ErrorCode::ParseError, "ParseError"},
    {ErrorCode::PurityViolation, "PurityViolation"},
    {ErrorCode::DuplicateDefinition, "DuplicateDefinition"},
    {ErrorCode::ForwardReference, "ForwardReference"},
    {ErrorCode::UnboundVariable, "UnboundVariable"},
    {ErrorCode::ExpectedPiType, "ExpectedPiType"},
    {ErrorCode::ExpectedForallType, "ExpectedForallType"},
    {ErrorCode::ExpectedIotaType, "ExpectedIotaType"},
    {ErrorCode::ExpectedEquationType, "ExpectedEquationType"},
    {ErrorCode::SortCheckFailed, "SortCheckFailed"},
    {ErrorCode::NotDefinitionallyEqual, "NotDefinitionallyEqual"},
    {ErrorCode::ErasedVarOccursFree, "ErasedVarOccursFree"},
    {ErrorCode::ErasureMismatch, "ErasureMismatch"},
    {ErrorCode::DeltaEquationMismatch, "DeltaEquationMismatch"},
    {ErrorCode::BoxNotTypable, "BoxNotTypable"},
    {ErrorCode::FuelExhausted, "FuelExhausted"},
}};

}  // namespace

std::string_view to_string(ErrorCode code) {
    for (const auto& [c, name] : kNames)
        if (c == code) return name;
    return "Unknown";
}

std::optional<ErrorCode> error_code_from_string(std::string_view name) {
    for (const auto& [c, n] : kNames)
        if (n == name) return c;
    return std::nullopt;
}

ParseError::ParseError(ErrorCode code, SourceLocation where, std::string message,
                       std::vector<std::string> expected)
    : Error(code, std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message),
      where_(where),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

}  // namespace cedille

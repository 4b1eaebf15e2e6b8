#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cedille {

// Stable codes reported by the parser and the checker. The names are part of
// the CLI's machine output and of the negative corpus expectation files.
enum class ErrorCode {
    // parser
    ParseError,
    PurityViolation,
    DuplicateDefinition,
    ForwardReference,
    // checker
    UnboundVariable,
    ExpectedPiType,
    ExpectedForallType,
    ExpectedIotaType,
    ExpectedEquationType,
    SortCheckFailed,
    NotDefinitionallyEqual,
    ErasedVarOccursFree,
    ErasureMismatch,
    DeltaEquationMismatch,
    BoxNotTypable,
    FuelExhausted,
};

std::string_view to_string(ErrorCode code);
std::optional<ErrorCode> error_code_from_string(std::string_view name);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct SourceLocation {
    std::size_t offset = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

class ParseError : public Error {
public:
    ParseError(ErrorCode code, SourceLocation where, std::string message,
               std::vector<std::string> expected = {});

    const SourceLocation& location() const noexcept { return where_; }
    const std::string& message() const noexcept { return message_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    SourceLocation where_;
    std::string message_;
    std::vector<std::string> expected_;
};

}  // namespace cedille

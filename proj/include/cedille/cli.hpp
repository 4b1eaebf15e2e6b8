#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cedille/norm.hpp"

namespace cedille::cli {

enum class Command { Check, Type, Erase, Normalize };

enum class Format { Human, Machine };

struct RunConfig {
    Command command = Command::Check;
    std::vector<std::string> files;
    std::optional<std::string> name;
    std::uint64_t fuel = kDefaultFuel;
    bool strict_intersections = false;
    Format format = Format::Human;
};

enum ExitCode : int {
    kAccepted = 0,
    kTypeError = 1,
    kParseError = 2,
    kUsageError = 3,
    kFuelExhausted = 4,
};

// Reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses the command line (argv[0] is the program name) and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cedille::cli

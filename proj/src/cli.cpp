#include "cedille/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cedille/deep_stack.hpp"
#include "cedille/erase.hpp"
#include "cedille/parser.hpp"
#include "cedille/typecheck.hpp"

namespace cedille::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw UsageError("cannot read '" + path + "'");
    return ss.str();
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::PurityViolation:
    case ErrorCode::DuplicateDefinition:
    case ErrorCode::ForwardReference:
        return kParseError;
    case ErrorCode::FuelExhausted:
        return kFuelExhausted;
    default:
        return kTypeError;
    }
}

class Reporter {
public:
    Reporter(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

    void record(const std::string& name, bool ok, const std::string& payload) {
        const char sep = config_.format == Format::Machine ? '\t' : ' ';
        out_ << name << sep << (ok ? "ok" : "error") << sep << payload << '\n';
    }

private:
    const RunConfig& config_;
    std::ostream& out_;
};

void diagnose(std::ostream& err, const std::string& file, const ParseError& e) {
    err << file << ':' << e.location().line << ':' << e.location().column << ": " << to_string(e.code()) << ": "
        << e.message() << '\n';
}

void diagnose(std::ostream& err, const std::string& file, const TypeError& e) {
    err << file << ": in definition '" << e.definition() << "': " << to_string(e.code()) << ": " << e.detail()
        << '\n';
    if (e.subject()) err << "  offending term: " << print_term(e.subject()) << '\n';
}

CheckOptions options_of(const RunConfig& config) {
    return CheckOptions{config.fuel, config.strict_intersections};
}

// Checks one file, emitting a record per definition until the first failure.
int check_file(const RunConfig& config, const std::string& path, Reporter& report, std::ostream& err) {
    SourceModule m;
    try {
        m = parse_module(read_file(path), path);
    } catch (const ParseError& e) {
        diagnose(err, path, e);
        report.record(path, false, std::string(to_string(e.code())));
        return exit_code_for(e.code());
    }
    ModuleChecker checker(options_of(config));
    for (const GlobalDef& def : m.definitions) {
        try {
            Judgment j = checker.add(def);
            report.record(def.name.name, true, print_term(j.type));
        } catch (const TypeError& e) {
            diagnose(err, path, e);
            report.record(def.name.name, false, std::string(to_string(e.code())));
            return exit_code_for(e.code());
        }
    }
    return kAccepted;
}

const GlobalDef& select_definition(const RunConfig& config, const SourceModule& m) {
    if (config.name) {
        const GlobalDef* d = m.find(*config.name);
        if (!d) throw UsageError("no definition named '" + *config.name + "' in " + m.source_name);
        return *d;
    }
    if (m.definitions.size() != 1)
        throw UsageError(m.source_name + " has " + std::to_string(m.definitions.size()) +
                         " definitions; name the one to inspect");
    return m.definitions.front();
}

// type, erase and normalize act on one definition of one file.
int inspect(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::string& path = config.files.front();
    SourceModule m;
    try {
        m = parse_module(read_file(path), path);
    } catch (const ParseError& e) {
        diagnose(err, path, e);
        return exit_code_for(e.code());
    }
    const GlobalDef& target = select_definition(config, m);
    if (config.command == Command::Erase) {
        out << print_term(erase(target.definiens)) << '\n';
        return kAccepted;
    }
    ModuleChecker checker(options_of(config));
    try {
        for (const GlobalDef& def : m.definitions) {
            Judgment j = checker.add(def);
            if (&def != &target) continue;
            if (config.command == Command::Type) {
                out << print_term(j.type) << '\n';
            } else {
                Fuel fuel(config.fuel);
                out << print_term(nf(checker.context(), def.definiens, fuel)) << '\n';
            }
            return kAccepted;
        }
    } catch (const TypeError& e) {
        diagnose(err, path, e);
        return exit_code_for(e.code());
    } catch (const FuelExhausted& e) {
        err << path << ": in definition '" << target.name.name << "': FuelExhausted: " << e.what() << '\n';
        return kFuelExhausted;
    }
    return kAccepted;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.fuel == 0) throw UsageError("--fuel must be positive");
    if (config.files.empty()) throw UsageError("no input files");
    if (config.command != Command::Check) {
        if (config.files.size() != 1) throw UsageError("expected exactly one input file");
        return inspect(config, out, err);
    }
    Reporter report(config, out);
    int status = kAccepted;
    for (const std::string& path : config.files) {
        int rc;
        try {
            rc = check_file(config, path, report, err);
        } catch (const UsageError& e) {
            err << "error: " << e.what() << '\n';
            rc = kUsageError;
        }
        if (status == kAccepted) status = rc;
    }
    return status;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    int status = kUsageError;
    try {
        run_with_deep_stack([&] { status = dispatch(config, out, err); });
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return status;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Checker for Cedille Core (.cdc) files"};
    app.require_subcommand(1);

    RunConfig config;
    std::vector<std::string> operands;

    auto add_fuel = [&](CLI::App* sub) {
        sub->add_option("--fuel", config.fuel, "reduction steps allowed per equality check")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* check = app.add_subcommand("check", "type-check every definition of each FILE");
    add_fuel(check);
    check->add_flag("--strict-intersections", config.strict_intersections,
                    "compare intersection components' erasures up to renaming only");
    bool machine = false;
    check->add_flag("--machine", machine, "tab-separated output: name, status, payload");
    check->add_option("FILE", config.files, "input files")->required();

    CLI::App* type = app.add_subcommand("type", "print the synthesized type of NAME");
    CLI::App* erase_cmd = app.add_subcommand("erase", "print the erasure of NAME");
    CLI::App* normalize = app.add_subcommand("normalize", "print the normal form of NAME");
    add_fuel(type);
    add_fuel(normalize);
    for (CLI::App* sub : {type, erase_cmd, normalize})
        sub->add_option("operands", operands, "[NAME] FILE")->required()->expected(1, 2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    if (machine) config.format = Format::Machine;
    if (check->parsed()) {
        config.command = Command::Check;
    } else {
        config.command = type->parsed() ? Command::Type : erase_cmd->parsed() ? Command::Erase : Command::Normalize;
        if (operands.size() == 2) config.name = operands.front();
        config.files = {operands.back()};
    }
    return run(config, out, err);
}

}  // namespace cedille::cli

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cedille/cli.hpp"
#include "corpus.hpp"

using namespace cedille;
namespace gen = cedille::testing;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "cdcheck");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string corpus(const char* rel) { return gen::corpus_dir("").string() + "/" + rel; }

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        path_ = std::filesystem::temp_directory_path() /
                ("cdcheck_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".cdc");
        std::ofstream(path_) << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST(Cli, CheckIdentity) {
    TempFile f("id = Lam X : * . lam u : X . u : all X : * . Pi u : X . X .\n");
    Outcome o = run_cli({"check", f.path()});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "id ok all X : * . Pi u : X . X\n");
}

TEST(Cli, CheckUnbound) {
    TempFile f("x = y : * .\n");
    Outcome o = run_cli({"check", f.path()});
    EXPECT_EQ(o.code, 1);
    EXPECT_EQ(o.out, "x error UnboundVariable\n");
    EXPECT_NE(o.err.find("UnboundVariable"), std::string::npos);
    EXPECT_NE(o.err.find("'x'"), std::string::npos);
}

TEST(Cli, EraseIdentity) {
    TempFile f("id = Lam X : * . lam u : X . u : all X : * . Pi u : X . X .\n");
    Outcome o = run_cli({"erase", "id", f.path()});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "\\u. u\n");
}

TEST(Cli, NameOptionalForSingleDefinition) {
    TempFile f("id = Lam X : * . lam u : X . u : all X : * . Pi u : X . X .\n");
    EXPECT_EQ(run_cli({"erase", f.path()}).out, "\\u. u\n");
    EXPECT_EQ(run_cli({"type", f.path()}).out, "all X : * . Pi u : X . X\n");
}

TEST(Cli, NormalizeChurchArithmetic) {
    Outcome o = run_cli({"normalize", "add23", corpus("positive/church_nat.cdc")});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "\\s. \\z. s (s (s (s (s z))))\n");
    Outcome nine = run_cli({"normalize", "mul33", corpus("positive/church_nat.cdc")});
    EXPECT_EQ(nine.out, "\\s. \\z. s (s (s (s (s (s (s (s (s z))))))))\n");
}

TEST(Cli, TypeOfNamedDefinition) {
    Outcome o = run_cli({"type", "tt", corpus("positive/church_bool.cdc")});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "all X : * . Pi t : X . Pi f : X . X\n");
}

TEST(Cli, MachineFormat) {
    TempFile f("A = Pi X : * . X : * .\nx = y : * .\n");
    Outcome human = run_cli({"check", f.path()});
    Outcome machine = run_cli({"check", "--machine", f.path()});
    EXPECT_EQ(machine.out, "A\tok\t*\nx\terror\tUnboundVariable\n");
    EXPECT_EQ(human.out, "A ok *\nx error UnboundVariable\n");
    EXPECT_EQ(human.code, machine.code);
}

TEST(Cli, ParseErrorRecord) {
    TempFile f("a = lam u X . u : * .\n");
    Outcome o = run_cli({"check", f.path()});
    EXPECT_EQ(o.code, 2);
    EXPECT_EQ(o.out, f.path() + " error ParseError\n");
    EXPECT_NE(o.err.find(f.path() + ":1:"), std::string::npos);
}

TEST(Cli, ParseErrorSubcodes) {
    EXPECT_EQ(run_cli({"check", corpus("negative/purity_lambda.cdc")}).code, 2);
    EXPECT_EQ(run_cli({"check", corpus("negative/duplicate.cdc")}).code, 2);
    EXPECT_EQ(run_cli({"check", corpus("negative/forward_reference.cdc")}).code, 2);
}

TEST(Cli, StopsAtFirstErrorInFile) {
    TempFile f("x = y : * .\nA = Pi X : * . X : * .\n");
    EXPECT_EQ(run_cli({"check", f.path()}).out, "x error UnboundVariable\n");
}

TEST(Cli, MultipleFilesFirstFailureWins) {
    TempFile good("A = Pi X : * . X : * .\n");
    TempFile bad("x = y : * .\n");
    TempFile unparsable("x = ");
    Outcome o = run_cli({"check", good.path(), bad.path(), unparsable.path()});
    EXPECT_EQ(o.code, 1);
    EXPECT_EQ(o.out, "A ok *\nx error UnboundVariable\n" + unparsable.path() + " error ParseError\n");
    EXPECT_EQ(run_cli({"check", unparsable.path(), bad.path()}).code, 2);
}

TEST(Cli, FuelExhausted) {
    Outcome o = run_cli({"check", corpus("fuel/omega.cdc")});
    EXPECT_EQ(o.code, 4);
    EXPECT_EQ(o.out, "omega error FuelExhausted\n");
    EXPECT_EQ(run_cli({"check", "--fuel", "10", corpus("fuel/omega.cdc")}).code, 4);
}

TEST(Cli, FuelTooSmallForNormalize) {
    Outcome o = run_cli({"normalize", "--fuel", "3", "mul33", corpus("positive/church_nat.cdc")});
    EXPECT_EQ(o.code, 4);
}

TEST(Cli, StrictIntersections) {
    TempFile f(
        "A = all X : * . Pi u : X . X : * .\n"
        "i = Lam X : * . lam u : X . u : A .\n"
        "j = (lam a : A . a) i : A .\n"
        "k = [ i , j @ x . A ] : iota x : A . A .\n");
    EXPECT_EQ(run_cli({"check", f.path()}).code, 0);
    Outcome strict = run_cli({"check", "--strict-intersections", f.path()});
    EXPECT_EQ(strict.code, 1);
    EXPECT_NE(strict.out.find("k error ErasureMismatch"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, 3);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 3);
    EXPECT_EQ(run_cli({"check"}).code, 3);
    EXPECT_EQ(run_cli({"check", "--fuel", "0", corpus("positive/identity.cdc")}).code, 3);
    EXPECT_EQ(run_cli({"check", "/nonexistent/file.cdc"}).code, 3);
    EXPECT_EQ(run_cli({"type", corpus("positive/identity.cdc")}).code, 3);
    EXPECT_EQ(run_cli({"type", "missing", corpus("positive/identity.cdc")}).code, 3);
    EXPECT_EQ(run_cli({"erase", "a", "b", "c"}).code, 3);
}

TEST(Cli, Help) {
    Outcome o = run_cli({"--help"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("check"), std::string::npos);
}

TEST(Cli, Deterministic) {
    Outcome a = run_cli({"check", corpus("positive/church_nat.cdc")});
    Outcome b = run_cli({"check", corpus("positive/church_nat.cdc")});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, 0);
}

TEST(Cli, RunWithConfig) {
    cli::RunConfig config;
    config.files = {corpus("positive/identity.cdc")};
    config.format = cli::Format::Machine;
    std::ostringstream out, err;
    EXPECT_EQ(cli::run(config, out, err), cli::kAccepted);
    EXPECT_NE(out.str().find("id\tok\t"), std::string::npos);
}

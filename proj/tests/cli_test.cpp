#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace cluster_a11::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, ElementHuman) {
    const auto r = invoke({"x", "3", "--format", "human"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "1 * x1^-1 + 1 * x1^-1 * x2^2\n");
    EXPECT_EQ(invoke({"x", "3"}).out, r.out);
}

TEST(Cli, ElementJson) {
    const auto r = invoke({"s", "0", "--format", "json"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "{\"vars\":[\"x1\",\"x2\"],\"terms\":[{\"e1\":0,\"e2\":0,\"c\":\"1\"}]}\n");
}

TEST(Cli, ElementEval) {
    EXPECT_EQ(invoke({"x", "5", "--eval", "1,1"}).out, "13\n");
    EXPECT_EQ(invoke({"s", "1", "--eval", "1,1"}).out, "3\n");
    EXPECT_EQ(invoke({"x", "3", "--eval", "2,1"}).out, "1\n");
    EXPECT_EQ(invoke({"x", "3", "--eval", "3,1"}).out, "2/3\n");
    EXPECT_EQ(invoke({"x", "-2", "--eval", "1,1"}).out, "13\n");
    EXPECT_EQ(invoke({"f", "2", "--eval", "1,1"}).out, "3\n");
}

TEST(Cli, UsageAndDomainErrors) {
    EXPECT_EQ(invoke({"s", "-2"}).code, kExitUsage);
    EXPECT_EQ(invoke({"f", "-1"}).code, kExitUsage);
    EXPECT_EQ(invoke({"x", "3", "--eval", "0,1"}).code, kExitUsage);
    EXPECT_EQ(invoke({"x", "3", "--eval", "1"}).code, kExitUsage);
    EXPECT_EQ(invoke({"x", "abc"}).code, kExitUsage);
    EXPECT_EQ(invoke({"x", "3", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(invoke({"x", "1000001"}).code, kExitUsage);
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(invoke({"fib", "26", "--oracle"}).code, kExitUsage);
    EXPECT_EQ(invoke({"fib", "-1"}).code, kExitUsage);
    EXPECT_EQ(invoke({"verify", "--max", "-1"}).code, kExitUsage);
    EXPECT_EQ(invoke({"bench", "--n", "-1"}).code, kExitUsage);
    EXPECT_EQ(invoke({"verify", "--max", "1", "--inject-fault", "q:1"}).code, kExitUsage);
    const auto r = invoke({"s", "-2"});
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpExitsZero) {
    EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, Fib) {
    EXPECT_EQ(invoke({"fib", "2"}).out, "[[],[1],[2]]\n");
    EXPECT_EQ(invoke({"fib", "0"}).out, "[[]]\n");
    EXPECT_EQ(invoke({"fib", "3", "--oracle"}).out, "[[],[1],[2],[3],[1,3]]\n");
    EXPECT_EQ(invoke({"fib", "12"}).out, invoke({"fib", "12", "--oracle"}).out);
    EXPECT_EQ(invoke({"fib", "30"}).code, kExitOk);
}

TEST(Cli, VerifyPassesAndFaultFails) {
    const auto ok = invoke({"verify", "--max", "5"});
    EXPECT_EQ(ok.code, kExitOk);
    EXPECT_NE(ok.out.find("\nPASS\n"), std::string::npos);
    EXPECT_EQ(invoke({"verify", "--max", "0"}).code, kExitOk);

    for (const char* fault : {"s:1", "x:4:2", "x:-3", "f:7:5", "s:5:11"}) {
        const auto bad = invoke({"verify", "--max", "5", "--inject-fault", fault});
        EXPECT_EQ(bad.code, kExitFailure) << fault;
        EXPECT_NE(bad.out.find("FAIL first at"), std::string::npos) << fault;
        EXPECT_NE(bad.out.find("\nFAIL\n"), std::string::npos) << fault;
    }
}

TEST(Cli, BenchReportsTermCounts) {
    const auto r = invoke({"bench", "--n", "10"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("x(13): "), std::string::npos);
    EXPECT_NE(r.out.find(" 67 terms"), std::string::npos);
    EXPECT_NE(r.out.find(" 66 terms"), std::string::npos);
    EXPECT_NE(invoke({"bench", "--n", "0"}).out.find("x(3): "), std::string::npos);
    EXPECT_NE(invoke({"bench", "--n", "0"}).out.find(" 2 terms"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
    EXPECT_EQ(invoke({"x", "17", "--format", "json"}).out, invoke({"x", "17", "--format", "json"}).out);
    EXPECT_EQ(invoke({"verify", "--max", "4"}).out, invoke({"verify", "--max", "4"}).out);
}

TEST(Cli, MaxIndexEnvironmentOnlyLowers) {
    ::setenv(kMaxIndexEnv, "20", 1);
    EXPECT_EQ(effective_max_index(), 20);
    EXPECT_EQ(invoke({"x", "21"}).code, kExitUsage);
    EXPECT_EQ(invoke({"x", "20", "--eval", "1,1"}).code, kExitOk);
    ::setenv(kMaxIndexEnv, "5000000", 1);
    EXPECT_EQ(effective_max_index(), kDefaultMaxIndex);
    ::setenv(kMaxIndexEnv, "junk", 1);
    EXPECT_EQ(effective_max_index(), kDefaultMaxIndex);
    ::unsetenv(kMaxIndexEnv);
    EXPECT_EQ(effective_max_index(), kDefaultMaxIndex);
}

TEST(Cli, FaultSpecParsing) {
    const auto [id, term] = parse_fault("x:-4:9");
    EXPECT_EQ(id, ElementId::X(-4));
    EXPECT_EQ(term, 9u);
    EXPECT_THROW(parse_fault("x"), UsageError);
    EXPECT_THROW(parse_fault("x:1:2:3"), UsageError);
    EXPECT_THROW(parse_fault("x:1:-2"), UsageError);
    EXPECT_THROW(parse_fault("y:1"), UsageError);
}

}  // namespace
}  // namespace cluster_a11::cli

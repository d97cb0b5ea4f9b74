#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fibalg/cli.hpp"

using namespace fibalg;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, ExampleInvocations) {
    auto r = call({"seq", "fib", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"n\":10,\"value\":\"55\"}\n");

    r = call({"identity", "range", "P21_III", "0", "0"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["checked"], 1);
    EXPECT_TRUE(j["failures"].empty());

    r = call({"cert", "family", "4", "2"});
    EXPECT_EQ(r.code, 0);
    j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["a"], "5");
    EXPECT_EQ(j["b"], "1");
    EXPECT_EQ(j["point"], nlohmann::json({"1", "2", "3"}));
    EXPECT_EQ(j["verified"], true);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(call({"identity", "check", "P21_IX_AS_PRINTED", "1"}).code, cli::kCheckFailed);
    EXPECT_EQ(call({"cert", "verify", "1", "1", "1", "1", "1"}).code, cli::kCheckFailed);
    const auto r = call({"cert", "decide", "316837008400094222150776737920885469881809351973256961", "3",
                         "--budget", "0"});
    EXPECT_EQ(r.code, cli::kUndecided);
    EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "undecided");
    EXPECT_EQ(call({"seq", "fib"}).code, cli::kUsage);
    EXPECT_EQ(call({"seq", "fib", "abc"}).code, cli::kUsage);
    EXPECT_EQ(call({"seq", "fib", "2000000"}).code, cli::kUsage);
    EXPECT_EQ(call({"nope"}).code, cli::kUsage);
    const auto unknown = call({"seq", "zeta", "3"});
    EXPECT_EQ(unknown.code, cli::kUsage);
    EXPECT_NE(unknown.err.find("usage"), std::string::npos);
    EXPECT_EQ(call({"seq", "fib", "3", "--frobnicate"}).code, cli::kUsage);
}

TEST(Cli, NegativeRationalArguments) {
    const auto r = call({"quat", "mul", "1", "-1/2", "0", "0", "1", "1/2", "0", "0", "--alpha", "-3", "--beta", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["coeffs"], nlohmann::json({"7/4", "0", "0", "0"}));
    EXPECT_EQ(j["alpha"], "-3");
}

TEST(Cli, OutputIsReproducible) {
    const std::vector<std::vector<std::string>> cmds = {
        {"identity", "range", "P21_VIII", "0", "50"},
        {"quat", "fibq", "7"},
        {"genseq", "limit", "1", "1", "0", "1"},
        {"dtype", "iterate", "units-mod:11", "1", "1", "0", "1", "2", "3", "5"},
    };
    for (const auto& c : cmds) {
        const auto a = call(c);
        const auto b = call(c);
        EXPECT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
        EXPECT_TRUE(nlohmann::json::accept(a.out));
    }
}

TEST(Cli, EveryLibraryOperationIsReachable) {
    const std::set<std::string> required = {
        "fib", "lucas", "fib_pair", "gen_fib_lucas", "check_identity", "verify_range", "f5_factor",
        "in_ring_A", "m_element", "in_ideal_M", "quat_mul", "quat_conj", "quat_trace", "quat_add", "quat_sub",
        "quat_norm", "fib_quaternion", "lucas_quaternion", "norm_relation_check", "certificate_family",
        "verify_point", "search_point", "decide_split_hilbert", "relation_seq", "binet_general", "ratio_limit",
        "d_seq", "dtype_seq", "dtype_closed_form",
    };
    std::set<std::string> covered;
    std::set<std::string> paths;
    for (const auto& c : cli::command_table()) {
        EXPECT_TRUE(paths.insert(std::string(c.path)).second) << "duplicate " << c.path;
        for (auto op : c.operations)
            covered.insert(std::string(op));
    }
    for (const auto& op : required)
        EXPECT_TRUE(covered.count(op)) << op;
}

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "axesk/cli.hpp"

using namespace axesk;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, TextOutputs) {
    EXPECT_EQ(run({"cyc", "--d", "3", "--s", "6"}).out, "9\n");
    EXPECT_EQ(run({"cyc", "--d", "2", "--s", "5"}).out, "0\n");
    EXPECT_EQ(run({"k", "--p", "3", "--d", "3", "--q", "2", "--n", "1"}).out, "W_1(k)^3 ≅ (Z/3)^3\n");
    EXPECT_EQ(run({"k", "--p", "3", "--d", "3", "--q", "1"}).out, "0\n");
    EXPECT_EQ(run({"k", "--p", "0", "--d", "3", "--q", "2", "--trdeg", "0"}).out, "k^3\n");
    EXPECT_EQ(run({"summand", "--m", "2", "--s", "2", "--p", "3", "--tcminus", "--degree", "2", "--n", "1"}).out,
              "W_1(k) ≅ Z/3\n");
    EXPECT_EQ(run({"hc", "--q", "2", "--d", "3", "--birelative"}).out, "k^2 ⊕ (Ω^1)^3\n");
}

TEST(Cli, TableLastRow) {
    const auto o = run({"cyc", "--d", "4", "--table", "12"});
    ASSERT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("\n12 44220\n"), std::string::npos);
}

TEST(Cli, HomologyReportsBothComputations) {
    const auto o = run({"homology", "--word", "x1x2x3x1x2x3"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("degree 5: Z/2\n"), std::string::npos);
    EXPECT_NE(o.out.find("degree 6: 0\n"), std::string::npos);
    EXPECT_NE(o.out.find("oracle=closed-form"), std::string::npos);

    const auto f2 = run({"homology", "--word", "x1x2x3x1x2x3", "--coeff", "2", "--json"});
    ASSERT_EQ(f2.code, 0) << f2.err;
    const auto doc = nlohmann::json::parse(f2.out);
    EXPECT_TRUE(doc["result"]["agree"].get<bool>());
    EXPECT_EQ(doc["result"]["degrees"][0]["oracle"], "k");
}

TEST(Cli, JsonRoundTrip) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"cyc", "--d", "3", "--table", "5", "--json"},
             {"tc", "--p", "2", "--d", "3", "--q", "5", "--n", "1", "--json"},
             {"hc", "--q", "3", "--d", "4", "--trdeg", "1", "--json"}}) {
        const auto o = run(args);
        ASSERT_EQ(o.code, 0) << o.err;
        const auto doc = cli::document_from_json(nlohmann::json::parse(o.out));
        EXPECT_EQ(cli::render_json(doc), o.out);
        EXPECT_EQ(cli::document_from_json(cli::to_json(doc)), doc);
        EXPECT_EQ(o.out.find('.'), std::string::npos) << "no floating point in JSON";
    }
}

TEST(Cli, BigIntegersBecomeStrings) {
    EXPECT_EQ(cli::big_to_json(BigInt(42)), nlohmann::json(42));
    BigInt huge = BigInt(1) << 80;
    EXPECT_EQ(cli::big_to_json(huge), nlohmann::json(huge.str()));
    const auto o = run({"cyc", "--d", "6", "--s", "40", "--json"});
    EXPECT_TRUE(nlohmann::json::parse(o.out)["result"]["value"].is_string());
}

TEST(Cli, ExitCodesFollowErrorCategories) {
    EXPECT_EQ(run({"k", "--p", "4", "--d", "3", "--q", "2"}).code, exit_code(ErrorCategory::invalid_argument));
    EXPECT_EQ(run({"k", "--p", "0", "--d", "3", "--q", "2"}).code, exit_code(ErrorCategory::invalid_argument));
    EXPECT_EQ(run({"summand", "--m", "6", "--s", "3", "--p", "3", "--tp", "--degree", "5"}).code,
              exit_code(ErrorCategory::domain_error));
    EXPECT_EQ(run({"frobnicate"}).code, exit_code(ErrorCategory::invalid_argument));
    EXPECT_EQ(run({"homology", "--word", "x1x1x2"}).code, exit_code(ErrorCategory::invalid_argument));
    const auto o = run({"tc", "--p", "3", "--d", "3", "--q", "-1", "--json"});
    EXPECT_NE(o.code, 0);
    EXPECT_EQ(nlohmann::json::parse(o.out)["error"]["category"], "invalid_argument");
}

TEST(Cli, BudgetFromEnvironment) {
    ::setenv(cli::kBudgetEnvVar, "100", 1);
    const auto limited = run({"cyc", "--d", "3", "--s", "6", "--verify"});
    EXPECT_EQ(limited.code, exit_code(ErrorCategory::budget_exceeded));
    EXPECT_NE(limited.err.find("budget_exceeded"), std::string::npos);
    // without --verify the budget is irrelevant
    EXPECT_EQ(run({"cyc", "--d", "3", "--s", "6"}).code, 0);
    ::setenv(cli::kBudgetEnvVar, "lots", 1);
    EXPECT_EQ(run({"cyc", "--d", "3", "--s", "6", "--verify"}).code, exit_code(ErrorCategory::invalid_argument));
    ::unsetenv(cli::kBudgetEnvVar);
    EXPECT_EQ(run({"cyc", "--d", "3", "--s", "6", "--verify"}).out, "9\n");
}

TEST(Cli, VerifyDoesNotChangeResults) {
    const auto plain = nlohmann::json::parse(run({"k", "--p", "5", "--d", "4", "--q", "9", "--json"}).out);
    const auto checked =
        nlohmann::json::parse(run({"k", "--p", "5", "--d", "4", "--q", "9", "--verify", "--json"}).out);
    EXPECT_EQ(plain["result"]["symbolic"], checked["result"]["symbolic"]);
    EXPECT_EQ(plain["result"]["terms"], checked["result"]["terms"]);
}

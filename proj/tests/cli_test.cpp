#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "replab/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = replab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TreeGolden) {
    const auto r = run({"tree", "--min-square", "2", "--power", "inf"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["leaves"], 478);
    EXPECT_EQ(doc["height"], 19);
    EXPECT_EQ(doc["t"], 2);
    EXPECT_EQ(doc["maximal_words"], json::array({"010011000111001101"}));
    EXPECT_EQ(doc["power"], "inf");
    EXPECT_EQ(doc["per_depth_counts"].size(), 19u);
}

TEST(Cli, TreeInconclusiveExitsOne) {
    const auto r = run({"tree", "--min-square", "3", "--power", "3+", "--max-depth", "50"});
    EXPECT_EQ(r.code, 1);
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["finite"], false);
    EXPECT_EQ(doc["depth_reached"], 50);
}

TEST(Cli, DetectViolation) {
    const auto r = run({"detect", "--word", "0101010", "--min-square", "3", "--power", "3+"});
    EXPECT_EQ(r.code, 1);
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["violation"]["exponent"], "7/2");
    EXPECT_EQ(doc["violation"]["kind"], "ForbiddenPower");
    EXPECT_EQ(doc["avoids"], false);

    const auto clean = run({"detect", "--word", "0011101010", "--min-square", "3", "--power", "3+"});
    EXPECT_EQ(clean.code, 0);
    EXPECT_EQ(json::parse(clean.out)["avoids"], true);
}

TEST(Cli, ApplyToEmptyWord) {
    const auto r = run({"morphism", "apply", "--morphism", "f", "--word", "ε"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["output"], "");
    const auto text = run({"--format", "text", "morphism", "apply", "--morphism", "f", "--word", "ε"});
    EXPECT_EQ(text.out, "\n");
}

TEST(Cli, MalformedPowerNamesFlag) {
    const auto r = run({"tree", "--min-square", "2", "--power", "5/"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--power"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());

    const auto low = run({"detect", "--word", "01", "--min-square", "3", "--power", "1/1"});
    EXPECT_EQ(low.code, 2);
    EXPECT_NE(low.err.find("--power"), std::string::npos) << low.err;
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"tree", "--power", "inf"}).code, 2);
    EXPECT_EQ(run({"detect", "--word", "012", "--min-square", "3", "--power", "3"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "tree", "--min-square", "2", "--power", "inf"}).code, 2);
    const auto unknown = run({"morphism", "apply", "--morphism", "nope", "--word", "0"});
    EXPECT_EQ(unknown.code, 2);
    EXPECT_FALSE(unknown.err.empty());
    EXPECT_EQ(run({"--registry", "/nonexistent.json", "morphism", "list"}).code, 2);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
    const std::vector<std::string> args = {"tree", "--min-square", "7", "--power", "7/3"};
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.out, b.out);
    auto threaded = args;
    threaded.insert(threaded.begin(), {"--threads", "3"});
    EXPECT_EQ(run(threaded).out, a.out);
}

TEST(Cli, VerifyExitCodes) {
    const auto f = run({"morphism", "verify", "--morphism", "f"});
    EXPECT_EQ(f.code, 0) << f.err;
    std::istringstream lines(f.out);
    std::string line;
    std::vector<std::string> checks;
    while (std::getline(lines, line)) {
        const auto doc = json::parse(line);
        checks.push_back(doc["check"]);
        EXPECT_EQ(doc["pass"], true);
    }
    EXPECT_EQ(checks, (std::vector<std::string>{"distinct", "inclusion", "interchange", "images_avoid"}));

    // f's images fail the stricter overlap-free requirement
    const auto strict = run({"morphism", "verify", "--morphism", "f", "--min-square", "3", "--power", "2+"});
    EXPECT_EQ(strict.code, 1);
}

TEST(Cli, EnumerateCsv) {
    const auto r = run({"--format", "csv", "enumerate", "--min-square", "4", "--power", "5/2+",
                        "--max-n", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,count\n0,1\n1,2\n2,4\n3,6\n4,10\n5,16\n");
    const auto j = json::parse(run({"enumerate", "--min-square", "7", "--power", "7/3+", "--max-n", "4"}).out);
    EXPECT_EQ(j["rows"].back()["count"], 10);
}

TEST(Cli, GrowthCommands) {
    const auto upper = run({"growth", "upper", "--forbidden", "0000,1111"});
    ASSERT_EQ(upper.code, 0) << upper.err;
    EXPECT_NEAR(json::parse(upper.out)["value"].get<double>(), 1.8392867552, 1e-9);
    const auto lower = run({"growth", "lower", "--width", "252"});
    EXPECT_NEAR(json::parse(lower.out)["value"].get<double>(), 1.0004142, 1e-6);
}

TEST(Cli, GenerateAndForbidden) {
    const auto g = run({"--format", "text", "morphism", "generate", "--morphism", "f", "--length", "10"});
    EXPECT_EQ(g.out, "0011101010\n");
    const auto f = run({"--format", "text", "forbidden", "--min-square", "3", "--power", "3+",
                        "--max-forbidden-len", "4"});
    EXPECT_EQ(f.code, 0);
    EXPECT_EQ(f.out, "0000\n1111\n");
}

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "evagent_cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "evagent");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    argv.push_back(nullptr);
    std::ostringstream out, err;
    const int code = evagent::cli::cli_main(static_cast<int>(args.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::string kFixtures = std::string(EVAGENT_DATA_DIR) + "/fixtures.json";

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("evagent-cli-" + std::to_string(::getpid()) + "-" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_F(CliTest, RunPrintsSummaryAndReward) {
    const auto r = cli({"run", "--config", kFixtures, "--task", "t01", "--transcript", path("t01.jsonl")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("task t01: "), std::string::npos);
    EXPECT_NE(r.out.find("reward: 1.0\n"), std::string::npos);
    EXPECT_TRUE(fs::exists(path("t01.jsonl")));
}

TEST_F(CliTest, ReplayEndsWithTheReward) {
    ASSERT_EQ(cli({"run", "--config", kFixtures, "--task", "t03", "--transcript", path("t03.jsonl")}).code, 0);
    const auto r = cli({"replay", path("t03.jsonl")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("cycle 1"), std::string::npos);
    const std::string tail = "reward: 1.0\n";
    ASSERT_GE(r.out.size(), tail.size());
    EXPECT_EQ(r.out.substr(r.out.size() - tail.size()), tail);
}

TEST_F(CliTest, PolicyOverrideChangesTheOutcome) {
    const auto r = cli({"run", "--config", kFixtures, "--task", "t03", "--policy", "failing"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("15 actions"), std::string::npos);
    EXPECT_NE(r.out.find("reward: 0.0\n"), std::string::npos);
}

TEST_F(CliTest, BenchWritesTableReportAndTranscripts) {
    const auto r = cli({"bench", "--config", kFixtures, "--report", path("report.json"), "--transcripts", path("tx")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("Agent Configuration", 0), 0u);
    EXPECT_NE(r.out.find("| Average Reward"), std::string::npos);
    EXPECT_NE(r.out.find("1.00"), std::string::npos);
    const auto report = nlohmann::json::parse(slurp(path("report.json")));
    ASSERT_EQ(report["rows"].size(), 2u);
    EXPECT_EQ(report["rows"][0]["policy"], "single_shot");
    EXPECT_EQ(report["rows"][1]["policy"], "optimal");
    EXPECT_DOUBLE_EQ(report["rows"][1]["mean"].get<double>(), 1.0);
    EXPECT_LT(report["rows"][0]["mean"].get<double>(), 1.0);
    EXPECT_TRUE(fs::exists(path("tx/optimal/t10.jsonl")));
    EXPECT_TRUE(fs::exists(path("tx/single_shot/t01.jsonl")));
}

TEST_F(CliTest, BenchPoliciesFlag) {
    const auto r = cli({"bench", "--config", kFixtures, "--report", path("r.json"), "--policies", "optimal,failing"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto report = nlohmann::json::parse(slurp(path("r.json")));
    ASSERT_EQ(report["rows"].size(), 2u);
    EXPECT_EQ(report["rows"][1]["policy"], "failing");
    EXPECT_EQ(report["rows"][1]["mean"].get<double>(), 0.0);
}

TEST_F(CliTest, Validate) {
    const auto r = cli({"validate", "--config", kFixtures});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "ok: 12 products, 10 tasks\n");
}

TEST_F(CliTest, ConfigProblemsExitOne) {
    EXPECT_EQ(cli({"run", "--config", path("missing.json")}).code, 1);
    EXPECT_EQ(cli({"run", "--config", kFixtures, "--task", "t99"}).code, 1);
    EXPECT_EQ(cli({"replay", path("missing.jsonl")}).code, 1);

    std::ofstream(path("bad.json")) << "{\"candidate_cap\": 3}";
    const auto r = cli({"validate", "--config", path("bad.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("candidate_cap"), std::string::npos);

    std::ofstream(path("junk.jsonl")) << "not json\n";
    EXPECT_EQ(cli({"replay", path("junk.jsonl")}).code, 1);
}

TEST_F(CliTest, UsageErrorsExitOne) {
    EXPECT_EQ(cli({}).code, 1);
    EXPECT_EQ(cli({"frobnicate"}).code, 1);
    EXPECT_EQ(cli({"run"}).code, 1);
    EXPECT_EQ(cli({"run", "--config", kFixtures, "--provider", "oracle"}).code, 1);
    EXPECT_EQ(cli({"bench", "--config", kFixtures, "--memory", "cloud"}).code, 1);
}

TEST_F(CliTest, HelpAndVersionExitZero) {
    const auto h = cli({"--help"});
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find("bench"), std::string::npos);
    const auto v = cli({"--version"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("0.3.0"), std::string::npos);
}

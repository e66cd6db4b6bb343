#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cli.hpp"

namespace shiftflip::cli {
namespace {

namespace fs = std::filesystem;

std::string fixture(const std::string& name) { return std::string(SHIFTFLIP_FIXTURE_DIR) + "/" + name; }

Json outputs_of(const CliOutcome& o) { return parse_json(o.rendered)["outputs"]; }

TEST(Cli, ValidateExampleOne) {
    const CliOutcome o = run_cli({"--format", "plain", "validate", fixture("example1_AJ.json")});
    EXPECT_EQ(o.exit_code, kPass);
    EXPECT_NE(o.rendered.find("flip pair: valid"), std::string::npos) << o.rendered;
}

TEST(Cli, GeneratingFunctionOfExampleOneIdentity) {
    const CliOutcome o = run_cli({"zeta", "--pair", fixture("example1_AI.json"), "--which", "gen", "--order", "8"});
    ASSERT_EQ(o.exit_code, kPass) << o.rendered;
    const TruncatedSeries s = series_from_json(outputs_of(o)["series"]);
    std::vector<Rational> expected;
    for (long c : {0, 0, 4, 0, 8, 0, 16, 0, 32}) expected.emplace_back(c);
    EXPECT_EQ(s.coeffs(), expected);
}

TEST(Cli, CharpolyExampleTwoC) {
    const CliOutcome o = run_cli({"charpoly", fixture("example2_C.json")});
    ASSERT_EQ(o.exit_code, kPass);
    EXPECT_EQ(outputs_of(o)["polynomial"], "t^7 - 7t^6 + 19t^5 - 26t^4 + 19t^3 - 7t^2 + t");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({"no-such-command"}).exit_code, kUsageError);
    EXPECT_EQ(run_cli({"validate"}).exit_code, kUsageError);
    EXPECT_EQ(run_cli({"validate", fixture("missing.json")}).exit_code, kUsageError);
    // Lag 1 is not enough for (A, A).
    const CliOutcome fail = run_cli({"sfe-check", "--from", fixture("example1_AJ.json"), "--to",
                                     fixture("example1_AI.json"), "--R", fixture("example1_A.json"), "--lag", "1"});
    EXPECT_EQ(fail.exit_code, kCheckFailed) << fail.rendered;
    EXPECT_NE(fail.rendered.find("A^k = RS"), std::string::npos);
    const CliOutcome pass = run_cli({"sfe-check", "--from", fixture("example1_AJ.json"), "--to",
                                     fixture("example1_AI.json"), "--R", fixture("example1_sfe_lag2.json")});
    EXPECT_EQ(pass.exit_code, kPass) << pass.rendered;
}

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("shiftflip-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string write(const std::string& name, const std::string& text) {
        const fs::path p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
    fs::path dir;
};

TEST_F(TempDir, MalformedJsonIsAUsageErrorWithPosition) {
    const std::string path = write("bad.json", "{\n  \"A\": [[1, 0],\n  oops\n}");
    const CliOutcome o = run_cli({"validate", path});
    EXPECT_EQ(o.exit_code, kUsageError);
    EXPECT_NE(o.report.error.find("line 3"), std::string::npos) << o.report.error;
}

TEST_F(TempDir, SchemaViolationNamesTheField) {
    const std::string path = write("pair.json", R"({"alphabet":["1","2"],"A":[[1,1],[1,0]],"J":[[1,0],[0,"x"]]})");
    const CliOutcome o = run_cli({"validate", path});
    EXPECT_EQ(o.exit_code, kUsageError);
    EXPECT_NE(o.report.error.find("/J/1/1"), std::string::npos) << o.report.error;
}

TEST_F(TempDir, AxiomViolationIsACheckFailure) {
    const std::string path = write("pair.json", R"({"alphabet":["1","2"],"A":[[1,1],[1,1]],"J":[[1,1],[0,1]]})");
    const CliOutcome o = run_cli({"validate", path});
    EXPECT_EQ(o.exit_code, kCheckFailed);
    ASSERT_FALSE(o.report.verdicts.empty());
    EXPECT_EQ(o.report.verdicts.back().locator, "J^2 = I");
}

TEST_F(TempDir, PaperExamplesNegativeControl) {
    for (const char* name : {"example1_A.json", "example1_J.json", "example2_A.json", "example2_B.json",
                             "example2_C.json", "example2_J.json"}) {
        fs::copy_file(fixture(name), dir / name);
    }
    Json c = read_json_file((dir / "example2_C.json").string());
    c["rows"][0][0] = c["rows"][0][0].get<int>() == 0 ? 1 : 0;
    write("example2_C.json", c.dump());
    const CliOutcome o = run_cli({"paper-examples", "--fixture-dir", dir.string(), "--no-search"});
    EXPECT_EQ(o.exit_code, kCheckFailed);
    ASSERT_TRUE(o.report.table.has_value());
    bool charpoly_failed = false;
    for (const auto& row : o.report.table->rows) {
        if (row[0] == "example2/charpoly C") charpoly_failed = row[3] == "FAIL";
        if (row[0] == "example2/charpoly A") EXPECT_EQ(row[3], "pass");
    }
    EXPECT_TRUE(charpoly_failed);
}

TEST(Cli, PaperExamplesAllPass) {
    const CliOutcome o = run_cli({"paper-examples"});
    EXPECT_EQ(o.exit_code, kPass) << o.rendered;
    ASSERT_TRUE(o.report.table.has_value());
    EXPECT_GT(o.report.table->rows.size(), 30U);
}

TEST(Cli, OrderOverrideTruncatesSeriesRows) {
    const CliOutcome o = run_cli({"--order", "4", "paper-examples", "--no-search"});
    EXPECT_EQ(o.exit_code, kPass);
    for (const auto& row : o.report.table->rows) {
        if (row[0] == "example1/G(A,I)") EXPECT_EQ(row[1], "[0/1, 0/1, 4/1, 0/1, 8/1]");
    }
}

TEST(Cli, OutputIsDeterministic) {
    for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
             {"paper-examples", "--no-search"},
             {"--format", "csv", "count", "--pair", fixture("example2_AJ.json"), "--m-max", "4"},
             {"decompose", fixture("conj_center_m1.json")},
             {"--format", "plain", "higher-block", "--pair", fixture("golden_mean.json"), "--n", "2"}}) {
        const CliOutcome a = run_cli(args);
        const CliOutcome b = run_cli(args);
        EXPECT_EQ(a.exit_code, kPass) << a.rendered;
        EXPECT_EQ(a.rendered, b.rendered);
    }
}

TEST(Cli, TimingIsOptIn) {
    EXPECT_EQ(run_cli({"charpoly", fixture("example2_A.json")}).rendered.find("timing"), std::string::npos);
    EXPECT_NE(run_cli({"--timing", "charpoly", fixture("example2_A.json")}).rendered.find("timing_ms"), std::string::npos);
}

TEST(Cli, InputsDigestDependsOnBytes) {
    const CliOutcome a = run_cli({"charpoly", fixture("example2_A.json")});
    const CliOutcome b = run_cli({"charpoly", fixture("example2_C.json")});
    EXPECT_EQ(a.report.inputs_digest.rfind("sha256:", 0), 0U);
    EXPECT_NE(a.report.inputs_digest, b.report.inputs_digest);
}

TEST(Cli, SearchesAndConstructions) {
    const CliOutcome he = run_cli({"he-search", "--from", fixture("example1_AJ.json"), "--to", fixture("example1_AI.json")});
    EXPECT_EQ(he.exit_code, kPass) << he.rendered;
    EXPECT_NE(he.rendered.find("none within bounds"), std::string::npos) << he.rendered;

    const CliOutcome sfe = run_cli({"sfe-search", "--from", fixture("example2_AJ.json"), "--to",
                                    fixture("example2_CJ.json"), "--lag-max", "2", "--entry-max", "1"});
    EXPECT_EQ(sfe.exit_code, kPass) << sfe.rendered;
    EXPECT_NE(sfe.rendered.find("none within bounds"), std::string::npos);

    EXPECT_EQ(run_cli({"build-pair", fixture("golden_block_flip.json")}).exit_code, kPass);
    EXPECT_EQ(run_cli({"decompose", fixture("conj_relabel_m0.json")}).exit_code, kPass);
    EXPECT_EQ(run_cli({"rank-profile", fixture("example2_C.json"), "--eigenvalue", "1", "--max-power", "4"}).exit_code,
              kPass);
}

TEST_F(TempDir, SseVerifyLocatesBrokenLink) {
    const CliOutcome hb = run_cli({"higher-block", "--pair", fixture("golden_mean.json"), "--n", "2", "--emit-chain"});
    ASSERT_EQ(hb.exit_code, kPass);
    Json chain = outputs_of(hb)["chain"];
    const std::string good = write("good.json", chain.dump());
    EXPECT_EQ(run_cli({"sse-verify", good}).exit_code, kPass);
    auto& cell = chain["links"][1]["R"][0][0];
    cell = cell.get<int>() == 0 ? 1 : 0;
    const CliOutcome bad = run_cli({"sse-verify", write("bad.json", chain.dump())});
    EXPECT_EQ(bad.exit_code, kCheckFailed);
    ASSERT_FALSE(bad.report.verdicts.empty());
    bool located = false;
    for (const Verdict& v : bad.report.verdicts) located |= !v.passed && v.locator.find('1') != std::string::npos;
    EXPECT_TRUE(located) << bad.rendered;
}

}  // namespace
}  // namespace shiftflip::cli

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fria/cli/cli.h"
#include "support.h"

namespace fria::cli {
namespace {

using fria::testing::TempDir;

struct Outcome {
  int code;
  std::string out, err;
};

class CliTest : public ::testing::Test {
 protected:
  Outcome fria(std::vector<std::string> rest) {
    std::vector<std::string> args{"--store", dir_.path().string(), "--date", fria::testing::kGoldenDate};
    args.insert(args.end(), rest.begin(), rest.end());
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }
  std::filesystem::path answers_file() {
    auto p = dir_.path() / "answers.json";
    std::ofstream(p) << fria::testing::golden_answers().dump();
    return p;
  }

  TempDir dir_;
};

TEST_F(CliTest, GoldenTranscriptMatchesEngine) {
  TempDir answers_dir;
  auto answers = answers_dir.path() / "answers.json";
  std::ofstream(answers) << fria::testing::golden_answers().dump();
  std::string exported;
  for (const auto& args : fria::testing::golden_cli_steps(dir_.path(), answers)) {
    std::ostringstream out, err;
    ASSERT_EQ(run(args, out, err), kOk) << args.back() << ": " << err.str();
    exported = out.str();
  }
  TempDir other;
  store::Engine engine(fria::testing::golden_config(other.path()));
  EXPECT_EQ(exported, fria::testing::golden_via_engine(engine));
  auto log = fria({"log", "golden"}).out;
  EXPECT_EQ(log.substr(log.size() - 9), "Complete\n");
}

TEST_F(CliTest, ValidateExitCodes) {
  fria({"new", "a"});
  fria({"necessity", "a", "--flag", "public-body=true"});
  EXPECT_EQ(fria({"validate", "a"}).code, kOk);
  fria({"answer", "a", "--file", answers_file().string()});
  fria({"compile", "a"});
  EXPECT_EQ(fria({"validate", "a"}).code, kOk);
  // drop a mandatory value behind the engine's back
  auto ttl = dir_.path() / "a" / "record.ttl";
  auto text = fria::testing::read_file(ttl);
  std::string kept;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);)
    if (line.find("hasDuration") == std::string::npos) kept += line + "\n";
  ASSERT_NE(kept, text);
  std::ofstream(ttl, std::ios::trunc) << kept;
  auto r = fria({"validate", "a"});
  EXPECT_EQ(r.code, kNonConforming);
  EXPECT_NE(r.out.find("hasDuration"), std::string::npos);
}

TEST_F(CliTest, CqBeforeOutcomeExplainsEmptyAnswer) {
  fria({"new", "a"});
  auto r = fria({"cq", "a", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("outcome not determined"), std::string::npos);
}

TEST_F(CliTest, UnacceptableRiskBlocksDeployment) {
  auto answers = fria::testing::golden_answers();
  answers["risk-residual-level"] = "fria-ext:ResidualRiskUnacceptable";
  auto p = dir_.path() / "unacceptable.json";
  std::ofstream(p) << answers.dump();
  fria({"new", "a"});
  fria({"necessity", "a", "--status", "required"});
  ASSERT_EQ(fria({"answer", "a", "--file", p.string()}).code, kOk);
  ASSERT_EQ(fria({"compile", "a"}).code, kOk);
  auto r = fria({"outcome", "a"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "outcome: fria:FRIAOutcomeUnacceptableRisk\ndeployment permitted: false\n");
}

TEST_F(CliTest, JsonOutput) {
  auto r = fria({"--json", "new", "a"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["id"], "a");
  EXPECT_EQ(j["version"], 1);
  auto next = nlohmann::json::parse(fria({"--json", "next", "a"}).out);
  EXPECT_TRUE(next.contains("answer_kind"));
}

TEST_F(CliTest, UsageAndDomainErrors) {
  EXPECT_EQ(fria({}).code, kFault);
  EXPECT_EQ(fria({"frobnicate"}).code, kFault);
  EXPECT_EQ(fria({"new"}).code, kFault);
  fria({"new", "a"});
  EXPECT_EQ(fria({"necessity", "a", "--flag", "public-body"}).code, kFault);
  EXPECT_EQ(fria({"answer", "a"}).code, kFault);
  auto stale = fria({"touch", "a", "--version", "7"});
  EXPECT_EQ(stale.code, kFault);
  EXPECT_NE(stale.err.find("fria: "), std::string::npos);
  auto illegal = fria({"outcome", "a"});
  EXPECT_EQ(illegal.code, kFault);
  EXPECT_EQ(fria({"notice", "a"}).code, kFault);
  EXPECT_EQ(fria({"export", "a", "--format", "xml"}).code, kFault);
  EXPECT_EQ(fria({"--date", "yesterday", "list"}).code, kFault);
  std::ostringstream out, err;
  EXPECT_EQ(run({"--help"}, out, err), kOk);
  EXPECT_NE(out.str().find("necessity"), std::string::npos);
}

TEST_F(CliTest, ListAndStatus) {
  fria({"new", "b"});
  fria({"new", "a"});
  EXPECT_EQ(fria({"list"}).out, "a\nb\n");
  auto status = fria({"status", "a"});
  EXPECT_NE(status.out.find("accepts: AssessNecessity"), std::string::npos);
}

}  // namespace
}  // namespace fria::cli

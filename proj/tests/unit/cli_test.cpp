#include <gtest/gtest.h>

#include <cstdlib>
#include <sys/wait.h>

#include "scenariodoc/serialize.hpp"
#include "scenariodoc/server.hpp"
#include "test_util.hpp"

using namespace scenariodoc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int exit_code = -1;
  std::string output;
};

Run run_cli(const std::string& args, const fs::path& dir) {
  const auto log = dir / "cli.log";
  const std::string cmd = std::string("\"") + SCENARIODOC_CLI + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  Run r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.output = testutil::read_file(log);
  return r;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST(Cli, MineThenDocument) {
  testutil::TempDir dir("cli");
  const auto scen = dir.path() / "out" / "scenarios.json";
  auto r = run_cli("mine --quiet --corpus " + q(testutil::fixture("fixture_threads.jsonl")) + " --apidb " +
                       q(testutil::fixture("fixture_apidb.json")) + " --out " + q(scen),
                   dir.path());
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("scenarios 15"), std::string::npos) << r.output;
  EXPECT_EQ(load_scenarios(scen), load_scenarios(testutil::fixture("golden_scenarios.json")));

  r = run_cli("document --scenarios " + q(scen) + " --apidb " + q(testutil::fixture("fixture_apidb.json")) +
                  " --out " + q(dir.path() / "bundles"),
              dir.path());
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const BundleStore store(dir.path() / "bundles");
  EXPECT_EQ(store.manifest().apis.size(), 5u);
}

TEST(Cli, AllWithoutServingReadsXmlDump) {
  testutil::TempDir dir("cli-xml");
  const auto r = run_cli("all --no-serve --format xml-dump --corpus " + q(testutil::fixture("xmldump")) +
                             " --apidb " + q(testutil::fixture("fixture_apidb.json")) + " --out " +
                             q(dir.path() / "b"),
                         dir.path());
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_FALSE(BundleStore(dir.path() / "b").manifest().apis.empty());
}

TEST(Cli, ConfigErrorsExitTwo) {
  testutil::TempDir dir("cli-cfg");
  const auto corpus = q(testutil::fixture("fixture_threads.jsonl"));
  auto r = run_cli("mine --corpus " + corpus + " --out x.json --set concept.bogus=1", dir.path());
  EXPECT_EQ(r.exit_code, 2) << r.output;
  EXPECT_NE(r.output.find("config error"), std::string::npos);
  r = run_cli("document --scenarios " + q(testutil::fixture("golden_scenarios.json")) + " --out " +
                  q(dir.path() / "b") + " --min-support 0",
              dir.path());
  EXPECT_EQ(r.exit_code, 2) << r.output;
  r = run_cli("mine --corpus " + corpus + " --out x.json --config " + q(dir.path() / "none.toml"), dir.path());
  EXPECT_EQ(r.exit_code, 2) << r.output;
}

TEST(Cli, MissingInputsFail) {
  testutil::TempDir dir("cli-missing");
  auto r = run_cli("mine --corpus " + q(dir.path() / "absent.jsonl") + " --out " + q(dir.path() / "s.json"),
                   dir.path());
  EXPECT_EQ(r.exit_code, 1) << r.output;
  r = run_cli("", dir.path());
  EXPECT_NE(r.exit_code, 0);
}

TEST(Cli, InspectPrintsParse) {
  testutil::TempDir dir("cli-inspect");
  const auto r = run_cli("inspect --corpus " + q(testutil::fixture("fixture_threads.jsonl")), dir.path());
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("TypeToken"), std::string::npos);
}

TEST(Cli, InspectJsonDump) {
  testutil::TempDir dir("cli-inspect-json");
  const auto r = run_cli("inspect --json --quiet --corpus " + q(testutil::fixture("fixture_threads.jsonl")), dir.path());
  ASSERT_EQ(r.exit_code, 0) << r.output;
  std::size_t n = 0;
  bool saw_gson_answer = false;
  std::istringstream lines(r.output);
  for (std::string line; std::getline(lines, line);) {
    const auto j = nlohmann::json::parse(line);
    ++n;
    if (j["post_id"] == "1002") {
      saw_gson_answer = true;
      EXPECT_EQ(j["kind"], "valid-java");
      EXPECT_EQ(j["locals"], nlohmann::json::array({"Data"}));
    }
  }
  EXPECT_EQ(n, 23u);
  EXPECT_TRUE(saw_gson_answer);
}

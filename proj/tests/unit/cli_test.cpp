#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(KPFREE_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  while (const std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("kpfree_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateThenAnalyzeFigureGraph) {
  ASSERT_EQ(run("generate --family h1_figure -o " + path("h1.el")).exit_code, 0);
  EXPECT_TRUE(std::filesystem::exists(path("h1.el.manifest.json")));
  const CliResult a = run("analyze -i " + path("h1.el"));
  ASSERT_EQ(a.exit_code, 0);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["max_degree"], 4);
  EXPECT_EQ(j["min_degree"], 4);
  EXPECT_EQ(j["clique_number"], 3);
  EXPECT_EQ(j["clique_counts"]["3"], 7);
  EXPECT_EQ(j["chromatic_number"], 4);
}

TEST_F(Cli, AnalyzePendantGraph) {
  ASSERT_EQ(run("generate --family h0_pendant -o " + path("h0.el")).exit_code, 0);
  const CliResult a = run("analyze -i " + path("h0.el"));
  ASSERT_EQ(a.exit_code, 0);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["max_degree"], 9);
  EXPECT_EQ(j["clique_number"], 8);
  EXPECT_EQ(j["independence_number"], 16);
  EXPECT_EQ(j["maximum_independent_sets"], 1);
  EXPECT_EQ(j["chromatic_number"], 8);
}

TEST_F(Cli, OracleRefutesStrongProduct) {
  ASSERT_EQ(run("generate --family strong_product --factor C5 --factor K2 -o " + path("g.el")).exit_code, 0);
  const CliResult two = run("oracle exists -i " + path("g.el") + " --spec 4,2");
  ASSERT_EQ(two.exit_code, 0);
  EXPECT_EQ(json::parse(two.out)["exists"], false);
  const CliResult maxset = run("oracle maxset -i " + path("g.el") + " --p 4");
  ASSERT_EQ(maxset.exit_code, 0);
  EXPECT_EQ(json::parse(maxset.out)["size"], 7);
}

TEST_F(Cli, PartitionThenVerify) {
  ASSERT_EQ(run("generate --family random -n 14 -p 0.5 --seed 3 -o " + path("r.el")).exit_code, 0);
  const json stats = json::parse(run("analyze --no-exact -i " + path("r.el")).out);
  const int delta = stats["max_degree"];
  const std::string spec = std::to_string(delta - 2) + ",3";
  ASSERT_EQ(run("partition -i " + path("r.el") + " --spec " + spec + " -o " + path("part.json")).exit_code, 0);
  std::ifstream in(path("part.json"));
  json part = json::parse(in);
  EXPECT_EQ(part["certified"], true);
  EXPECT_EQ(run("verify -i " + path("r.el") + " --partition " + path("part.json")).exit_code, 0);

  std::swap(part["classes"][0], part["classes"][1]);
  std::ofstream(path("swapped.json")) << part.dump();
  const CliResult bad = run("verify -i " + path("r.el") + " --partition " + path("swapped.json"));
  EXPECT_EQ(bad.exit_code, 4);
  EXPECT_EQ(json::parse(bad.out)["valid"], false);
}

TEST_F(Cli, ExitCodesForBadInput) {
  EXPECT_EQ(run("analyze -i " + path("missing.el")).exit_code, 2);
  std::ofstream(path("bad.el")) << "3 1\n0 5\n";
  EXPECT_EQ(run("analyze -i " + path("bad.el")).exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  ASSERT_EQ(run("generate --family h1_figure -o " + path("h1.el")).exit_code, 0);
  EXPECT_EQ(run("partition -i " + path("h1.el") + " --spec 4,4").exit_code, 2);
  EXPECT_EQ(run("oracle exists -i " + path("h1.el") + " --spec 3,2 --max-n 4").exit_code, 3);
}

TEST_F(Cli, SearchRediscoversFigureGraph) {
  const CliResult r = run("search --spec 3,2 --n-min 8 --n-max 8 --include-named");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  bool figure = false;
  for (const json& ref : j["refutations"])
    if (ref.contains("isomorphic_to") && ref["isomorphic_to"] == "h1_figure") figure = true;
  EXPECT_TRUE(figure);
}

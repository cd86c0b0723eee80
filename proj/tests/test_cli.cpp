#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json_io.hpp"

namespace galg {
namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"group", "--name", "Z7"}).code, cli::kUsage);
  EXPECT_EQ(run({"suite", "--name", "nope"}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"cyclo", "--f", "6", "--ell", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"nrd", "--group", "C2", "--matrix", "{not json"}).code, cli::kUsage);
}

TEST(Cli, GroupReport) {
  auto r = run({"group", "--name", "S3"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = io::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], io::kSchemaVersion);
  EXPECT_EQ(j["order"], 6);
}

TEST(Cli, NrdOfOnePlusGenerator) {
  auto r = run({"nrd", "--group", "C2", "--matrix", R"([[{"0":"1","1":"1"}]])"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = io::json::parse(r.out);
  EXPECT_EQ(j["nrd"]["class_coords"], (io::json{"1", "1"}));
}

TEST(Cli, CycloFamily) {
  auto r = run({"cyclo", "--fmax", "30", "--ellmax", "13"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = io::json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 135u);
  EXPECT_EQ(j["all_pass"], true);
  EXPECT_EQ(run({"cyclo", "--fmax", "12", "--ellmax", "7", "--flip"}).code, cli::kMathFailure);
}

TEST(Cli, SuiteIsDeterministic) {
  auto a = run({"suite", "--name", "pairing", "--seed", "7", "--budget", "samples=8"});
  auto b = run({"suite", "--name", "pairing", "--seed", "7", "--budget", "samples=8"});
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace galg

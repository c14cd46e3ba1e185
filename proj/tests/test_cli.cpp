#include "cli.hpp"

#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace agmon {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, ConstantsJson) {
  const auto r = run({"constants", "--d", "2", "--p", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto doc = json_of(r);
  const auto& entry = doc["entries"][0];
  EXPECT_EQ(entry["p"], 2);
  EXPECT_EQ(entry["kappa_log2"], 2);
  EXPECT_NEAR(entry["mu"]["approx"].get<double>(), 1.189207115002721, 1e-15);
  EXPECT_EQ(entry["mu"]["exact"], "2^(1/4)");
}

TEST(Cli, ConstantsAllP) {
  const auto r = run({"constants", "--d", "3", "--all-p"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(json_of(r)["entries"].size(), 4u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"constants", "--d", "2", "--p", "3"}).code, cli::kUsageError);
  EXPECT_EQ(run({"constants", "--d", "0", "--p", "1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"constants"}).code, cli::kUsageError);
  EXPECT_EQ(run({"bogus"}).code, cli::kUsageError);
  EXPECT_EQ(run({"trace", "--d", "21"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "--random", "--d", "2", "--inequality", "agmon1d"}).code,
            cli::kUsageError);
  EXPECT_EQ(run({"verify", "--input", "/nonexistent.json"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "--random", "--d", "1", "--distribution", "cauchy"}).code,
            cli::kUsageError);
}

TEST(Cli, HelpSucceeds) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, VerifyRandomIsDeterministic) {
  const std::vector<std::string> args = {"verify", "--random", "--d", "2", "--p", "1",
                                         "--count", "300", "--seed", "42"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto doc = json_of(a);
  EXPECT_EQ(doc["failures"], 0);
  EXPECT_EQ(doc["trials"], 300);
  EXPECT_LT(doc["worst_ratio"].get<double>(), 1.0);
  EXPECT_TRUE(doc["worst_trial_seed"].is_number_unsigned());
  const auto first = a.out.substr(0, a.out.find("\"worst_trial_seed\""));
  EXPECT_LT(first.find("\"inequality\""), first.find("\"failures\""));
}

TEST(Cli, VerifyDifferentSeedsDiffer) {
  const auto a = run({"verify", "--random", "--d", "1", "--count", "50", "--seed", "1"});
  const auto b = run({"verify", "--random", "--d", "1", "--count", "50", "--seed", "2"});
  EXPECT_NE(a.out, b.out);
}

TEST(Cli, TraceMatches) {
  const auto r = run({"trace", "--d", "4", "--p", "3", "--plans", "10", "--seed", "5"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto doc = json_of(r);
  EXPECT_EQ(doc["total_exponent"], 29);
  EXPECT_EQ(doc["closed_form_exponent"], 29);
  EXPECT_EQ(doc["verdict"], "MATCH");
  EXPECT_EQ(doc["plans"]["exponents"].size(), 10u);
  EXPECT_EQ(doc["plans"]["all_equal"], true);
}

TEST(Cli, TableFormat) {
  const auto r = run({"--format", "table", "trace", "--d", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("MATCH"), std::string::npos);
  EXPECT_EQ(r.out.find('{'), std::string::npos);
}

TEST(Cli, SearchThenVerifyRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "agmon_cli_search.json";
  const auto s = run({"search", "--d", "1", "--p", "1", "--restarts", "2", "--iters", "300",
                      "--seed", "9", "--out", path.string()});
  ASSERT_EQ(s.code, cli::kOk) << s.err;
  const auto found = json_of(s);
  EXPECT_EQ(found["bound_respected"], true);
  const auto v = run({"verify", "--input", path.string(), "--d", "1", "--p", "1"});
  ASSERT_EQ(v.code, cli::kOk) << v.err;
  EXPECT_EQ(json_of(v)["worst_ratio"].get<double>(), found["best_ratio"].get<double>());
  EXPECT_TRUE(json_of(v)["worst_trial_seed"].is_null());
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace agmon

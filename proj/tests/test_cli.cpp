#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "rnpow/cli.hpp"

using namespace rnpow;
using namespace rnpow::cli;
using Json = nlohmann::ordered_json;

namespace {

RunResult invoke(std::vector<std::string> args) { return run_command_line(args); }

}  // namespace

TEST(Cli, NRange) {
  EXPECT_EQ(parse_n_range("3..8").first, 3);
  EXPECT_EQ(parse_n_range("3..8").last, 8);
  EXPECT_EQ(parse_n_range("10").last, 10);
  for (const char* bad : {"", "0", "5..3", "a..b", "3..", "3...5"}) {
    EXPECT_THROW(parse_n_range(bad), UsageError) << bad;
  }
}

TEST(Cli, Defaults) {
  const RunConfig c = parse_command_line({"search", "--p", "8", "--n", "3"});
  EXPECT_EQ(c.command, Command::Search);
  EXPECT_EQ(c.mode, RoundingMode::NearestTiesEven);
  EXPECT_EQ(c.format, OutputFormat::Table);
  EXPECT_EQ(c.digits, 9);
  EXPECT_EQ(c.jobs, 0u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).status, 2);
  EXPECT_EQ(invoke({"search", "--p", "8"}).status, 2);
  EXPECT_EQ(invoke({"search", "--p", "8", "--n", "3", "--mode", "up"}).status, 2);
  EXPECT_EQ(invoke({"spot", "--p", "8", "--n", "3", "--x", "1/3"}).status, 2);
  const RunResult guard = invoke({"search", "--p", "30", "--n", "3"});
  EXPECT_EQ(guard.status, 2);
  EXPECT_NE(guard.output.find("--allow-large-p"), std::string::npos);
}

TEST(Cli, SearchTableP8) {
  const RunResult r = invoke({"search", "--p", "8", "--n", "3..8"});
  EXPECT_EQ(r.status, 0);
  for (const char* v : {"1.359882479", "1.739038165", "2.211520809", "2.530230299",
                        "2.696345247", "3.429295546"}) {
    EXPECT_NE(r.output.find(v), std::string::npos) << v;
  }
}

TEST(Cli, CsvHasHeader) {
  const RunResult r = invoke({"search", "--p", "8", "--n", "3..4", "--format", "csv"});
  EXPECT_EQ(r.output.substr(0, r.output.find('\n')),
            "n,actual maximum (u),argmax x,gamma_{n-1} (u),(n-1)u,violations,scanned");
  EXPECT_EQ(std::count(r.output.begin(), r.output.end(), '\n'), 3);
}

TEST(Cli, JsonRoundTripsAndDecimalsArePrefixes) {
  const RunResult r =
      invoke({"adversary", "--p", "53", "--n", "100", "--format", "json", "--digits", "12"});
  ASSERT_EQ(r.status, 0);
  const Json doc = Json::parse(r.output);
  EXPECT_EQ(doc.dump(2) + "\n", r.output);
  EXPECT_EQ(doc["schema_version"], kSchemaVersion);
  EXPECT_TRUE(doc["ok"].get<bool>());
  const Json& e = doc["results"][0]["achieved_error"];
  EXPECT_EQ(e["decimal"].get<std::string>().substr(0, 13), "98.9999970091");
  EXPECT_EQ(to_decimal(parse_rational(e["fraction"].get<std::string>()), 12),
            e["decimal"]);
  // 1 + floor(2^25.5) 2^-52 = 1 + 47453132/2^52, reduced by 4.
  EXPECT_EQ(doc["results"][0]["factors"][0], "1125899918705907/1125899906842624");
}

TEST(Cli, InvocationReproducesReport) {
  const RunResult a =
      invoke({"spot", "--x", "8429278/2^23", "--p", "24", "--n", "10", "--format", "json"});
  const Json doc = Json::parse(a.output);
  std::vector<std::string> args = doc["invocation"].get<std::vector<std::string>>();
  args.insert(args.end(), {"--format", "json"});
  EXPECT_EQ(invoke(args).output, a.output);
}

TEST(Cli, BoundsNotesNMax) {
  const RunResult r = invoke({"bounds", "--p", "24", "--n", "2089"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.output.find("exceeds n_max(24) = 2088"), std::string::npos);
  const Json doc = Json::parse(invoke({"bounds", "--p", "113", "--format", "json"}).output);
  EXPECT_EQ(doc["n_max"].get<std::int64_t>(), 51953580258461959);
}

TEST(Cli, SearchCheckpointPerN) {
  const auto base = std::filesystem::temp_directory_path() /
                    ("rnpow_cli_" + std::to_string(::getpid()) + ".ckpt");
  const RunResult r = invoke({"search", "--p", "10", "--n", "3..4", "--checkpoint",
                           base.string()});
  EXPECT_EQ(r.status, 0);
  for (const char* suffix : {".n3", ".n4"}) {
    auto path = base;
    path.concat(suffix);
    EXPECT_TRUE(std::filesystem::exists(path)) << suffix;
    std::filesystem::remove(path);
  }
}

TEST(Cli, VerifyQuickPasses) {
  const RunResult r = invoke({"verify", "--quick", "--check", "unit-power", "--check",
                           "refined-binary32", "--check", "small-squares"});
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(invoke({"verify", "--check", "nonsense"}).status, 2);
}

TEST(Cli, GoldenFilesMatch) {
  const RunResult r = regress(RNPOW_GOLDEN_DIR, false);
  EXPECT_EQ(r.status, 0) << r.output;
}

TEST(Cli, TamperedGoldenFailsNamingScenario) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() /
                       ("rnpow_golden_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path src = fs::path(RNPOW_GOLDEN_DIR) / "search_p8.json";
  std::ifstream in(src);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  const auto pos = text.find("1.359882479");
  ASSERT_NE(pos, std::string::npos);
  text[pos + 10] = '8';
  std::ofstream(dir / "search_p8.json") << text;
  const RunResult r = regress(dir, false);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("FAIL search_p8"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("1.359882479"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, GoldensIndependentOfWorkerCount) {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() /
                        ("rnpow_jobs_" + std::to_string(::getpid()));
  ASSERT_EQ(regress(base / "one", true, 1).status, 0);
  ASSERT_EQ(regress(base / "eight", true, 8).status, 0);
  int compared = 0;
  for (const auto& entry : fs::directory_iterator(base / "one")) {
    std::ifstream a(entry.path()), b(base / "eight" / entry.path().filename());
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_EQ(sa.str(), sb.str()) << entry.path().filename();
    ++compared;
  }
  EXPECT_EQ(compared, static_cast<int>(default_golden_scenarios().size()));
  fs::remove_all(base);
}

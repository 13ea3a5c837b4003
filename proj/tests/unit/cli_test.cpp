#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace knotvol::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "knotvol");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("knotvol_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

const std::string kPdDir = std::string(KNOTVOL_DATA_DIR) + "/pd/";

}  // namespace

TEST(Cli, AnalyzeByNameAndFile) {
  auto r = invoke({"analyze", "9_20", "--table", support::kTablePath, "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"schema_version\""), std::string::npos);
  r = invoke({"analyze", kPdDir + "4_1.pd", "--table", support::kTablePath});
  EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST(Cli, TorusDiagramIsRejected) {
  const auto r = invoke({"analyze", kPdDir + "torus_2_5.pd", "--table", support::kTablePath});
  EXPECT_EQ(r.code, kExitRejected);
  EXPECT_NE(r.err.find("torus"), std::string::npos);
}

TEST(Cli, UnknownInputIsAnError) {
  EXPECT_EQ(invoke({"analyze", "no_such_knot", "--table", support::kTablePath}).code, kExitError);
}

TEST(Cli, ColorThreeOverBudgetIsAResourceError) {
  const auto r = invoke({"analyze", "9_20", "--color3", "--max-crossings", "5", "--table",
                         support::kTablePath});
  EXPECT_EQ(r.code, kExitResource);
}

TEST(Cli, AnalyzeWritesReportFile) {
  const fs::path dir = scratch("analyze");
  const auto r = invoke({"analyze", "5_2", "--table", support::kTablePath, "--format", "csv",
                         "--out", dir.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(dir / "5_2.csv"), r.out);
}

TEST(Cli, BatchOnEmptyTableWritesHeaderOnly) {
  const fs::path dir = scratch("empty");
  std::ofstream(dir / "table.csv") << "name,crossings,pd,volume,provenance\n";
  const auto r = invoke({"batch", "--table", (dir / "table.csv").string(), "--out",
                         (dir / "out").string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(dir / "out" / "summary.csv"),
            "name,best_bound,reference_volume,slack,residuals_ok,status\n");
}

TEST(Cli, BatchContinuesPastBadRows) {
  const fs::path dir = scratch("bad_row");
  std::ofstream(dir / "table.csv")
      << "name,crossings,pd,volume,provenance\n"
      << "4_1,4,\"PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]\",2.029883212819307,test\n"
      << "broken,3,\"PD[X[1,2,3]]\",,test\n"
      << "3_1,3,\"PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]\",,test\n";
  const auto r = invoke({"batch", "--table", (dir / "table.csv").string(), "--out",
                         (dir / "out").string(), "--jobs", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const std::string summary = slurp(dir / "out" / "summary.csv");
  EXPECT_NE(summary.find("broken,,,,,"), std::string::npos) << summary;
  EXPECT_NE(summary.find("failed: line 3"), std::string::npos) << summary;
  EXPECT_NE(summary.find("4_1,"), std::string::npos);
  EXPECT_NE(summary.find(",ok\n"), std::string::npos);
  EXPECT_NE(summary.find("rejected: "), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "out" / "4_1.json"));
}

TEST(Cli, MissingTableFailsBatch) {
  EXPECT_EQ(invoke({"batch", "--table", "/nonexistent.csv"}).code, kExitError);
}

TEST(Cli, WriteAtomicallyReplacesContents) {
  const fs::path dir = scratch("atomic");
  write_atomically(dir / "f.txt", "one");
  write_atomically(dir / "f.txt", "two");
  EXPECT_EQ(slurp(dir / "f.txt"), "two");
  EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}), 1);
}

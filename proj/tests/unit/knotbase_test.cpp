#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "knotvol/bounds.hpp"
#include "knotvol/diagram.hpp"
#include "knotvol/error.hpp"
#include "knotvol/knotbase.hpp"
#include "support.hpp"

using namespace knotvol;

namespace {

std::string header() { return std::string(kTableHeader) + "\n"; }

}  // namespace

TEST(KnotTable, BundledTableLoadsCleanly) {
  const auto load = load_table(support::kTablePath);
  EXPECT_TRUE(load.errors.empty());
  EXPECT_EQ(load.records.size(), 73u);
}

TEST(KnotTable, FigureEightVolumeIsTwoV3) {
  const auto v = support::table().reference_volume("4_1");
  ASSERT_TRUE(v);
  EXPECT_NEAR(*v, 2 * kV3, 1e-9);
}

TEST(KnotTable, NineTwentyHasCensusVolume) {
  const auto v = support::table().reference_volume("9_20");
  ASSERT_TRUE(v);
  EXPECT_NEAR(*v, 9.6443040738, 1e-10);
}

TEST(KnotTable, UnknownNameAndMissingVolume) {
  EXPECT_FALSE(support::table().reference_volume("10_1"));
  EXPECT_EQ(support::table().find("10_1"), nullptr);
  EXPECT_FALSE(support::table().reference_volume("3_1"));  // torus knot, not hyperbolic
}

TEST(KnotTable, BadRowsAreCollected) {
  const auto load = parse_table(header() +
                                "4_1,4,\"PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]\",2.03,src\n"
                                "odd,1,\"X 1 2 3 3\",,src\n"
                                "count,3,\"PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]\",,src\n"
                                "neg,4,\"PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]\",-1,src\n"
                                "short,4\n");
  ASSERT_EQ(load.records.size(), 1u);
  EXPECT_EQ(load.records[0].name, "4_1");
  ASSERT_EQ(load.errors.size(), 4u);
  EXPECT_EQ(load.errors[0].line, 3);
  EXPECT_EQ(load.errors[0].name, "odd");
}

TEST(KnotTable, EmptyVolumeFieldIsAbsent) {
  const auto load = parse_table(header() + "3_1,3,\"PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]\",,src\n");
  ASSERT_EQ(load.records.size(), 1u);
  EXPECT_FALSE(load.records[0].reference_volume);
}

TEST(KnotTable, FatalErrors) {
  EXPECT_THROW((void)load_table("/nonexistent/table.csv"), TableError);
  EXPECT_THROW((void)parse_table("name,pd\n"), TableError);
  const std::string row = "3_1,3,\"PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]\",,src\n";
  EXPECT_THROW((void)parse_table(header() + row + row), TableError);
}

TEST(KnotTable, SaveThenLoadIsIdentity) {
  const auto original = load_table(support::kTablePath).records;
  const auto path = std::filesystem::temp_directory_path() / "knotvol_roundtrip.csv";
  save_table(path, original);
  EXPECT_EQ(load_table(path).records, original);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), format_table(original));
  std::filesystem::remove(path);
}

TEST(KnotTable, BundledTableIsNormalised) {
  std::ifstream in(support::kTablePath);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), format_table(support::table().records()));
}

TEST(KnotTable, RecordsValidate) {
  for (const auto& r : support::table().records()) {
    const auto d = parse_pd(r.pd);
    EXPECT_EQ(static_cast<int>(d.crossing_count()), r.crossings);
    EXPECT_TRUE(validate(d).is_alternating) << r.name;
    EXPECT_TRUE(validate(d).is_prime) << r.name;
  }
}

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "ekr/data_dir.hpp"

TEST(DataDir, DefaultPointsAtShippedData) {
  unsetenv("EKR_DATA_DIR");
  EXPECT_TRUE(std::filesystem::exists(ekr::data_path("groups/sz8.gens")));
}

TEST(DataDir, EnvironmentOverride) {
  setenv("EKR_DATA_DIR", "/tmp/elsewhere", 1);
  EXPECT_EQ(ekr::data_dir(), std::filesystem::path("/tmp/elsewhere"));
  EXPECT_EQ(ekr::data_path("x.ctab"), std::filesystem::path("/tmp/elsewhere/x.ctab"));
  setenv("EKR_DATA_DIR", "", 1);
  EXPECT_NE(ekr::data_dir(), std::filesystem::path(""));
  unsetenv("EKR_DATA_DIR");
}

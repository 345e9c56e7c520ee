#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = wittkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(WITTKIT_DATA_DIR) + "/" + name; }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(WITTKIT_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, WittOrderExample) {
  const auto r = run({"witt", "order", data("z2_i.mg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "order = 8\n");
}

TEST(Cli, Sl2DataExample) {
  const auto r = run({"sl2", "data", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[1]: 3/16\n"), std::string::npos);
}

TEST(Cli, GoldenOutputs) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"witt", "class", data("z2_i.mg")}, "witt_class_z2_i.txt"},
      {{"witt", "aniso", data("hyperbolic.mg")}, "witt_aniso_hyperbolic.txt"},
      {{"witt", "add", data("z2_i.mg"), data("z3.mg")}, "witt_add_z2_i_z3.txt"},
      {{"witt", "eq", data("z2_i.mg"), data("z2_minus_i.mg")}, "witt_eq.txt"},
      {{"switt", "eq", data("z2_i.mg"), data("z2_minus_i.mg")}, "switt_eq.txt"},
      {{"sl2", "data", "2"}, "sl2_data_2.txt"},
      {{"sl2", "condense", "8"}, "sl2_condense_8.txt"},
      {{"etale", "enumerate", data("z2_i.mg"), data("z2_minus_i.mg")}, "etale_z2.txt"},
      {{"presentation", "--max-level", "28"}, "presentation_28.txt"},
  };
  for (const auto& [args, file] : cases) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << file << ": " << r.err;
    EXPECT_EQ(r.out, golden(file)) << file;
  }
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> args{"etale", "enumerate", data("hyperbolic.mg"), data("z4_eighth.mg")};
  const auto first = run(args);
  EXPECT_EQ(first.code, 0);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(run(args).out, first.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, wittkit::cli::kExitUserError);
  EXPECT_EQ(run({"frobnicate"}).code, wittkit::cli::kExitUserError);
  EXPECT_EQ(run({"witt", "order", "/nonexistent.mg"}).code, wittkit::cli::kExitUserError);
  EXPECT_EQ(run({"sl2", "condense", "6"}).code, wittkit::cli::kExitUserError);
  EXPECT_EQ(run({"sl2", "data", "0"}).code, wittkit::cli::kExitUserError);
  EXPECT_EQ(run({"sl2", "data", "abc"}).code, wittkit::cli::kExitUserError);
  EXPECT_EQ(run({"witt", "order", data("hyperbolic.mg")}).code, wittkit::cli::kExitOk);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, wittkit::cli::kExitOk);
  EXPECT_FALSE(help.out.empty());
}

TEST(Cli, CapFromEnvironment) {
  setenv("WITTKIT_CAP", "4", 1);
  const auto r = run({"witt", "add", data("z2_i.mg"), data("z3.mg")});
  unsetenv("WITTKIT_CAP");
  EXPECT_EQ(r.code, wittkit::cli::kExitUserError);
  EXPECT_EQ(run({"witt", "add", data("z2_i.mg"), data("z3.mg")}).code, 0);
}

TEST(Cli, QuickSelftest) {
  const auto r = run({"selftest", "--quick"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all criteria passed"), std::string::npos);
}

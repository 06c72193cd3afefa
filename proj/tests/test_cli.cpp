#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qcli.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qcli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string transcript(const Outcome& o) {
  return o.out + "--- stderr\n" + o.err + "--- exit " + std::to_string(o.code) + "\n";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  const char* name;
  std::vector<std::string> args;
};

// Set QCALC_REGENERATE_GOLDEN=1 to rewrite the files after reviewing a change.
const std::vector<GoldenCase> kGolden = {
    {"check_joule", {"check", "si_mechanics", "J = N*L"}},
    {"check_newton_joule", {"check", "si_mechanics", "N = J"}},
    {"check_unbound", {"check", "si_mechanics", "N = bogus"}},
    {"check_kinetic_energy", {"check", "--bind", "E=J", "--bind", "m=M", "--bind", "v=L/T", "E = m*v^2/2"}},
    {"check_kinetic_energy_plus_length",
     {"check", "--bind", "E=J", "--bind", "m=M", "--bind", "v=L/T", "E = m*v^2/2 + L"}},
    {"check_machine", {"check", "--machine", "N = J"}},
    {"check_syntax", {"check", "J = N*"}},
    {"check_missing_equals", {"check", "J"}},
    {"eval_product", {"eval", "si_mechanics", "3*N * 2*L"}},
    {"eval_one", {"eval", "si_mechanics", "1"}},
    {"eval_incommensurable", {"eval", "si_mechanics", "L + T"}},
    {"eval_fraction", {"eval", "N/3"}},
    {"eval_machine", {"eval", "--machine", "3*N*2*L"}},
    {"eval_divide_by_zero", {"eval", "L/(L-L)"}},
    {"convert_speed", {"convert", "5400*(L*T^-1)", "L*T^-1"}},
    {"convert_joule", {"convert", "1*J", "N*L"}},
    {"convert_mismatch", {"convert", "1*N", "J"}},
    {"quotient_light", {"quotient", "si_mechanics", "--set", "c", "1*T"}},
    {"quotient_constant", {"quotient", "--set", "c", "c"}},
    {"quotient_nonfree", {"quotient", "--set", "L^2", "L"}},
    {"quotient_contradictory", {"quotient", "--set", "2", "L"}},
    {"rebase_force", {"rebase", "si_mechanics", "L=1*L", "T=1*T", "F=1*N", "--", "1*M"}},
    {"rebase_identity", {"rebase", "L=1*L", "T=1*T", "M=1*M", "--", "3*J"}},
    {"rebase_area", {"rebase", "A=1*L^2", "T=1*T", "M=1*M"}},
    {"lab_6_3_1", {"lab", "6,3,1"}},
    {"lab_units", {"lab", "5,2,1", "--units"}},
    {"lab_tensor", {"lab", "6,2,1", "--tensor", "6,2,1"}},
    {"no_command", {}},
};

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesFile) {
  const GoldenCase& c = GetParam();
  const fs::path file = fs::path(QCALC_GOLDEN_DIR) / (std::string(c.name) + ".txt");
  const std::string actual = transcript(run(c.args));
  if (const char* regen = std::getenv("QCALC_REGENERATE_GOLDEN"); regen && std::string(regen) == "1") {
    std::ofstream(file, std::ios::binary) << actual;
    GTEST_SKIP() << "regenerated " << file;
  }
  ASSERT_TRUE(fs::exists(file)) << file;
  EXPECT_EQ(actual, slurp(file));
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(kGolden),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", "si_mechanics", "J = N*L"}).code, qcli::kOk);
  EXPECT_EQ(run({"check", "si_mechanics", "N = J"}).code, qcli::kFailure);
  EXPECT_EQ(run({"check", "si_mechanics", "N = bogus"}).code, qcli::kUsage);
  EXPECT_EQ(run({"eval", "v^0.5"}).code, qcli::kUsage);
  EXPECT_EQ(run({"eval", "3$4"}).code, qcli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, qcli::kUsage);
  EXPECT_EQ(run({"lab", "6,x,1"}).code, qcli::kUsage);
  EXPECT_EQ(run({"--help"}).code, qcli::kOk);
}

TEST(Cli, MachineCheckReportsConflictingVectors) {
  const Outcome o = run({"check", "--machine", "si_mechanics", "N = J"});
  ASSERT_EQ(o.code, qcli::kFailure);
  const json j = json::parse(o.out);
  EXPECT_EQ(j.at("verdict"), "heterogeneous");
  EXPECT_EQ(j.at("conflict").at("lhs").at("dimension"), json::array({1, -2, 1}));
  EXPECT_EQ(j.at("conflict").at("rhs").at("dimension"), json::array({2, -2, 1}));
  EXPECT_EQ(j.at("basis"), json::array({"L", "T", "M"}));
}

TEST(Cli, MachineLinesAreJson) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"eval", "--machine", "J", "N", "1"},
           {"lab", "--machine", "5,2,1", "--units"},
           {"rebase", "--machine", "L=1*L", "T=1*T", "F=1*N", "--", "1*M", "J"},
           {"quotient", "--machine", "--set", "c", "T", "J"}}) {
    const Outcome o = run(args);
    ASSERT_EQ(o.code, qcli::kOk) << o.err;
    std::istringstream lines(o.out);
    int count = 0;
    for (std::string line; std::getline(lines, line); ++count) EXPECT_TRUE(json::accept(line)) << line;
    EXPECT_GT(count, 0);
  }
}

TEST(Cli, SpaceFileFromDisk) {
  const fs::path file = fs::temp_directory_path() / "qcalc_cli_test_space.qs";
  std::ofstream(file) << "space geometry\nbase L \"length\"\nunit acre = 4046.8564224*L^2\n";
  const Outcome by_option = run({"convert", "--space", file.string(), "2*acre", "L^2"});
  EXPECT_EQ(by_option.code, qcli::kOk) << by_option.err;
  EXPECT_EQ(by_option.out, "632321316/78125  ≈ 8093.7128448 (approximate)\n");
  const Outcome by_position = run({"eval", file.string(), "acre/L"});
  EXPECT_EQ(by_position.code, qcli::kOk) << by_position.err;
  EXPECT_NE(by_position.out.find("L"), std::string::npos);

  std::ofstream(file) << "space broken\nbase L\nbase L\n";
  const Outcome broken = run({"eval", "--space", file.string(), "L"});
  EXPECT_EQ(broken.code, qcli::kUsage);
  EXPECT_NE(broken.err.find("line 3"), std::string::npos);
  fs::remove(file);
  EXPECT_EQ(run({"eval", "--space", file.string(), "L"}).code, qcli::kUsage);
}

}  // namespace

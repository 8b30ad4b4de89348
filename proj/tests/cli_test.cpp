#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "resolvent/bound_report.hpp"

namespace resolvent::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"resolvent-cli"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  const char* env = std::getenv("RESOLVENT_TMPDIR");
  return env ? std::filesystem::path(env) : std::filesystem::temp_directory_path();
}

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("0.5"), Complex(0.5, 0.0));
  EXPECT_EQ(parse_complex("-0.25"), Complex(-0.25, 0.0));
  EXPECT_EQ(parse_complex("0.3+0.2i"), Complex(0.3, 0.2));
  EXPECT_EQ(parse_complex("0.3-0.2i"), Complex(0.3, -0.2));
  EXPECT_EQ(parse_complex("-0.3-0.2i"), Complex(-0.3, -0.2));
  EXPECT_EQ(parse_complex("0.7i"), Complex(0.0, 0.7));
  EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(parse_complex("1-i"), Complex(1.0, -1.0));
  EXPECT_EQ(parse_complex("1e-3+2E+1i"), Complex(1e-3, 20.0));
  EXPECT_EQ(parse_complex(" 2 "), Complex(2.0, 0.0));
}

TEST(ParseComplex, Malformed) {
  for (const char* bad : {"", "abc", "1+", "0,5", "1+2j", "--1", "1.0.0"})
    EXPECT_THROW(parse_complex(bad), std::invalid_argument) << bad;
}

TEST(ParseComplex, List) {
  const auto pts = parse_complex_list("0,0.5-0.1i,i");
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[1], Complex(0.5, -0.1));
  EXPECT_EQ(pts[2], Complex(0.0, 1.0));
  EXPECT_THROW(parse_complex_list("0.1,,0.2"), std::invalid_argument);
}

TEST(FormatNumber, FifteenSignificantDigits) {
  EXPECT_EQ(format_number(4.0), "4");
  EXPECT_EQ(format_number(std::numbers::pi), "3.14159265358979");
  EXPECT_EQ(format_number(1e-20), "1e-20");
}

TEST(BoundCommand, JsonFields) {
  const auto res = invoke({"bound", "--n", "2", "--r", "0.5", "--format", "json"});
  ASSERT_EQ(res.code, kExitOk) << res.err;
  const auto j = json::parse(res.out);
  EXPECT_EQ(j["n"].get<int>(), 2);
  EXPECT_NEAR(j["exact"].get<double>(), 4.0, 1e-12);
  EXPECT_NEAR(j["asymptotic"].get<double>(), 12.0 / std::numbers::pi, 1e-12);
  EXPECT_NEAR(j["lower"].get<double>(), 3.5, 1e-14);
  EXPECT_NEAR(j["upper"].get<double>(), 6.0, 1e-14);
  EXPECT_NEAR(j["davies_simon"].get<double>(), 1.0 + std::numbers::sqrt2, 1e-14);
  EXPECT_NEAR(j["ratio"].get<double>(), 4.0 / (12.0 / std::numbers::pi), 1e-12);
}

TEST(BoundCommand, OneByOne) {
  const auto res = invoke({"bound", "--n", "1", "--r", "0.5", "--format", "json"});
  ASSERT_EQ(res.code, kExitOk);
  const auto j = json::parse(res.out);
  EXPECT_NEAR(j["exact"].get<double>(), 2.0, 1e-14);
  EXPECT_NEAR(j["lower"].get<double>(), 2.0, 1e-14);
  EXPECT_NEAR(j["upper"].get<double>(), 3.0, 1e-14);
}

TEST(BoundCommand, LargeNRatio) {
  const auto res = invoke({"bound", "--n", "1000", "--r", "0.5", "--format", "json"});
  ASSERT_EQ(res.code, kExitOk);
  const double ratio = json::parse(res.out)["ratio"].get<double>();
  EXPECT_GE(ratio, 0.999);
  EXPECT_LE(ratio, 1.001);
}

TEST(BoundCommand, HumanAndCsvRender) {
  const auto human = invoke({"bound", "--n", "2", "--r", "0.5"});
  ASSERT_EQ(human.code, kExitOk);
  EXPECT_NE(human.out.find("exact        4"), std::string::npos);
  const auto csv = invoke({"bound", "--n", "2", "--r", "0.5", "--format", "csv"});
  ASSERT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out.rfind("n,r,exact,asymptotic,ratio,lower,upper,davies_simon\n", 0), 0u);
}

TEST(BoundCommand, UsageErrors) {
  EXPECT_EQ(invoke({"bound", "--n", "0", "--r", "0.5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound", "--n", "2", "--r", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound", "--n", "2", "--r", "0.5", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(TableCommand, SingleRow) {
  const auto res = invoke({"table", "--n", "1", "--r", "0.5", "--format", "csv"});
  ASSERT_EQ(res.code, kExitOk);
  std::istringstream in(res.out);
  const auto rows = read_table_csv(in);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].exact, 2.0);
}

TEST(TableCommand, CsvColumnsMonotoneAndBracketed) {
  const auto path = scratch_dir() / "cli_test_table.csv";
  const std::string p = path.string();
  const auto res = invoke({"table", "--n", "1,2,3,5,8,13,21,34", "--r", "0.1,0.5,0.9", "--format", "csv", "--out",
                           p.c_str()});
  ASSERT_EQ(res.code, kExitOk) << res.err;
  EXPECT_TRUE(res.out.empty());
  std::ifstream file(path);
  std::string header;
  std::getline(file, header);
  EXPECT_EQ(header, "n,r,exact,asymptotic,ratio,lower,upper,davies_simon");
  file.seekg(0);
  const auto rows = read_table_csv(file);
  ASSERT_EQ(rows.size(), 24u);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_LE(rows[k].lower_fejer, rows[k].exact * (1.0 + 1e-12));
    EXPECT_LE(rows[k].exact, rows[k].upper_sum * (1.0 + 1e-12));
    if (k % 8 != 0) {
      EXPECT_EQ(rows[k].r, rows[k - 1].r);
      EXPECT_GE(rows[k].exact, rows[k - 1].exact);
    }
  }
  std::filesystem::remove(path);
}

TEST(TableCommand, CsvRoundTripIsStringIdentical) {
  std::vector<BoundReport> rows;
  for (double r : {0.05, 1.0 / 3.0, 0.77})
    for (std::size_t n : {1u, 7u, 123u}) rows.push_back(make_bound_report(n, r));
  std::ostringstream first;
  write_table_csv(rows, first);
  std::istringstream in(first.str());
  const auto parsed = read_table_csv(in);
  ASSERT_EQ(parsed.size(), rows.size());
  std::ostringstream second;
  write_table_csv(parsed, second);
  EXPECT_EQ(first.str(), second.str());
}

TEST(TableCommand, JsonArray) {
  const auto res = invoke({"table", "--n", "2,4", "--r", "0.5", "--format", "json"});
  ASSERT_EQ(res.code, kExitOk);
  const auto j = json::parse(res.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  for (const char* key : {"n", "r", "exact", "asymptotic", "ratio", "lower", "upper", "davies_simon"})
    EXPECT_TRUE(j[0].contains(key)) << key;
  EXPECT_NEAR(j[0]["exact"].get<double>(), 4.0, 1e-12);
}

TEST(TableCommand, RejectsBadInputs) {
  EXPECT_THROW(
      {
        std::istringstream in("n,r,exact\n");
        read_table_csv(in);
      },
      std::runtime_error);
  EXPECT_EQ(invoke({"table", "--n", "0,2", "--r", "0.5"}).code, kExitUsage);
  const auto unwritable = scratch_dir() / "no_such_dir" / "deeper" / "t.csv";
  const std::string p = unwritable.string();
  const auto res = invoke({"table", "--n", "2", "--r", "0.5", "--out", p.c_str()});
  EXPECT_EQ(res.code, kExitIo);
  EXPECT_NE(res.err.find("I/O error"), std::string::npos);
}

TEST(XnormCommand, NormAndRoot) {
  const auto res = invoke({"xnorm", "--n", "2", "--beta", "1.5", "--format", "json"});
  ASSERT_EQ(res.code, kExitOk);
  const auto j = json::parse(res.out);
  EXPECT_NEAR(j["norm"].get<double>(), 2.0, 1e-13);
  EXPECT_NEAR(j["theta"].get<double>(), 2.0 * std::atan(std::sqrt(7.0)), 1e-13);
  EXPECT_NEAR(j["pi_minus_theta"].get<double>(), std::numbers::pi - 2.0 * std::atan(std::sqrt(7.0)), 1e-13);
  const auto identity = invoke({"xnorm", "--n", "4", "--beta", "0", "--format", "json"});
  ASSERT_EQ(identity.code, kExitOk);
  EXPECT_EQ(json::parse(identity.out)["norm"].get<double>(), 1.0);
  EXPECT_EQ(invoke({"xnorm", "--n", "4", "--beta", "2.5"}).code, kExitUsage);
}

TEST(VerifyCommand, PassingSuitesExitZero) {
  const auto res =
      invoke({"verify", "extremal", "--n", "4", "--r", "0.5", "--trials", "20", "--seed", "42", "--format", "json"});
  ASSERT_EQ(res.code, kExitOk) << res.err;
  const auto j = json::parse(res.out);
  EXPECT_EQ(j["suite"], "extremal");
  EXPECT_EQ(j["failed"].get<int>(), 0);
  EXPECT_EQ(j["passed"].get<int>(), 20 * 67);

  const auto all = invoke({"verify", "--n", "3", "--r", "0.6", "--trials", "5", "--seed", "1", "--models", "2",
                           "--rays", "8", "--radii", "4", "--format", "csv"});
  ASSERT_EQ(all.code, kExitOk) << all.err;
  EXPECT_NE(all.out.find("extremal,"), std::string::npos);
  EXPECT_NE(all.out.find("dominance,"), std::string::npos);
  EXPECT_NE(all.out.find("boundary,"), std::string::npos);
}

TEST(VerifyCommand, SeedIsRequired) {
  EXPECT_EQ(invoke({"verify", "extremal", "--n", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "bogus", "--seed", "1"}).code, kExitUsage);
}

TEST(VerifyCommand, NegativeToleranceSurfacesAsFailure) {
  // a negative tolerance is rejected by the module, not by the parser
  const auto res = invoke({"verify", "extremal", "--trials", "1", "--seed", "1", "--tolerance", "-1"});
  EXPECT_EQ(res.code, kExitVerificationFailed);
  EXPECT_NE(res.err.find("tolerance"), std::string::npos);
}

TEST(ModelCommand, NilpotentAtTwo) {
  const auto res = invoke({"model", "--sigma", "0,0", "--zeta", "2", "--format", "json"});
  ASSERT_EQ(res.code, kExitOk) << res.err;
  const auto j = json::parse(res.out);
  const auto& inv = j["resolvent"];
  EXPECT_NEAR(inv[0][0][0].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(inv[1][0][0].get<double>(), 0.25, 1e-15);
  EXPECT_NEAR(inv[1][1][0].get<double>(), 0.5, 1e-15);
  EXPECT_EQ(inv[0][1][0].get<double>(), 0.0);
  EXPECT_LE(j["residual"].get<double>(), 1e-14);
  EXPECT_EQ(j["model_matrix"][1][0][0].get<double>(), 1.0);
}

TEST(ModelCommand, RepeatedHalfAtOne) {
  const auto res = invoke({"model", "--sigma", "0.5,0.5", "--zeta", "1", "--format", "json"});
  ASSERT_EQ(res.code, kExitOk);
  const auto j = json::parse(res.out);
  const auto& inv = j["resolvent"];
  EXPECT_NEAR(inv[0][0][0].get<double>(), 2.0, 1e-14);
  EXPECT_NEAR(inv[1][1][0].get<double>(), 2.0, 1e-14);
  EXPECT_NEAR(inv[1][0][0].get<double>(), 3.0, 1e-14);
}

TEST(ModelCommand, SinglePoint) {
  const auto res = invoke({"model", "--sigma", "0.3+0.2i", "--zeta", "1", "--format", "json"});
  ASSERT_EQ(res.code, kExitOk);
  const auto j = json::parse(res.out);
  const auto& entry = j["resolvent"][0][0];
  const Complex want = 1.0 / Complex(0.7, -0.2);
  EXPECT_NEAR(entry[0].get<double>(), want.real(), 1e-15);
  EXPECT_NEAR(entry[1].get<double>(), want.imag(), 1e-15);
}

TEST(ModelCommand, UsageErrors) {
  EXPECT_EQ(invoke({"model", "--sigma", "0.5,1.2", "--zeta", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"model", "--sigma", "0.5,abc", "--zeta", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"model", "--sigma", "0.5", "--zeta", "0.5"}).code, kExitUsage);
  const auto human = invoke({"model", "--sigma", "0.5", "--zeta", "2"});
  EXPECT_EQ(human.code, kExitOk);
  EXPECT_NE(human.out.find("model matrix"), std::string::npos);
}

}  // namespace
}  // namespace resolvent::cli

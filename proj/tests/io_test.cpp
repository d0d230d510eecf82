#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "support.hpp"
#include "thiele/io.hpp"

namespace thiele {
namespace {

TEST(ReadSamplesCsv, Good) {
  std::istringstream in("x,f\n0, 1\n0.5,2.5e0\n\n-1,+3\n");
  const auto s = read_samples_csv(in);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.x(1), 0.5);
  EXPECT_EQ(s.f(1), 2.5);
  EXPECT_EQ(s.f(2), 3.0);
}

TEST(ReadSamplesCsv, BadRowReportsLine) {
  std::istringstream in("x,f\n0,1\n1,abc\n");
  try {
    read_samples_csv(in, "data.csv");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("data.csv:3"), std::string::npos);
  }
}

TEST(ReadSamplesCsv, Rejections) {
  auto fails = [](const char* text) {
    std::istringstream in(text);
    EXPECT_THROW(read_samples_csv(in), parse_error) << text;
  };
  fails("");
  fails("a,b\n1,2\n");
  fails("x,f\n");
  fails("x,f\n1\n");
  fails("x,f\n1,inf\n");
  fails("x,f\n1,2\n1,3\n");
}

TEST(FormatDouble, RoundTripAndSpecials) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_double(std::nan("")), "nan");
}

TEST(FractionJson, RoundTripIsBitExact) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cf = test::random_fraction(rng, trial % 12, -1e3, 1e3);
    const auto back = fraction_from_json(nlohmann::json::parse(to_json(cf).dump()));
    EXPECT_EQ(back, cf);
  }
}

TEST(FractionJson, FileRoundTripWithTerminalNode) {
  const ContinuedFraction cf({1.0, 0.1, -3e-300}, {0.0, 1.0 / 3.0, 7.0});
  const auto path = testing::TempDir() + "fraction.json";
  write_fraction(path, cf);
  EXPECT_EQ(read_fraction(path), cf);
}

TEST(FractionJson, Malformed) {
  EXPECT_THROW(fraction_from_json(nlohmann::json::parse(R"({"a":[1]})")), std::invalid_argument);
  EXPECT_THROW(fraction_from_json(nlohmann::json::parse(R"({"a":[1,"x"],"z":[0]})")), std::invalid_argument);
  EXPECT_THROW(fraction_from_json(nlohmann::json::parse(R"({"a":[1,2],"z":[]})")), std::invalid_argument);
  const auto path = testing::TempDir() + "broken.json";
  std::ofstream(path) << "{\"a\": [1,";
  EXPECT_THROW(read_fraction(path), std::invalid_argument);
}

TEST(SamplesCsv, WriteReadRoundTrip) {
  const auto s = SampleSet::from_function({0.1, 0.2, 1e-300}, [](double x) { return 1.0 / 3.0 + x; });
  std::stringstream buf;
  write_samples_csv(buf, s);
  const auto back = read_samples_csv(buf);
  EXPECT_TRUE(std::ranges::equal(back.xs(), s.xs()));
  EXPECT_TRUE(std::ranges::equal(back.fs(), s.fs()));
}

} // namespace
} // namespace thiele

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "fibquiver/cli/bfile.hpp"
#include "fibquiver/cli/commands.hpp"
#include "fibquiver/cli/payloads.hpp"
#include "fibquiver/cli/render.hpp"

namespace fq = fibquiver;
namespace cli = fibquiver::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FIBQUIVER_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs the installed binary through the shell; returns exit status and stdout.
std::pair<int, std::string> shell(const std::string& args) {
  const std::string cmd = std::string(FIBQUIVER_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

template <typename T>
void expect_round_trip(const T& value) {
  const std::string text = cli::emit_json(value);
  EXPECT_EQ(cli::parse_json<T>(text), value) << text.substr(0, 400);
  EXPECT_EQ(cli::emit_json(cli::parse_json<T>(text)), text);
}

}  // namespace

TEST(Json, RoundTripsEveryPayload) {
  expect_round_trip(cli::make_fib_listing(-300, 300));
  expect_round_trip(cli::make_pairs_listing(1000));
  expect_round_trip(cli::make_classify_result({7, 18}));
  expect_round_trip(cli::make_classify_result({-1, -2}));
  expect_round_trip(cli::make_classify_result({2, 2}));
  expect_round_trip(cli::make_utable_listing(12));
  expect_round_trip(fq::partition_report(9));
  for (int t = 0; t <= 6; ++t) {
    expect_round_trip(cli::make_vector_listing(cli::Series::s, t, {}));
    expect_round_trip(cli::make_vector_listing(cli::Series::r, t, {}));
  }
  cli::VerifyOutcome verify{"cor42", {fq::check_cor42(3), fq::check_cor42(4)}};
  expect_round_trip(verify);
  cli::VerifyOutcome failing{"demo", {{"demo", 1, {{"a, \"quoted\"", false, "line\nbreak"}}}}};
  expect_round_trip(failing);
  expect_round_trip(cli::compare_bfile("A000045", "fib", 0, cli::load_bfile(fixture("b000045.txt"))));
  expect_round_trip(cli::compare_bfile("A000045", "fib", 0, cli::load_bfile(fixture("b000045_gap.txt"))));
}

TEST(Json, CarriesSchemaAndKind) {
  const auto j = nlohmann::json::parse(cli::emit_json(cli::make_fib_listing(0, 3)));
  EXPECT_EQ(j.at("schema_version"), 1);
  EXPECT_EQ(j.at("kind"), "fib");
  EXPECT_EQ(j.at("values")[3], "2");
}

TEST(Json, WrongKindIsRejected) {
  const std::string text = cli::emit_json(cli::make_fib_listing(0, 3));
  EXPECT_THROW(cli::parse_json<cli::UTableListing>(text), std::invalid_argument);
}

TEST(Json, BigIntegersSurvive) {
  const auto listing = cli::make_fib_listing(1000, 1001);
  EXPECT_EQ(cli::parse_json<cli::FibListing>(cli::emit_json(listing)).values[0], fq::fib(1000));
}

TEST(Csv, UTableMatchesPinnedFixture) {
  const auto r = run({"utable", "4", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(fixture("utable4.csv")));
}

TEST(Csv, FieldsAreQuotedWhenNeeded) {
  EXPECT_EQ(cli::csv_field("plain"), "plain");
  EXPECT_EQ(cli::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(cli::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Commands, FibLine) {
  const auto r = run({"fib", "--from", "-10", "--to", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("-55,34,-21,13,-8,5,-3,2,-1,1,0,1,1,2,3,5,8,13,21,34,55"), std::string::npos);
}

TEST(Commands, Classify) {
  auto r = run({"classify", "2", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("OddPair t=3"), std::string::npos);
  r = run({"classify", "2", "2"});
  EXPECT_NE(r.out.find("NotAPair"), std::string::npos);
  r = run({"classify", "-1", "-2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("negated"), std::string::npos);
  r = run({"classify", "2", "five"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Commands, RvecRings) {
  const auto r = run({"rvec", "1", "--format", "ascii"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ring 0: 1"), std::string::npos);
  EXPECT_NE(r.out.find("ring 1: +1: 1,1  -1: 0"), std::string::npos);
}

TEST(Commands, PartitionTotals) {
  const auto r = run({"partition", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("total_minus"), "13");
  EXPECT_EQ(j.at("total_plus"), "34");
}

TEST(Commands, VerifySuitesPass) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "prop41"}, {"verify", "cor42", "--t", "6"}, {"verify", "cor43"},
        {"verify", "oracle"}, {"verify", "sums", "--t-max", "300"},
        {"verify", "three-term", "--from", "-100", "--to", "100"}, {"verify", "pairs"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << args[1] << ": " << r.err;
    EXPECT_TRUE(r.err.empty()) << r.err;
  }
}

TEST(Commands, CapErrorNamesCapAndOverride) {
  auto r = run({"svec", "13"});
  EXPECT_EQ(r.code, cli::kExitRuntime);
  EXPECT_NE(r.err.find("oracle cap 12"), std::string::npos);
  EXPECT_NE(r.err.find("--oracle-cap"), std::string::npos);
  EXPECT_NE(r.err.find("FIBQUIVER_ORACLE_CAP"), std::string::npos);
  r = run({"--oracle-cap", "13", "svec", "13", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  r = run({"svec", "13", "--oracle-cap", "13"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Commands, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"fib", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "nonsense"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "cor42", "--t", "3", "--t-max", "4"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Commands, EveryFormatForEveryCommand) {
  for (const char* fmt : {"json", "csv", "ascii"}) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"fib"}, {"pairs", "--max", "50"}, {"classify", "5", "13"}, {"utable", "3"},
          {"partition", "3"}, {"svec", "3"}, {"rvec", "4"}, {"verify", "cor43", "--t", "2"},
          {"oeis-check", "A000045", "--fixture", fixture("b000045.txt")}}) {
      auto full = args;
      full.insert(full.end(), {"--format", fmt});
      const auto r = run(full);
      EXPECT_EQ(r.code, 0) << args[0] << " " << fmt << ": " << r.err;
      EXPECT_FALSE(r.out.empty());
      if (std::string(fmt) == "json") EXPECT_NO_THROW((void)nlohmann::json::parse(r.out));
    }
  }
}

TEST(BFile, ParsesCommentsAndBlankLines) {
  std::istringstream in("# header\n\n0 0\n1 1\n  \n2 1\n");
  const auto f = cli::parse_bfile(in);
  ASSERT_EQ(f.records.size(), 3u);
  EXPECT_EQ(f.records[2].n, 2);
}

TEST(BFile, RejectsMalformedInput) {
  for (const char* text : {"0 0\n1 x\n", "0\n", "0 0 0\n", "1 1\n1 1\n", "2 1\n1 1\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(cli::parse_bfile(in), cli::BFileParseError) << text;
  }
  try {
    std::istringstream in("0 0\n\n2 x\n");
    cli::parse_bfile(in);
  } catch (const cli::BFileParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(BFile, FibonacciFixtureMatches) {
  const auto outcome = cli::compare_bfile("A000045", "fib", 0, cli::load_bfile(fixture("b000045.txt")));
  EXPECT_TRUE(outcome.passed);
  EXPECT_FALSE(outcome.vacuous);
  EXPECT_EQ(outcome.checked, 201);
}

TEST(BFile, GapAndWrongValueAreReported) {
  auto gap = cli::compare_bfile("A000045", "fib", 0, cli::load_bfile(fixture("b000045_gap.txt")));
  EXPECT_FALSE(gap.passed);
  EXPECT_EQ(gap.first_mismatch, 7);
  EXPECT_NE(gap.message.find("missing"), std::string::npos);
  auto wrong = cli::compare_bfile("A000045", "fib", 0, cli::load_bfile(fixture("b000045_wrong.txt")));
  EXPECT_FALSE(wrong.passed);
  EXPECT_EQ(wrong.first_mismatch, 12);
}

TEST(BFile, EmptyFixtureIsVacuous) {
  const auto r = run({"oeis-check", "A000045", "--fixture", fixture("bfile_empty.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(BFile, CommandExitCodes) {
  EXPECT_EQ(run({"oeis-check", "A000045", "--fixture", fixture("b000045.txt")}).code, 0);
  EXPECT_EQ(run({"oeis-check", "A000045", "--fixture", fixture("b000045_gap.txt")}).code, cli::kExitCheckFailed);
  EXPECT_EQ(run({"oeis-check", "A000045", "--fixture", fixture("bfile_malformed.txt")}).code, cli::kExitUsage);
  // Unverified mappings need an explicit generator.
  EXPECT_EQ(run({"oeis-check", "A132262", "--fixture", fixture("b000045.txt")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"oeis-check", "A999999", "--fixture", fixture("b000045.txt"), "--generator", "fib"}).code, 0);
}

TEST(BFile, Generators) {
  EXPECT_EQ(cli::generate("fib", 0, 5, 0), fq::fib_range(0, 5));
  const auto radial = cli::generate("radial_rows", 0, 5, 0);
  const std::vector<fq::BigInt> expected{1, 1, 1, 2, 1, 1};
  EXPECT_EQ(radial, expected);
  const auto u = cli::generate("u_rows", 2, 4, 0);
  EXPECT_EQ(u, (std::vector<fq::BigInt>{1, 1, 1}));
  EXPECT_THROW(cli::generate("nope", 0, 1, 0), fq::Error);
}

TEST(Binary, StdoutCarriesDataAndExitStatusIsReported) {
  auto [code, out] = shell("utable 4 --format csv");
  EXPECT_EQ(code, 0);
  EXPECT_EQ(out, slurp(fixture("utable4.csv")));
  std::tie(code, out) = shell("svec 13");
  EXPECT_EQ(code, 3);
  EXPECT_TRUE(out.empty());
  std::tie(code, out) = shell("verify three-term --from -100 --to 100");
  EXPECT_EQ(code, 0);
}

TEST(Binary, EnvironmentRaisesTheCap) {
  const std::string cmd = "FIBQUIVER_ORACLE_CAP=13 " + std::string(FIBQUIVER_BINARY) + " svec 13 --format csv";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 0);
  EXPECT_NE(out.find("13,13,12288,1"), std::string::npos);
}

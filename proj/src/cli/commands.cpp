#include "fibquiver/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "fibquiver/catident.hpp"
#include "fibquiver/cli/bfile.hpp"
#include "fibquiver/cli/payloads.hpp"
#include "fibquiver/cli/render.hpp"
#include "fibquiver/errors.hpp"
#include "fibquiver/profiles.hpp"

#ifndef FIBQUIVER_DEFAULT_OEIS_MAP
#define FIBQUIVER_DEFAULT_OEIS_MAP "data/oeis_map.json"
#endif

namespace fibquiver::cli {

namespace {

const std::map<std::string, Format> kFormats{{"json", Format::json}, {"csv", Format::csv}, {"ascii", Format::ascii}};

struct Settings {
  std::string format = "ascii";
  int oracle_cap = kDefaultOracleCap;

  Format fmt() const { return kFormats.at(format); }
  OracleLimits limits() const { return {oracle_cap, std::max(kDefaultBallCap, oracle_cap + 1)}; }
};

struct VerifyArgs {
  std::string suite;
  std::optional<int> t;
  std::optional<int> t_max;
  std::optional<FibIndex> from;
  std::optional<FibIndex> to;
  std::optional<long long> max;
};

// Steps to check: exactly --t, or lo..--t-max (falling back to `fallback`).
std::vector<int> steps(const VerifyArgs& a, int lo, int fallback) {
  if (a.t) return {*a.t};
  std::vector<int> out;
  for (int t = lo; t <= a.t_max.value_or(fallback); ++t) out.push_back(t);
  return out;
}

VerifyOutcome run_suite(const VerifyArgs& a, const OracleLimits& limits) {
  VerifyOutcome outcome{a.suite, {}};
  auto& reports = outcome.reports;
  if (a.suite == "prop41") {
    for (int t : steps(a, 1, 6)) {
      for (const auto& [x, y] : sample_edges()) reports.push_back(check_prop41(t, x, y, limits));
    }
  } else if (a.suite == "cor42") {
    for (int t : steps(a, 1, 6)) {
      for (const auto& walk : sample_walks(t)) reports.push_back(check_cor42(t, path_from_walk(walk), limits));
    }
  } else if (a.suite == "cor43") {
    for (int t : steps(a, 0, 6)) {
      for (const auto& walk : sample_walks(t + 2)) {
        reports.push_back(check_cor43(t, anchored_path_from_walk(walk), limits));
      }
    }
  } else if (a.suite == "oracle") {
    for (int t : steps(a, 0, 8)) reports.push_back(check_oracle(t, limits));
  } else if (a.suite == "sums") {
    const int t_max = a.t.value_or(a.t_max.value_or(300));
    reports.push_back(check_profile_sums(t_max));
    reports.push_back(check_scalar_corollaries(t_max));
  } else if (a.suite == "three-term") {
    const FibIndex bound = a.t_max.value_or(100);
    reports.push_back(check_recursions(a.from.value_or(-bound), a.to.value_or(bound)));
    reports.push_back(check_sigma_moves(10'000, 1));
  } else if (a.suite == "pairs") {
    const long long max = a.max.value_or(100);
    reports.push_back(check_classification_box(max));
    reports.push_back(check_pair_recursion(max));
  }
  return outcome;
}

std::string cap_message(const OracleCapExceeded& e) {
  return "error: step " + std::to_string(e.requested()) + " exceeds the oracle cap " + std::to_string(e.cap()) +
         "; raise it with --oracle-cap N or the FIBQUIVER_ORACLE_CAP environment variable";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibonacci vectors on the 3-regular tree and Fibonacci pair identities", "fibquiver"};
  app.fallthrough();
  app.require_subcommand(1);

  Settings settings;
  app.add_option("--format", settings.format, "Output format: json, csv or ascii")
      ->check(CLI::IsMember({"json", "csv", "ascii"}))
      ->capture_default_str();
  app.add_option("--oracle-cap", settings.oracle_cap, "Largest step for vertex-by-vertex computations")
      ->envname("FIBQUIVER_ORACLE_CAP")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  FibIndex fib_from = -10, fib_to = 10;
  auto* fib_cmd = app.add_subcommand("fib", "Fibonacci numbers f_from .. f_to");
  fib_cmd->add_option("--from", fib_from)->capture_default_str();
  fib_cmd->add_option("--to", fib_to)->capture_default_str();

  long long pairs_max = 100;
  auto* pairs_cmd = app.add_subcommand("pairs", "Fibonacci pairs with both coordinates bounded");
  pairs_cmd->add_option("--max", pairs_max)->check(CLI::NonNegativeNumber)->capture_default_str();

  std::string cx, cy;
  auto* classify_cmd = app.add_subcommand("classify", "Classify the point (X, Y)");
  classify_cmd->add_option("X", cx)->required();
  classify_cmd->add_option("Y", cy)->required();

  int utable_t = 4;
  auto* utable_cmd = app.add_subcommand("utable", "Bi-radial u table for t = 0..T");
  utable_cmd->add_option("T", utable_t)->required()->check(CLI::NonNegativeNumber);

  int partition_t = 0;
  auto* partition_cmd = app.add_subcommand("partition", "Weighted partitions of f_4t-1 and f_4t+1");
  partition_cmd->add_option("T", partition_t)->required()->check(CLI::NonNegativeNumber);

  int svec_t = 0;
  auto* svec_cmd = app.add_subcommand("svec", "The tree vector s_T(base) by distance ring");
  svec_cmd->add_option("T", svec_t)->required()->check(CLI::NonNegativeNumber);

  int rvec_t = 0;
  auto* rvec_cmd = app.add_subcommand("rvec", "The tree vector r_T(base, 0) by signed class");
  rvec_cmd->add_option("T", rvec_t)->required()->check(CLI::NonNegativeNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite; exit 0 iff every check passes");
  verify_cmd->add_option("SUITE", verify.suite)
      ->required()
      ->check(CLI::IsMember({"prop41", "cor42", "cor43", "oracle", "sums", "three-term", "pairs"}));
  verify_cmd->add_option("--t", verify.t, "Check this step only")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--t-max", verify.t_max, "Check every step up to this one")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--from", verify.from, "First index (three-term)");
  verify_cmd->add_option("--to", verify.to, "Last index (three-term)");
  verify_cmd->add_option("--max", verify.max, "Coordinate bound (pairs)")->check(CLI::NonNegativeNumber);

  std::string oeis_id, oeis_fixture, oeis_generator;
  std::string oeis_map = FIBQUIVER_DEFAULT_OEIS_MAP;
  std::optional<long long> oeis_offset;
  auto* oeis_cmd = app.add_subcommand("oeis-check", "Compare a b-file fixture with a generator");
  oeis_cmd->add_option("ID", oeis_id)->required();
  oeis_cmd->add_option("--fixture", oeis_fixture, "b-file to compare against")->required();
  oeis_cmd->add_option("--map", oeis_map, "Sequence to generator configuration")
      ->envname("FIBQUIVER_OEIS_MAP")
      ->capture_default_str();
  oeis_cmd->add_option("--generator", oeis_generator, "Generator name; overrides the map")
      ->check(CLI::IsMember(generator_names()));
  oeis_cmd->add_option("--offset", oeis_offset, "Index of the first term; overrides the map");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format fmt = settings.fmt();
  const OracleLimits limits = settings.limits();
  try {
    if (fib_cmd->parsed()) {
      if (fib_from > fib_to) {
        err << "error: --from must not exceed --to\n";
        return kExitUsage;
      }
      out << render(make_fib_listing(fib_from, fib_to), fmt);
    } else if (pairs_cmd->parsed()) {
      out << render(make_pairs_listing(pairs_max), fmt);
    } else if (classify_cmd->parsed()) {
      DimPair p;
      try {
        p = {parse_decimal(cx), parse_decimal(cy)};
      } catch (const std::invalid_argument&) {
        err << "error: classify expects two integers, got '" << cx << "' and '" << cy << "'\n";
        return kExitUsage;
      }
      out << render(make_classify_result(p), fmt);
    } else if (utable_cmd->parsed()) {
      out << render(make_utable_listing(utable_t), fmt);
    } else if (partition_cmd->parsed()) {
      out << render(partition_report(partition_t), fmt);
    } else if (svec_cmd->parsed()) {
      out << render(make_vector_listing(Series::s, svec_t, limits), fmt);
    } else if (rvec_cmd->parsed()) {
      out << render(make_vector_listing(Series::r, rvec_t, limits), fmt);
    } else if (verify_cmd->parsed()) {
      if (verify.t && verify.t_max) {
        err << "error: give either --t or --t-max, not both\n";
        return kExitUsage;
      }
      const VerifyOutcome outcome = run_suite(verify, limits);
      out << render(outcome, fmt);
      if (!outcome.passed()) {
        for (const auto& report : outcome.reports) {
          if (const auto* bad = report.first_failure()) {
            err << "FAIL " << report.suite << " t=" << report.t << ": " << bad->name << ": " << bad->detail << "\n";
            break;
          }
        }
        return kExitCheckFailed;
      }
    } else if (oeis_cmd->parsed()) {
      std::string generator = oeis_generator;
      long long offset = oeis_offset.value_or(0);
      if (generator.empty()) {
        const auto mappings = load_sequence_map(oeis_map);
        const auto it = std::find_if(mappings.begin(), mappings.end(),
                                     [&](const SequenceMapping& m) { return m.sequence_id == oeis_id; });
        if (it == mappings.end()) {
          err << "error: " << oeis_id << " is not listed in " << oeis_map << "; pass --generator\n";
          return kExitUsage;
        }
        if (!it->generator) {
          err << "error: " << oeis_id << " has no generator in " << oeis_map << " (status " << it->status
              << "); pass --generator\n";
          return kExitUsage;
        }
        generator = *it->generator;
        if (!oeis_offset) offset = it->offset;
      }
      BFile fixture;
      try {
        fixture = load_bfile(oeis_fixture);
      } catch (const BFileParseError& e) {
        err << "error: " << oeis_fixture << ": " << e.what() << "\n";
        return kExitUsage;
      }
      const OeisOutcome outcome = compare_bfile(oeis_id, generator, offset, fixture);
      out << render(outcome, fmt);
      if (outcome.vacuous) err << "warning: " << outcome.message << "\n";
      if (!outcome.passed) {
        err << "MISMATCH " << outcome.message << "\n";
        return kExitCheckFailed;
      }
    }
  } catch (const OracleCapExceeded& e) {
    err << cap_message(e) << "\n";
    return kExitRuntime;
  } catch (const RadiusTooLarge& e) {
    err << "error: " << e.what() << "; raise --oracle-cap to enlarge the enumeration limit\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace fibquiver::cli

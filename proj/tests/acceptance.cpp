// Acceptance checks AC1..AC8. One line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fibquiver/catident.hpp"
#include "fibquiver/cli/bfile.hpp"
#include "fibquiver/cli/commands.hpp"
#include "fibquiver/cli/payloads.hpp"
#include "fibquiver/profiles.hpp"

namespace fq = fibquiver;
namespace cli = fibquiver::cli;

namespace {

struct Verdict {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
  void require(const fq::IdentityReport& r) {
    if (const auto* bad = r.first_failure()) {
      require(false, r.suite + " t=" + std::to_string(r.t) + ": " + bad->name + ": " + bad->detail);
    }
  }
};

std::vector<fq::BigInt> big(std::initializer_list<long> xs) {
  std::vector<fq::BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Verdict ac1_utable() {
  Verdict v;
  const auto rows = fq::u_table(4);
  const std::vector<fq::ClassValues> expected{
      {-1, big({1, 1})},
      {0, big({1, 1, 1})},
      {-2, big({1, 1, 4, 2, 3, 1, 1})},
      {-4, big({1, 1, 6, 5, 17, 8, 13, 4, 5, 1, 1})},
      {-6, big({1, 1, 8, 7, 32, 24, 77, 35, 60, 19, 26, 6, 7, 1, 1})},
  };
  const std::vector<std::pair<long, long>> sums{{1, 1}, {2, 5}, {13, 34}, {89, 233}, {610, 1597}};
  v.require(rows.size() == expected.size(), "wrong number of rows");
  for (std::size_t t = 0; t < rows.size() && t < expected.size(); ++t) {
    v.require(rows[t].values == expected[t], "row t=" + std::to_string(t) + " differs");
    const auto s = fq::u_sums(rows[t]);
    v.require(s.minus == sums[t].first && s.plus == sums[t].second, "side columns differ at t=" + std::to_string(t));
  }
  return v;
}

Verdict ac2_partition() {
  Verdict v;
  const auto f = fq::fib_range(-1, 4 * 300 + 1);
  auto u = fq::u_initial();
  for (int t = 0; t <= 300; ++t) {
    if (t > 0) u = fq::u_step(u);
    const auto s = fq::u_sums(u);
    v.require(s.minus == f[4 * t] && s.plus == f[4 * t + 2], "u_sums differ at t=" + std::to_string(t));
  }
  return v;
}

Verdict ac3_radial() {
  Verdict v;
  const auto f = fq::fib_range(0, 2 * 300 + 2);
  auto p = fq::radial_initial();
  for (int t = 0; t <= 300; ++t) {
    if (t > 0) p = fq::radial_step(p);
    const auto s = fq::radial_sums(p);
    v.require(s.minus == f[2 * t] && s.plus == f[2 * t + 2], "radial_sums differ at t=" + std::to_string(t));
  }
  return v;
}

Verdict ac4_oracle() {
  Verdict v;
  for (int t = 0; t <= 8; ++t) v.require(fq::check_oracle(t));
  return v;
}

Verdict ac5_identities() {
  Verdict v;
  for (int t = 1; t <= 6; ++t) {
    const auto edges = fq::sample_edges();
    v.require(edges.size() >= 3, "fewer than 3 edge positions");
    for (const auto& [x, y] : edges) v.require(fq::check_prop41(t, x, y));
    const auto walks = fq::sample_walks(t);
    v.require(walks.size() >= 3, "fewer than 3 path shapes");
    for (const auto& w : walks) v.require(fq::check_cor42(t, fq::path_from_walk(w)));
  }
  for (int t = 0; t <= 6; ++t) {
    for (const auto& w : fq::sample_walks(t + 2)) v.require(fq::check_cor43(t, fq::anchored_path_from_walk(w)));
  }
  v.require(fq::check_scalar_corollaries(1000));
  return v;
}

Verdict ac6_pairs() {
  Verdict v;
  v.require(fq::check_classification_box(1000));
  return v;
}

Verdict ac7_recursions() {
  Verdict v;
  v.require(fq::check_recursions(-500, 500));
  v.require(fq::check_sigma_moves(10'000, 2024));
  v.require(fq::check_pair_recursion(100));
  return v;
}

template <typename T>
bool round_trips(const T& value) {
  const auto text = cli::emit_json(value);
  return cli::parse_json<T>(text) == value && cli::emit_json(cli::parse_json<T>(text)) == text;
}

Verdict ac8_cli() {
  Verdict v;
  const std::string fixtures = FIBQUIVER_FIXTURES;
  auto run = [](std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
  };
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "prop41"}, {"verify", "cor42", "--t", "6"}, {"verify", "cor43"},
        {"verify", "oracle"}, {"verify", "sums", "--t-max", "300"},
        {"verify", "three-term", "--from", "-100", "--to", "100"}, {"verify", "pairs"}}) {
    v.require(run(args) == 0, "verify " + args[1] + " did not exit 0");
  }

  std::string csv;
  v.require(run({"utable", "4", "--format", "csv"}, &csv) == 0, "utable 4 failed");
  std::ifstream pinned(fixtures + "/utable4.csv", std::ios::binary);
  std::ostringstream pinned_text;
  pinned_text << pinned.rdbuf();
  v.require(pinned && csv == pinned_text.str(), "utable 4 csv differs from the pinned fixture");

  v.require(round_trips(cli::make_fib_listing(-100, 100)), "fib json");
  v.require(round_trips(cli::make_pairs_listing(1000)), "pairs json");
  v.require(round_trips(cli::make_classify_result({2, 5})), "classify json");
  v.require(round_trips(cli::make_classify_result({2, 2})), "classify json");
  v.require(round_trips(cli::make_utable_listing(8)), "utable json");
  v.require(round_trips(fq::partition_report(6)), "partition json");
  v.require(round_trips(cli::make_vector_listing(cli::Series::s, 5, {})), "svec json");
  v.require(round_trips(cli::make_vector_listing(cli::Series::r, 5, {})), "rvec json");
  v.require(round_trips(cli::VerifyOutcome{"cor43", {fq::check_cor43(3)}}), "verify json");

  const auto outcome = cli::compare_bfile("A000045", "fib", 0, cli::load_bfile(fixtures + "/b000045.txt"));
  v.require(round_trips(outcome), "oeis-check json");
  v.require(outcome.passed && !outcome.vacuous, "A000045 fixture: " + outcome.message);
  v.require(run({"oeis-check", "A000045", "--fixture", fixtures + "/b000045.txt"}) == 0, "oeis-check exit status");
  return v;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // 0: no limit
  std::function<Verdict()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "u table rows t=0..4 and side columns", 1, ac1_utable},
      {"AC2", "u_sums(u_t) = (f_4t-1, f_4t+1) for t <= 300", 10, ac2_partition},
      {"AC3", "radial sums = (f_2t, f_2t+2) for t <= 300", 10, ac3_radial},
      {"AC4", "profiles expand to the oracle vectors for t <= 8", 30, ac4_oracle},
      {"AC5", "tree-vector identities for t <= 6, scalar sums for t <= 1000", 0, ac5_identities},
      {"AC6", "|q| = 1 classification over |x|,|y| <= 1000", 30, ac6_pairs},
      {"AC7", "three-term, negaFibonacci, sigma moves, pair recursion", 0, ac7_recursions},
      {"AC8", "command-line contract", 0, ac8_cli},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0) {
      std::ostringstream msg;
      msg << "took " << secs << " s, limit " << c.limit_seconds << " s";
      v.require(secs < c.limit_seconds, msg.str());
    }
    std::cout << c.id << " " << (v.ok ? "PASS" : "FAIL") << "  " << c.title << "  (" << std::fixed
              << std::setprecision(3) << secs << " s)";
    if (!v.ok) std::cout << "  -- " << v.why;
    std::cout << "\n";
    if (!v.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

#include "fibquiver/cli/payloads.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fibquiver {

namespace {

Direction parse_direction(const std::string& s) {
  if (s == "up") return Direction::up;
  if (s == "down") return Direction::down;
  throw std::invalid_argument("unknown direction '" + s + "'");
}

PairKind parse_kind(const std::string& s) {
  for (PairKind k : {PairKind::EvenPair, PairKind::OddPair, PairKind::NotAPair}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown pair kind '" + s + "'");
}

}  // namespace

void to_json(json& j, const VertexId& v) { j = v.to_string(); }
void from_json(const json& j, VertexId& v) { v = VertexId::parse(j.get<std::string>()); }

void to_json(json& j, const DimPair& v) { j = json{{"x", v.x}, {"y", v.y}}; }
void from_json(const json& j, DimPair& v) {
  j.at("x").get_to(v.x);
  j.at("y").get_to(v.y);
}

void to_json(json& j, const PairClass& v) {
  j = json{{"kind", to_string(v.kind)}, {"witness", nullptr}};
  if (v.witness) {
    j["witness"] = json{{"t", v.witness->t},
                        {"direction", to_string(v.witness->direction)},
                        {"negated", v.witness->negated}};
  }
}
void from_json(const json& j, PairClass& v) {
  v.kind = parse_kind(j.at("kind").get<std::string>());
  v.witness.reset();
  if (const auto& w = j.at("witness"); !w.is_null()) {
    v.witness = PairWitness{w.at("t").get<FibIndex>(), parse_direction(w.at("direction").get<std::string>()),
                            w.at("negated").get<bool>()};
  }
}

void to_json(json& j, const ParitySums& v) { j = json{{"minus", v.minus}, {"plus", v.plus}}; }
void from_json(const json& j, ParitySums& v) {
  j.at("minus").get_to(v.minus);
  j.at("plus").get_to(v.plus);
}

void to_json(json& j, const BiRadialProfile& v) {
  j = json{{"t", v.t}, {"min_class", v.values.min_class()}, {"values", v.values.dense()}};
}
void from_json(const json& j, BiRadialProfile& v) {
  v.t = j.at("t").get<int>();
  v.values = ClassValues(j.at("min_class").get<int>(), j.at("values").get<std::vector<BigInt>>());
}

void to_json(json& j, const PartitionTerm& v) {
  j = json{{"s", v.s}, {"weight", v.weight}, {"value", v.value}, {"product", v.product}};
}
void from_json(const json& j, PartitionTerm& v) {
  v.s = j.at("s").get<int>();
  j.at("weight").get_to(v.weight);
  j.at("value").get_to(v.value);
  j.at("product").get_to(v.product);
}

void to_json(json& j, const PartitionReport& v) {
  j = json{{"schema_version", cli::kSchemaVersion},
           {"kind", "partition"},
           {"t", v.t},
           {"target_minus", v.target_minus},
           {"target_plus", v.target_plus},
           {"terms_minus", v.terms_minus},
           {"terms_plus", v.terms_plus},
           {"total_minus", v.total_minus()},
           {"total_plus", v.total_plus()}};
}
void from_json(const json& j, PartitionReport& v);

void to_json(json& j, const TreeVector& v) {
  json entries = json::array();
  for (const auto& [vertex, value] : v.entries()) entries.push_back(json{{"vertex", vertex}, {"value", value}});
  j = json{{"base", v.base()}, {"entries", std::move(entries)}};
}
void from_json(const json& j, TreeVector& v) {
  v = TreeVector(j.at("base").get<VertexId>());
  for (const auto& e : j.at("entries")) v.set(e.at("vertex").get<VertexId>(), e.at("value").get<BigInt>());
}

void to_json(json& j, const IdentityCheck& v) {
  j = json{{"name", v.name}, {"passed", v.passed}, {"detail", v.detail}};
}
void from_json(const json& j, IdentityCheck& v) {
  j.at("name").get_to(v.name);
  j.at("passed").get_to(v.passed);
  j.at("detail").get_to(v.detail);
}

void to_json(json& j, const IdentityReport& v) {
  j = json{{"suite", v.suite}, {"t", v.t}, {"passed", v.passed()}, {"checks", v.checks}};
}
void from_json(const json& j, IdentityReport& v) {
  j.at("suite").get_to(v.suite);
  j.at("t").get_to(v.t);
  j.at("checks").get_to(v.checks);
}

}  // namespace fibquiver

namespace fibquiver::cli {

namespace {

json header(const char* kind) { return json{{"schema_version", kSchemaVersion}, {"kind", kind}}; }

void expect_header(const json& j, const char* kind) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema_version " + j.at("schema_version").dump());
  }
  if (j.at("kind").get<std::string>() != kind) {
    throw std::invalid_argument("expected a '" + std::string(kind) + "' document, got '" +
                                j.at("kind").get<std::string>() + "'");
  }
}

}  // namespace

bool VerifyOutcome::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed(); });
}

FibListing make_fib_listing(FibIndex from, FibIndex to) { return {from, to, fib_range(from, to)}; }

PairsListing make_pairs_listing(long long max) {
  PairsListing listing{max, {}};
  if (max < 0) return listing;
  // |f_t| grows with |t|; stop once it clears max.
  const BigInt limit(static_cast<long>(max));
  FibIndex bound = 2;
  while (fib(bound) <= limit) ++bound;
  std::map<std::pair<BigInt, BigInt>, PairEntry> found;
  for (FibIndex t = -bound - 2; t <= bound + 2; ++t) {
    for (Direction d : {Direction::up, Direction::down}) {
      DimPair p = fib_pair(t, d);
      if (abs(p.x) > limit || abs(p.y) > limit) continue;
      found.try_emplace({p.x, p.y}, PairEntry{p, classify_pair(p)});
    }
  }
  for (auto& [key, entry] : found) listing.pairs.push_back(std::move(entry));
  std::sort(listing.pairs.begin(), listing.pairs.end(), [](const PairEntry& a, const PairEntry& b) {
    const auto& wa = *a.classification.witness;
    const auto& wb = *b.classification.witness;
    return std::pair(wa.t, wa.direction) < std::pair(wb.t, wb.direction);
  });
  return listing;
}

ClassifyResult make_classify_result(const DimPair& p) { return {p, euler_form(p), classify_pair(p)}; }

UTableListing make_utable_listing(int t_max) {
  UTableListing listing;
  listing.rows = u_table(t_max);
  for (const auto& row : listing.rows) listing.sums.push_back(u_sums(row));
  return listing;
}

VectorListing make_vector_listing(Series series, int t, const OracleLimits& limits) {
  VectorListing listing{series, t, series == Series::s ? s_vec(t, limits) : r_vec(t, limits), {}};
  listing.sums = pushdown(listing.vector, t);
  return listing;
}

std::vector<Ring> rings_of(const VectorListing& v) {
  std::map<int, BigInt> seen;
  for (const auto& [vertex, value] : v.vector.entries()) {
    seen.try_emplace(v.series == Series::s ? static_cast<int>(vertex.depth()) : biradial_class(vertex), value);
  }
  const int radius = static_cast<int>(v.vector.radius());
  std::vector<Ring> out;
  auto value_of = [&](int c) { return seen.count(c) ? seen[c] : BigInt(0); };
  out.push_back({0, 0, BigInt(1), value_of(0)});
  for (int d = 1; d <= radius; ++d) {
    if (v.series == Series::s) {
      out.push_back({d, d, shell_size(d), value_of(d)});
    } else {
      out.push_back({d, d, pow2(d), value_of(d)});
      out.push_back({-d, d, pow2(d - 1), value_of(-d)});
    }
  }
  return out;
}

void to_json(json& j, const FibListing& v) {
  j = header("fib");
  j["from"] = v.from;
  j["to"] = v.to;
  j["values"] = v.values;
}
void from_json(const json& j, FibListing& v) {
  expect_header(j, "fib");
  j.at("from").get_to(v.from);
  j.at("to").get_to(v.to);
  j.at("values").get_to(v.values);
}

void to_json(json& j, const PairsListing& v) {
  j = header("pairs");
  j["max"] = v.max;
  json pairs = json::array();
  for (const auto& e : v.pairs) {
    pairs.push_back(json{{"x", e.point.x}, {"y", e.point.y}, {"classification", e.classification}});
  }
  j["pairs"] = std::move(pairs);
}
void from_json(const json& j, PairsListing& v) {
  expect_header(j, "pairs");
  j.at("max").get_to(v.max);
  v.pairs.clear();
  for (const auto& e : j.at("pairs")) {
    v.pairs.push_back({e.get<DimPair>(), e.at("classification").get<PairClass>()});
  }
}

void to_json(json& j, const ClassifyResult& v) {
  j = header("classify");
  j["x"] = v.point.x;
  j["y"] = v.point.y;
  j["q"] = v.q;
  j["classification"] = v.classification;
}
void from_json(const json& j, ClassifyResult& v) {
  expect_header(j, "classify");
  v.point = j.get<DimPair>();
  j.at("q").get_to(v.q);
  j.at("classification").get_to(v.classification);
}

void to_json(json& j, const UTableListing& v) {
  j = header("utable");
  json rows = json::array();
  for (std::size_t i = 0; i < v.rows.size(); ++i) {
    json row = v.rows[i];
    row["f_4t-1"] = v.sums.at(i).minus;
    row["f_4t+1"] = v.sums.at(i).plus;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
}
void from_json(const json& j, UTableListing& v) {
  expect_header(j, "utable");
  v.rows.clear();
  v.sums.clear();
  for (const auto& row : j.at("rows")) {
    v.rows.push_back(row.get<BiRadialProfile>());
    v.sums.push_back({row.at("f_4t-1").get<BigInt>(), row.at("f_4t+1").get<BigInt>()});
  }
}

void to_json(json& j, const VectorListing& v) {
  j = header(v.series == Series::s ? "svec" : "rvec");
  j["t"] = v.t;
  j["sums"] = json{{"minus", v.sums.x}, {"plus", v.sums.y}};
  json rings = json::array();
  for (const auto& r : rings_of(v)) {
    rings.push_back(json{{"class", r.cls}, {"distance", r.distance}, {"count", r.count}, {"value", r.value}});
  }
  j["rings"] = std::move(rings);
  j["vector"] = v.vector;
}
void from_json(const json& j, VectorListing& v) {
  const auto kind = j.at("kind").get<std::string>();
  expect_header(j, kind == "rvec" ? "rvec" : "svec");
  v.series = kind == "rvec" ? Series::r : Series::s;
  j.at("t").get_to(v.t);
  v.sums = {j.at("sums").at("minus").get<BigInt>(), j.at("sums").at("plus").get<BigInt>()};
  j.at("vector").get_to(v.vector);
}

void to_json(json& j, const VerifyOutcome& v) {
  j = header("verify");
  j["suite"] = v.suite;
  j["passed"] = v.passed();
  j["reports"] = v.reports;
}
void from_json(const json& j, VerifyOutcome& v) {
  expect_header(j, "verify");
  j.at("suite").get_to(v.suite);
  j.at("reports").get_to(v.reports);
}

void to_json(json& j, const OeisOutcome& v) {
  j = header("oeis-check");
  j["sequence_id"] = v.sequence_id;
  j["generator"] = v.generator;
  j["checked"] = v.checked;
  j["passed"] = v.passed;
  j["vacuous"] = v.vacuous;
  j["first_mismatch"] = v.first_mismatch ? json(*v.first_mismatch) : json(nullptr);
  j["message"] = v.message;
}
void from_json(const json& j, OeisOutcome& v) {
  expect_header(j, "oeis-check");
  j.at("sequence_id").get_to(v.sequence_id);
  j.at("generator").get_to(v.generator);
  j.at("checked").get_to(v.checked);
  j.at("passed").get_to(v.passed);
  j.at("vacuous").get_to(v.vacuous);
  v.first_mismatch.reset();
  if (!j.at("first_mismatch").is_null()) v.first_mismatch = j.at("first_mismatch").get<long long>();
  j.at("message").get_to(v.message);
}

}  // namespace fibquiver::cli

namespace fibquiver {

void from_json(const json& j, PartitionReport& v) {
  cli::expect_header(j, "partition");
  j.at("t").get_to(v.t);
  j.at("target_minus").get_to(v.target_minus);
  j.at("target_plus").get_to(v.target_plus);
  j.at("terms_minus").get_to(v.terms_minus);
  j.at("terms_plus").get_to(v.terms_plus);
}

}  // namespace fibquiver

#pragma once

// Everything the command line prints, as values, with JSON encoding.
// Every JSON document carries "schema_version" and "kind"; big integers are
// decimal strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "fibquiver/catident.hpp"
#include "fibquiver/cli/bfile.hpp"
#include "fibquiver/fibcore.hpp"
#include "fibquiver/profiles.hpp"
#include "fibquiver/reflect.hpp"

template <>
struct nlohmann::adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& v) { j = v.get_str(10); }
  static void from_json(const json& j, mpz_class& v) { v = fibquiver::parse_decimal(j.get<std::string>()); }
};

namespace fibquiver {

using nlohmann::json;

void to_json(json& j, const VertexId& v);
void from_json(const json& j, VertexId& v);
void to_json(json& j, const DimPair& v);
void from_json(const json& j, DimPair& v);
void to_json(json& j, const PairClass& v);
void from_json(const json& j, PairClass& v);
void to_json(json& j, const ParitySums& v);
void from_json(const json& j, ParitySums& v);
void to_json(json& j, const BiRadialProfile& v);
void from_json(const json& j, BiRadialProfile& v);
void to_json(json& j, const PartitionTerm& v);
void from_json(const json& j, PartitionTerm& v);
void to_json(json& j, const PartitionReport& v);
void from_json(const json& j, PartitionReport& v);
void to_json(json& j, const TreeVector& v);
void from_json(const json& j, TreeVector& v);
void to_json(json& j, const IdentityCheck& v);
void from_json(const json& j, IdentityCheck& v);
void to_json(json& j, const IdentityReport& v);
void from_json(const json& j, IdentityReport& v);

}  // namespace fibquiver

namespace fibquiver::cli {

inline constexpr int kSchemaVersion = 1;

enum class Format { json, csv, ascii };

struct FibListing {
  FibIndex from = 0;
  FibIndex to = 0;
  std::vector<BigInt> values;

  friend bool operator==(const FibListing&, const FibListing&) = default;
};

struct PairEntry {
  DimPair point;
  PairClass classification;

  friend bool operator==(const PairEntry&, const PairEntry&) = default;
};

struct PairsListing {
  long long max = 0;
  std::vector<PairEntry> pairs;

  friend bool operator==(const PairsListing&, const PairsListing&) = default;
};

struct ClassifyResult {
  DimPair point;
  BigInt q;
  PairClass classification;

  friend bool operator==(const ClassifyResult&, const ClassifyResult&) = default;
};

struct UTableListing {
  std::vector<BiRadialProfile> rows;
  std::vector<ParitySums> sums;  // (f_{4t-1}, f_{4t+1}) per row

  friend bool operator==(const UTableListing&, const UTableListing&) = default;
};

enum class Series { s, r };

struct VectorListing {
  Series series = Series::s;
  int t = 0;
  TreeVector vector;
  DimPair sums;

  friend bool operator==(const VectorListing&, const VectorListing&) = default;
};

/// One symmetry class of a listed vector: for s-vectors the distance, for
/// r-vectors the signed class (negative on the y-side).
struct Ring {
  int cls = 0;
  int distance = 0;
  BigInt count;
  BigInt value;
};

/// Classes 0..radius, read off the stored entries (absent classes are 0).
std::vector<Ring> rings_of(const VectorListing& v);

struct VerifyOutcome {
  std::string suite;
  std::vector<IdentityReport> reports;

  bool passed() const;

  friend bool operator==(const VerifyOutcome&, const VerifyOutcome&) = default;
};

FibListing make_fib_listing(FibIndex from, FibIndex to);
/// Distinct literal Fibonacci pairs [f_t, f_{t+-2}] with both |coordinates| <= max.
PairsListing make_pairs_listing(long long max);
ClassifyResult make_classify_result(const DimPair& p);
UTableListing make_utable_listing(int t_max);
VectorListing make_vector_listing(Series series, int t, const OracleLimits& limits);

void to_json(json& j, const FibListing& v);
void from_json(const json& j, FibListing& v);
void to_json(json& j, const PairsListing& v);
void from_json(const json& j, PairsListing& v);
void to_json(json& j, const ClassifyResult& v);
void from_json(const json& j, ClassifyResult& v);
void to_json(json& j, const UTableListing& v);
void from_json(const json& j, UTableListing& v);
void to_json(json& j, const VectorListing& v);
void from_json(const json& j, VectorListing& v);
void to_json(json& j, const VerifyOutcome& v);
void from_json(const json& j, VerifyOutcome& v);
void to_json(json& j, const OeisOutcome& v);
void from_json(const json& j, OeisOutcome& v);

/// Serializes with the schema header; throws on kind mismatch when parsing.
template <typename T>
std::string emit_json(const T& value) {
  json j = value;
  return j.dump(2);
}

template <typename T>
T parse_json(const std::string& text) {
  return json::parse(text).get<T>();
}

}  // namespace fibquiver::cli

#pragma once

// OEIS b-file reading and comparison against generated sequences.

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "fibquiver/bigint.hpp"
#include "fibquiver/errors.hpp"

namespace fibquiver::cli {

struct BFileRecord {
  long long n;
  BigInt value;

  friend bool operator==(const BFileRecord&, const BFileRecord&) = default;
};

struct BFile {
  std::vector<BFileRecord> records;
};

class BFileParseError : public Error {
 public:
  BFileParseError(int line, const std::string& what)
      : Error("b-file line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Lines "n value"; blank lines and lines starting with '#' are skipped.
/// Indices must be strictly increasing.
BFile parse_bfile(std::istream& in);
BFile load_bfile(const std::string& path);

/// Named sequence generators. a(n) for n in [from, to]; `offset` is the index
/// of the first term for the flattened-triangle generators.
std::vector<std::string> generator_names();
std::vector<BigInt> generate(const std::string& generator, long long from, long long to, long long offset);

struct SequenceMapping {
  std::string sequence_id;
  std::optional<std::string> generator;
  long long offset = 0;
  std::string status;
  std::string note;
};

/// Reads the sequence -> generator configuration (JSON).
std::vector<SequenceMapping> load_sequence_map(const std::string& path);

struct OeisOutcome {
  std::string sequence_id;
  std::string generator;
  long long checked = 0;
  bool passed = false;
  bool vacuous = false;
  std::optional<long long> first_mismatch;
  std::string message;

  friend bool operator==(const OeisOutcome&, const OeisOutcome&) = default;
};

/// Compares the fixture against the generator over the fixture's index range.
/// Indices must be contiguous; a gap is reported as a mismatch at the first
/// missing index.
OeisOutcome compare_bfile(const std::string& sequence_id, const std::string& generator, long long offset,
                          const BFile& fixture);

}  // namespace fibquiver::cli

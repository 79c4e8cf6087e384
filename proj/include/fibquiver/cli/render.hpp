#pragma once

// Text renderings of the command payloads. JSON and CSV are stable; the ASCII
// layouts are meant for people and may change.

#include <string>

#include "fibquiver/cli/payloads.hpp"

namespace fibquiver::cli {

std::string render(const FibListing& v, Format f);
std::string render(const PairsListing& v, Format f);
std::string render(const ClassifyResult& v, Format f);
std::string render(const UTableListing& v, Format f);
std::string render(const PartitionReport& v, Format f);
std::string render(const VectorListing& v, Format f);
std::string render(const VerifyOutcome& v, Format f);
std::string render(const OeisOutcome& v, Format f);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace fibquiver::cli

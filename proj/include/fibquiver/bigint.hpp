#pragma once

#include <gmpxx.h>

#include <string>

namespace fibquiver {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Parses an optionally signed decimal integer; throws std::invalid_argument on junk.
BigInt parse_decimal(const std::string& text);

/// 2^k as an exact integer.
BigInt pow2(unsigned long k);

}  // namespace fibquiver

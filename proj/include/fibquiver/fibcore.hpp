#pragma once

// Fibonacci numbers over all integer indices, the Euler form of the
// 3-Kronecker quiver and classification of Fibonacci pairs.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fibquiver/bigint.hpp"

namespace fibquiver {

using FibIndex = std::int64_t;

enum class Direction { up, down };

std::string_view to_string(Direction d);

/// A dimension vector of the 3-Kronecker quiver, an arbitrary point of Z^2.
struct DimPair {
  BigInt x;
  BigInt y;

  friend bool operator==(const DimPair& a, const DimPair& b) { return a.x == b.x && a.y == b.y; }
  friend DimPair operator+(const DimPair& a, const DimPair& b) { return {a.x + b.x, a.y + b.y}; }
  friend DimPair operator-(const DimPair& a) { return {-a.x, -a.y}; }
};

DimPair operator*(long k, const DimPair& p);

enum class PairKind { EvenPair, OddPair, NotAPair };

std::string_view to_string(PairKind k);

struct PairWitness {
  FibIndex t = 0;
  Direction direction = Direction::up;
  /// Set when only (-x, -y) is a literal pair [f_t, f_{t+-2}].
  bool negated = false;

  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

struct PairClass {
  PairKind kind = PairKind::NotAPair;
  std::optional<PairWitness> witness;

  friend bool operator==(const PairClass&, const PairClass&) = default;
};

/// f_t for any integer t (f_0 = 0, f_1 = 1, f_{-t} = (-1)^{t+1} f_t).
/// Uses fast doubling; bit-identical to fib_range.
BigInt fib(FibIndex t);

/// f_from, ..., f_to by streaming additions. Empty when from > to.
std::vector<BigInt> fib_range(FibIndex from, FibIndex to);

/// q(x, y) = x^2 + y^2 - 3xy.
BigInt euler_form(const DimPair& p);

/// [f_t, f_{t+2}] for up, [f_t, f_{t-2}] for down.
DimPair fib_pair(FibIndex t, Direction direction);

/// (x, y) -> (3x - y, x).
DimPair sigma_plus(const DimPair& p);
/// (x, y) -> (y, 3y - x). Inverse of sigma_plus.
DimPair sigma_minus(const DimPair& p);

/// The sequence of points visited by Vieta descent, starting at p and ending
/// at the first point with max(|x|, |y|) <= 1. Each step applies whichever of
/// sigma_plus / sigma_minus strictly decreases |x| + |y|. Returns nullopt when
/// neither does (possible only when |q(p)| != 1).
std::optional<std::vector<DimPair>> vieta_descent(const DimPair& p);

/// Even/odd Fibonacci pair classification with an index witness.
PairClass classify_pair(const DimPair& p);

/// The literal pair named by a witness, negated if the witness says so.
DimPair witness_point(const PairWitness& w);

/// f_{t+2} = 3f_t - f_{t-2}, together with its rearrangements
/// f_{t-2} = 3f_t - f_{t+2} and f_{t-2} + f_{t+2} = 3f_t.
bool check_three_term(FibIndex t);

}  // namespace fibquiver

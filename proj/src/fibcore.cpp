#include "fibquiver/fibcore.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace fibquiver {

std::string_view to_string(Direction d) { return d == Direction::up ? "up" : "down"; }

std::string_view to_string(PairKind k) {
  switch (k) {
    case PairKind::EvenPair: return "EvenPair";
    case PairKind::OddPair: return "OddPair";
    case PairKind::NotAPair: return "NotAPair";
  }
  return "?";
}

DimPair operator*(long k, const DimPair& p) { return {k * p.x, k * p.y}; }

namespace {

// (f_n, f_{n+1}) for n >= 0 by fast doubling over the bits of n.
std::pair<BigInt, BigInt> fib_doubling(std::uint64_t n) {
  BigInt a = 0;  // f_k
  BigInt b = 1;  // f_{k+1}
  for (int bit = 63; bit >= 0; --bit) {
    BigInt c = a * (2 * b - a);  // f_{2k}
    BigInt d = a * a + b * b;    // f_{2k+1}
    if ((n >> bit) & 1U) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {a, b};
}

}  // namespace

BigInt fib(FibIndex t) {
  if (t >= 0) return fib_doubling(static_cast<std::uint64_t>(t)).first;
  // f_{-n} = (-1)^{n+1} f_n
  const std::uint64_t n = static_cast<std::uint64_t>(-(t + 1)) + 1;
  BigInt v = fib_doubling(n).first;
  if (n % 2 == 0) v = -v;
  return v;
}

std::vector<BigInt> fib_range(FibIndex from, FibIndex to) {
  std::vector<BigInt> out;
  if (from > to) return out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  BigInt cur = fib(from);
  BigInt next = fib(from + 1);
  for (FibIndex t = from; t <= to; ++t) {
    out.push_back(cur);
    BigInt after = cur + next;
    cur = std::move(next);
    next = std::move(after);
  }
  return out;
}

BigInt euler_form(const DimPair& p) { return p.x * p.x + p.y * p.y - 3 * p.x * p.y; }

DimPair fib_pair(FibIndex t, Direction direction) {
  return {fib(t), fib(direction == Direction::up ? t + 2 : t - 2)};
}

DimPair sigma_plus(const DimPair& p) { return {3 * p.x - p.y, p.x}; }

DimPair sigma_minus(const DimPair& p) { return {p.y, 3 * p.y - p.x}; }

namespace {

BigInt l1_norm(const DimPair& p) { return abs(p.x) + abs(p.y); }

bool is_base_point(const DimPair& p) { return abs(p.x) <= 1 && abs(p.y) <= 1; }

enum class Step { plus, minus };

struct BaseEntry {
  int x;
  int y;
  PairWitness witness;
};

// Literal Fibonacci pairs with max(|x|,|y|) <= 1. (-1,-1) has q = -1 but is
// not of the form [f_t, f_{t+-2}] and is deliberately absent.
constexpr std::array<BaseEntry, 5> kBasePairs{{
    {0, 1, {0, Direction::up, false}},
    {-1, 0, {-2, Direction::up, false}},
    {1, 0, {2, Direction::down, false}},
    {0, -1, {0, Direction::down, false}},
    {1, 1, {-1, Direction::up, false}},
}};

std::optional<std::pair<std::vector<Step>, DimPair>> descend(DimPair p) {
  std::vector<Step> steps;
  while (!is_base_point(p)) {
    const BigInt norm = l1_norm(p);
    DimPair plus = sigma_plus(p);
    DimPair minus = sigma_minus(p);
    if (l1_norm(plus) < norm) {
      steps.push_back(Step::plus);
      p = std::move(plus);
    } else if (l1_norm(minus) < norm) {
      steps.push_back(Step::minus);
      p = std::move(minus);
    } else {
      return std::nullopt;
    }
  }
  return std::make_pair(std::move(steps), std::move(p));
}

std::optional<PairWitness> literal_witness(const DimPair& p) {
  auto descent = descend(p);
  if (!descent) return std::nullopt;
  const auto& [steps, base] = *descent;
  for (const auto& entry : kBasePairs) {
    if (base.x != entry.x || base.y != entry.y) continue;
    PairWitness w = entry.witness;
    const FibIndex shift = w.direction == Direction::up ? 2 : -2;
    // sigma_minus raises the index of an up pair by 2 and lowers a down pair by 2.
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      w.t += (*it == Step::plus) ? shift : -shift;
    }
    return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<DimPair>> vieta_descent(const DimPair& p) {
  auto descent = descend(p);
  if (!descent) return std::nullopt;
  std::vector<DimPair> trace{p};
  DimPair cur = p;
  for (Step s : descent->first) {
    cur = (s == Step::plus) ? sigma_plus(cur) : sigma_minus(cur);
    trace.push_back(cur);
  }
  return trace;
}

PairClass classify_pair(const DimPair& p) {
  const BigInt q = euler_form(p);
  if (q != 1 && q != -1) return {};
  const PairKind kind = (q == 1) ? PairKind::EvenPair : PairKind::OddPair;
  if (auto w = literal_witness(p)) return {kind, w};
  if (auto w = literal_witness(-p)) {
    w->negated = true;
    return {kind, w};
  }
  // Unreachable for |q| = 1: every such point descends to the base set.
  throw std::logic_error("Vieta descent failed on a point with |q| = 1");
}

DimPair witness_point(const PairWitness& w) {
  DimPair p = fib_pair(w.t, w.direction);
  return w.negated ? -p : p;
}

bool check_three_term(FibIndex t) {
  const BigInt lo = fib(t - 2);
  const BigInt mid = fib(t);
  const BigInt hi = fib(t + 2);
  return hi == 3 * mid - lo && lo == 3 * mid - hi && lo + hi == 3 * mid;
}

}  // namespace fibquiver

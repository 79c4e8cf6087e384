#include "fibquiver/profiles.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "fibquiver/fibcore.hpp"

namespace fibquiver {

BigInt shell_size(int d) {
  if (d < 0) return 0;
  if (d == 0) return 1;
  return 3 * pow2(static_cast<unsigned long>(d - 1));
}

RadialProfile radial_initial() { return {0, {BigInt(1)}}; }

RadialProfile radial_step(const RadialProfile& p) {
  const int n = p.t + 2;
  auto old = [&](int d) -> BigInt {
    return (d >= 0 && d < static_cast<int>(p.values.size())) ? p.values[d] : BigInt(0);
  };
  RadialProfile next{p.t + 1, std::vector<BigInt>(n)};
  for (int d = 0; d < n; ++d) {
    if ((d % 2) == (p.t % 2)) {
      next.values[d] = old(d);
    } else if (d == 0) {
      next.values[d] = -old(0) + 3 * old(1);
    } else {
      // one neighbour closer to the centre, two further away
      next.values[d] = -old(d) + old(d - 1) + 2 * old(d + 1);
    }
  }
  return next;
}

RadialProfile radial_profile(int t) {
  if (t < 0) throw std::invalid_argument("negative step index");
  RadialProfile p = radial_initial();
  while (p.t < t) p = radial_step(p);
  return p;
}

std::vector<RadialProfile> radial_sequence(int t_max) {
  std::vector<RadialProfile> out;
  if (t_max < 0) return out;
  out.push_back(radial_initial());
  while (out.back().t < t_max) out.push_back(radial_step(out.back()));
  return out;
}

ParitySums radial_sums(const RadialProfile& p) {
  ParitySums sums{0, 0};
  for (int d = 0; d < static_cast<int>(p.values.size()); ++d) {
    BigInt term = shell_size(d) * p.values[d];
    if (d % 2 == p.t % 2) {
      sums.plus += term;
    } else {
      sums.minus += term;
    }
  }
  return sums;
}

ClassValues::ClassValues(int lo, std::vector<BigInt> values) : lo_(lo), values_(std::move(values)) {
  trim();
}

void ClassValues::trim() {
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
  std::size_t lead = 0;
  while (lead < values_.size() && values_[lead] == 0) ++lead;
  values_.erase(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(lead));
  lo_ = values_.empty() ? 0 : lo_ + static_cast<int>(lead);
}

BigInt ClassValues::at(int s) const {
  const long long i = static_cast<long long>(s) - lo_;
  if (i < 0 || i >= static_cast<long long>(values_.size())) return 0;
  return values_[static_cast<std::size_t>(i)];
}

Stencil u_stencil(int s) {
  // On the y side the two further vertices sit in class s-1; elsewhere in s+1.
  return s < 0 ? Stencil{2, -1, 1} : Stencil{1, -1, 2};
}

BiRadialProfile u_initial() { return {0, ClassValues(-1, {BigInt(1), BigInt(1)})}; }

namespace {

bool is_odd(int s) { return s % 2 != 0; }

BigInt apply(const Stencil& st, const BigInt& left, const BigInt& self, const BigInt& right) {
  return st.left * left + st.self * self + st.right * right;
}

// Dense working window covering every class that can become nonzero.
struct Window {
  int lo;
  std::vector<BigInt> v;

  BigInt get(int s) const {
    const int i = s - lo;
    return (i >= 0 && i < static_cast<int>(v.size())) ? v[i] : BigInt(0);
  }
};

Window widen(const ClassValues& u) {
  const int lo = (u.empty() ? 0 : u.min_class()) - 2;
  const int hi = (u.empty() ? 0 : u.max_class()) + 2;
  Window w{lo, std::vector<BigInt>(static_cast<std::size_t>(hi - lo + 1))};
  for (int s = lo; s <= hi; ++s) w.v[s - lo] = u.at(s);
  return w;
}

// Reflect every class of the given parity, reading neighbours from `w` itself.
// Classes of one parity are never adjacent, so in-place update is exact.
void reflect_phase(Window& w, bool odd) {
  std::vector<std::pair<int, BigInt>> updates;
  for (int i = 0; i < static_cast<int>(w.v.size()); ++i) {
    const int s = w.lo + i;
    if (is_odd(s) != odd) continue;
    updates.emplace_back(i, apply(u_stencil(s), w.get(s - 1), w.get(s), w.get(s + 1)));
  }
  for (auto& [i, value] : updates) w.v[i] = std::move(value);
}

}  // namespace

ClassValues u_half_step(const BiRadialProfile& u) {
  Window w = widen(u.values);
  reflect_phase(w, true);
  return ClassValues(w.lo, std::move(w.v));
}

BiRadialProfile u_step(const BiRadialProfile& u) {
  Window w = widen(u.values);
  reflect_phase(w, true);
  reflect_phase(w, false);
  return {u.t + 1, ClassValues(w.lo, std::move(w.v))};
}

std::vector<BiRadialProfile> u_table(int t_max) {
  std::vector<BiRadialProfile> rows;
  if (t_max < 0) return rows;
  rows.reserve(static_cast<std::size_t>(t_max) + 1);
  rows.push_back(u_initial());
  while (rows.back().t < t_max) rows.push_back(u_step(rows.back()));
  return rows;
}

int cartan_entry(int i, int j) {
  if (i == j) return 2;
  if (j == i - 1) return i < 0 ? -2 : -1;
  if (j == i + 1) return i < 0 ? -1 : -2;
  return 0;
}

BiRadialProfile u_step_cartan(const BiRadialProfile& u) {
  const int lo = (u.values.empty() ? 0 : u.values.min_class()) - 2;
  const int hi = (u.values.empty() ? 0 : u.values.max_class()) + 2;
  std::map<int, BigInt> v;
  for (int s = lo; s <= hi; ++s) v[s] = u.at(s);
  auto value = [&](int s) { auto it = v.find(s); return it == v.end() ? BigInt(0) : it->second; };
  for (bool odd : {true, false}) {
    for (int i = lo; i <= hi; ++i) {
      if (is_odd(i) != odd) continue;
      BigInt pairing = 0;
      for (int j = i - 1; j <= i + 1; ++j) pairing += cartan_entry(i, j) * value(j);
      v[i] = value(i) - pairing;
    }
  }
  std::vector<BigInt> dense;
  for (int s = lo; s <= hi; ++s) dense.push_back(value(s));
  return {u.t + 1, ClassValues(lo, std::move(dense))};
}

namespace {

BigInt class_weight(int s) {
  return s >= 0 ? pow2(static_cast<unsigned long>(s)) : pow2(static_cast<unsigned long>(-s - 1));
}

}  // namespace

ParitySums u_sums(const BiRadialProfile& u) {
  ParitySums sums{0, 0};
  if (u.values.empty()) return sums;
  for (int s = u.values.min_class(); s <= u.values.max_class(); ++s) {
    BigInt term = class_weight(s) * u.at(s);
    (is_odd(s) ? sums.minus : sums.plus) += term;
  }
  return sums;
}

BigInt PartitionReport::total_minus() const {
  BigInt sum = 0;
  for (const auto& term : terms_minus) sum += term.product;
  return sum;
}

BigInt PartitionReport::total_plus() const {
  BigInt sum = 0;
  for (const auto& term : terms_plus) sum += term.product;
  return sum;
}

PartitionReport partition_report(int t) {
  if (t < 0) throw std::invalid_argument("negative step index");
  BiRadialProfile u = u_initial();
  while (u.t < t) u = u_step(u);
  PartitionReport report{t, fib(4LL * t - 1), fib(4LL * t + 1), {}, {}};
  for (int s = u.values.min_class(); s <= u.values.max_class(); ++s) {
    PartitionTerm term{s, class_weight(s), u.at(s), 0};
    term.product = term.weight * term.value;
    (is_odd(s) ? report.terms_minus : report.terms_plus).push_back(std::move(term));
  }
  return report;
}

NotSymmetric::NotSymmetric(VertexId first, VertexId second, BigInt first_value, BigInt second_value)
    : Error("vector is not symmetric: entry " + to_decimal(first_value) + " at " + first.to_string() +
            " but " + to_decimal(second_value) + " at " + second.to_string() + " in the same class"),
      first_(std::move(first)),
      second_(std::move(second)) {}

int biradial_class(const VertexId& z) {
  if (z.is_base()) return 0;
  const int d = static_cast<int>(z.depth());
  return z.letter(0) == 0 ? -d : d;
}

namespace {

template <typename ClassOf>
TreeVector expand_by_class(int radius, const OracleLimits& limits, ClassOf&& value_of) {
  TreeVector out;
  for (const auto& z : ball(VertexId::base(), radius, limits.ball_cap)) out.set(z, value_of(z));
  return out;
}

// Values per class over ball(base, a.radius()), or NotSymmetric on the first conflict.
template <typename ClassOf>
std::map<int, BigInt> collect_classes(const TreeVector& a, const OracleLimits& limits, ClassOf&& class_of) {
  std::map<int, std::pair<VertexId, BigInt>> seen;
  for (const auto& z : ball(VertexId::base(), static_cast<int>(a.radius()), limits.ball_cap)) {
    BigInt value = a.at(z);
    auto [it, inserted] = seen.try_emplace(class_of(z), z, value);
    if (!inserted && it->second.second != value) {
      throw NotSymmetric(it->second.first, z, it->second.second, value);
    }
  }
  std::map<int, BigInt> out;
  for (auto& [c, entry] : seen) out.emplace(c, std::move(entry.second));
  return out;
}

}  // namespace

TreeVector expand_radial(const RadialProfile& p, const OracleLimits& limits) {
  if (p.t > limits.oracle_cap) throw OracleCapExceeded(p.t, limits.oracle_cap);
  const int radius = static_cast<int>(p.values.size()) - 1;
  return expand_by_class(std::max(radius, 0), limits, [&](const VertexId& z) {
    return z.depth() < p.values.size() ? p.values[z.depth()] : BigInt(0);
  });
}

TreeVector expand_classes(const ClassValues& values, const OracleLimits& limits) {
  if (values.empty()) return {};
  const int radius = std::max(-values.min_class(), values.max_class());
  return expand_by_class(std::max(radius, 0), limits,
                         [&](const VertexId& z) { return values.at(biradial_class(z)); });
}

TreeVector expand_biradial(const BiRadialProfile& u, const OracleLimits& limits) {
  if (2 * u.t > limits.oracle_cap) throw OracleCapExceeded(2 * u.t, limits.oracle_cap);
  return expand_classes(u.values, limits);
}

RadialProfile compress_radial(const TreeVector& a, const OracleLimits& limits) {
  auto classes = collect_classes(a, limits, [](const VertexId& z) { return static_cast<int>(z.depth()); });
  RadialProfile p{static_cast<int>(a.radius()), {}};
  for (int d = 0; d <= p.t; ++d) p.values.push_back(classes.count(d) ? classes[d] : BigInt(0));
  return p;
}

ClassValues compress_classes(const TreeVector& a, const OracleLimits& limits) {
  auto classes = collect_classes(a, limits, biradial_class);
  const int r = static_cast<int>(a.radius());
  std::vector<BigInt> dense;
  for (int s = -r; s <= r; ++s) dense.push_back(classes.count(s) ? classes[s] : BigInt(0));
  return ClassValues(-r, std::move(dense));
}

BiRadialProfile compress_biradial(const TreeVector& a, int t, const OracleLimits& limits) {
  return {t, compress_classes(a, limits)};
}

}  // namespace fibquiver

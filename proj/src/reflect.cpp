#include "fibquiver/reflect.hpp"

#include <set>
#include <utility>
#include <vector>

#include "fibquiver/errors.hpp"

namespace fibquiver {

BigInt TreeVector::at(const VertexId& v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? BigInt(0) : it->second;
}

void TreeVector::set(const VertexId& v, BigInt value) {
  if (value == 0) {
    entries_.erase(v);
  } else {
    entries_.insert_or_assign(v, std::move(value));
  }
}

void TreeVector::add_at(const VertexId& v, const BigInt& delta) {
  if (delta == 0) return;
  auto [it, inserted] = entries_.try_emplace(v, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) entries_.erase(it);
  }
}

std::size_t TreeVector::radius() const {
  std::size_t r = 0;
  for (const auto& [v, value] : entries_) r = std::max(r, v.depth());
  return r;
}

void TreeVector::require_same_base(const TreeVector& other) const {
  if (base_ != other.base_) {
    throw BaseMismatch("tree vectors are based at " + base_.to_string() + " and " +
                       other.base_.to_string() + "; rebase first");
  }
}

TreeVector& TreeVector::operator+=(const TreeVector& other) {
  require_same_base(other);
  for (const auto& [v, value] : other.entries_) add_at(v, value);
  return *this;
}

TreeVector& TreeVector::operator-=(const TreeVector& other) {
  require_same_base(other);
  for (const auto& [v, value] : other.entries_) add_at(v, -value);
  return *this;
}

TreeVector operator+(TreeVector a, const TreeVector& b) { return a += b; }
TreeVector operator-(TreeVector a, const TreeVector& b) { return a -= b; }

TreeVector operator-(const TreeVector& a) {
  TreeVector out(a.base());
  for (const auto& [v, value] : a.entries()) out.set(v, -value);
  return out;
}

bool equals(const TreeVector& a, const TreeVector& b) {
  if (a.base() != b.base()) {
    throw BaseMismatch("cannot compare vectors based at " + a.base().to_string() + " and " +
                       b.base().to_string());
  }
  return a.entries() == b.entries();
}

TreeVector unit(const VertexId& x) {
  TreeVector a;
  a.set(x, 1);
  return a;
}

TreeVector edge_unit(const VertexId& x, const VertexId& y) {
  if (!are_neighbors(x, y)) throw NotNeighbors(x.to_string() + " and " + y.to_string() + " are not neighbours");
  TreeVector a;
  a.set(x, 1);
  a.set(y, 1);
  return a;
}

namespace {

BigInt reflected_value(const TreeVector& a, const VertexId& y) {
  BigInt value = -a.at(y);
  for (const auto& n : neighbors(y)) value += a.at(n);
  return value;
}

void check_limits(int t, int radius, const OracleLimits& limits) {
  if (t < 0) throw std::invalid_argument("negative step index");
  if (t > limits.oracle_cap) throw OracleCapExceeded(t, limits.oracle_cap);
  if (radius > limits.ball_cap) {
    throw RadiusTooLarge("support radius " + std::to_string(radius) + " exceeds the ball cap " +
                         std::to_string(limits.ball_cap));
  }
}

TreeVector alternate(TreeVector a, const VertexId& x, int t) {
  // Step i -> i+1 reflects at odd distances when i is even, even distances when i is odd.
  for (int i = 0; i < t; ++i) a = big_sigma(a, x, i % 2 == 0 ? Parity::odd : Parity::even);
  return a;
}

}  // namespace

TreeVector sigma(const TreeVector& a, const VertexId& y) {
  TreeVector out = a;
  out.set(y, reflected_value(a, y));
  return out;
}

TreeVector big_sigma(const TreeVector& a, const VertexId& x, Parity parity) {
  std::set<VertexId> sites;
  const std::size_t want = (parity == Parity::even) ? 0 : 1;
  for (const auto& [v, value] : a.entries()) {
    if (distance(x, v) % 2 == want) sites.insert(v);
    for (const auto& n : neighbors(v)) {
      if (distance(x, n) % 2 == want) sites.insert(n);
    }
  }
  std::vector<std::pair<VertexId, BigInt>> updates;
  updates.reserve(sites.size());
  for (const auto& y : sites) updates.emplace_back(y, reflected_value(a, y));
  TreeVector out = a;
  for (auto& [y, value] : updates) out.set(y, std::move(value));
  return out;
}

TreeVector s_vec_at(const VertexId& x, int t, const OracleLimits& limits) {
  check_limits(t, t, limits);
  return alternate(unit(x), x, t);
}

TreeVector r_vec_at(const VertexId& x, const VertexId& y, int t, const OracleLimits& limits) {
  check_limits(t, t + 1, limits);
  return alternate(edge_unit(x, y), x, t);
}

TreeVector s_vec(int t, const OracleLimits& limits) { return s_vec_at(VertexId::base(), t, limits); }

TreeVector r_vec(int t, const OracleLimits& limits) {
  return r_vec_at(VertexId::base(), VertexId::base().child(0), t, limits);
}

ParitySums parity_sums(const TreeVector& a, long long t, const VertexId& center) {
  ParitySums sums{0, 0};
  const long long t_mod = ((t % 2) + 2) % 2;
  for (const auto& [v, value] : a.entries()) {
    if (static_cast<long long>(distance(center, v) % 2) == t_mod) {
      sums.plus += value;
    } else {
      sums.minus += value;
    }
  }
  return sums;
}

TreeVector rebase(const TreeVector& a, const VertexId& new_base) {
  if (new_base.is_base()) return a;
  const VertexId root = absolute_from(new_base, a.base());
  TreeVector out(root);
  for (const auto& [v, value] : a.entries()) {
    out.set(relative_to(absolute_from(v, a.base()), root), value);
  }
  return out;
}

}  // namespace fibquiver

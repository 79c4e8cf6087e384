#pragma once

// Finite-support integer vectors on the 3-regular tree and the reflections
// acting on them. This is the brute-force reference the compressed profiles
// are checked against.

#include <map>

#include "fibquiver/bigint.hpp"
#include "fibquiver/tree.hpp"

namespace fibquiver {

inline constexpr int kDefaultOracleCap = 12;

/// Size limits for the vertex-by-vertex computations.
struct OracleLimits {
  int oracle_cap = kDefaultOracleCap;
  int ball_cap = kDefaultBallCap;
};

/// An element of K_0(T). Keys are vertex names relative to `base()`, which is
/// itself named relative to the canonical base vertex. Zero entries are never
/// stored.
class TreeVector {
 public:
  using Entries = std::map<VertexId, BigInt>;

  TreeVector() = default;
  explicit TreeVector(VertexId base) : base_(std::move(base)) {}

  const VertexId& base() const noexcept { return base_; }
  const Entries& entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  BigInt at(const VertexId& v) const;
  void set(const VertexId& v, BigInt value);
  void add_at(const VertexId& v, const BigInt& delta);

  /// Largest distance from the frame root to a supported vertex (0 if zero).
  std::size_t radius() const;

  TreeVector& operator+=(const TreeVector& other);
  TreeVector& operator-=(const TreeVector& other);

  /// Structural equality; vectors on different bases compare unequal.
  friend bool operator==(const TreeVector&, const TreeVector&) = default;

 private:
  void require_same_base(const TreeVector& other) const;

  VertexId base_;
  Entries entries_;
};

TreeVector operator+(TreeVector a, const TreeVector& b);
TreeVector operator-(TreeVector a, const TreeVector& b);
TreeVector operator-(const TreeVector& a);

/// Exact equality; throws BaseMismatch when the bases differ.
bool equals(const TreeVector& a, const TreeVector& b);

/// s(x).
TreeVector unit(const VertexId& x);
/// r(x, y) = s(x) + s(y); throws NotNeighbors.
TreeVector edge_unit(const VertexId& x, const VertexId& y);

/// sigma^y: replaces a_y by -a_y + sum of a over the neighbours of y.
TreeVector sigma(const TreeVector& a, const VertexId& y);

/// Product of sigma^y over all y with d(x, y) of the given parity. Only
/// vertices within distance 1 of the support can move; they are pairwise
/// non-adjacent, so all updates read the input vector.
TreeVector big_sigma(const TreeVector& a, const VertexId& x, Parity parity);

/// s_t(x): s(x) followed by t alternating passes, odd distances first.
TreeVector s_vec_at(const VertexId& x, int t, const OracleLimits& limits = {});
/// r_t(x, y): r(x, y) followed by the same passes around x.
TreeVector r_vec_at(const VertexId& x, const VertexId& y, int t, const OracleLimits& limits = {});

/// s_t(base).
TreeVector s_vec(int t, const OracleLimits& limits = {});
/// r_t(base, y) with y the child labelled 0.
TreeVector r_vec(int t, const OracleLimits& limits = {});

struct ParitySums {
  BigInt minus;  // entries at d(center, z) of parity opposite to t
  BigInt plus;   // entries at d(center, z) with the parity of t

  friend bool operator==(const ParitySums&, const ParitySums&) = default;
};

ParitySums parity_sums(const TreeVector& a, long long t, const VertexId& center = {});

/// Same function on T, renamed relative to `new_base` (given in a's names).
TreeVector rebase(const TreeVector& a, const VertexId& new_base);

}  // namespace fibquiver

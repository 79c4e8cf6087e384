#pragma once

// Dimension-vector checks of the filtrations and exact sequences between
// Fibonacci modules, and the collapse from the tree to 3-Kronecker pairs.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibquiver/fibcore.hpp"
#include "fibquiver/reflect.hpp"

namespace fibquiver {

/// A non-backtracking walk x_0, ..., x_t with optional end anchors
/// x_{-1} (before) and x_{t+1} (after).
struct PathSpec {
  std::vector<VertexId> vertices;
  std::optional<VertexId> before;
  std::optional<VertexId> after;

  /// Full walk, anchors included.
  std::vector<VertexId> walk() const;
  /// Throws std::invalid_argument unless consecutive vertices are neighbours
  /// and the walk never steps straight back.
  void validate() const;
};

/// Always-child-0 walk from the base: base, 0, 00, ... (length + 1 vertices).
std::vector<VertexId> leftmost_walk(int length);
/// Walk from `start` choosing, at each step, among the neighbours other than
/// the previous vertex by `choices[i]` (0, 1 or 2 for the first step).
std::vector<VertexId> steered_walk(const VertexId& start, const std::vector<int>& choices);
/// Non-backtracking random walk from a random vertex of depth <= 2.
std::vector<VertexId> random_walk(int length, std::uint64_t seed);

/// Walks of `length` steps of several shapes: leftmost from the base, a
/// zigzag, one starting away from the base, and a seeded random walk.
std::vector<std::vector<VertexId>> sample_walks(int length);
/// Neighbouring pairs (x, y) in different positions relative to the base.
std::vector<std::pair<VertexId, VertexId>> sample_edges();

/// x_0..x_t from a walk of t + 1 vertices.
PathSpec path_from_walk(const std::vector<VertexId>& walk);
/// x_{-1}, x_0..x_t, x_{t+1} from a walk of t + 3 vertices.
PathSpec anchored_path_from_walk(const std::vector<VertexId>& walk);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

struct IdentityReport {
  std::string suite;
  long long t = 0;
  std::vector<IdentityCheck> checks;

  bool passed() const;
  /// First failing check, if any.
  const IdentityCheck* first_failure() const;

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// For neighbours x, y with remaining neighbours y', y'':
///   s_t(x) = s_{t-1}(y) + r_t(x, y)   and   r_t(x, y) = s_{t-1}(y') + r_{t-1}(y'', x).
IdentityReport check_prop41(int t, const VertexId& x, const VertexId& y, const OracleLimits& limits = {});
IdentityReport check_prop41(int t, const OracleLimits& limits = {});

/// s_t(x_t) = s_0(x_0) + sum_{i=1..t} r_i(x_i, x_{i-1}) along the path, and
/// f_{2t} = sum_{i=1..t} f_{2i-1}.
IdentityReport check_cor42(int t, const PathSpec& path, const OracleLimits& limits = {});
IdentityReport check_cor42(int t, const OracleLimits& limits = {});

/// r_{t+1}(x_t, x_{t+1}) = r_0(x_{-1}, x_0) + sum_{i=0..t} s_i(z_i) with z_i
/// the third neighbour of x_i, and f_{2t+1} = 1 + sum_{i=1..t} f_{2i}.
IdentityReport check_cor43(int t, const PathSpec& path, const OracleLimits& limits = {});
IdentityReport check_cor43(int t, const OracleLimits& limits = {});

/// Both summation formulas for every t in [0, t_max], by running sums.
IdentityReport check_scalar_corollaries(long long t_max);

/// p_{n-1} + p_{n+1} = 3 p_n for p_n = fib_pair(2n, up) and for the odd
/// pairs fib_pair(2n+1, up), over n in [-n_max, n_max].
IdentityReport check_pair_recursion(long long n_max);

/// Radial and bi-radial profiles against the vertex-by-vertex vectors at step
/// t: expand(profile) = oracle vector and compress(oracle vector) = profile,
/// for s_t and r_{2 floor(t/2)}; for odd t also the first half of the u step
/// against r_t.
IdentityReport check_oracle(int t, const OracleLimits& limits = {});

/// radial_sums(s_t) = (f_2t, f_2t+2) and u_sums(u_t) = (f_4t-1, f_4t+1) for t
/// in [0, t_max].
IdentityReport check_profile_sums(int t_max);

/// Over |x|, |y| <= max: classify_pair accepts exactly the points with
/// |q| = 1, even exactly when q = 1, and every witness names its point.
IdentityReport check_classification_box(long long max);

/// f_{t+2} = 3f_t - f_{t-2} and f_{-t} = (-1)^{t+1} f_t for t in [from, to].
IdentityReport check_recursions(FibIndex from, FibIndex to);

/// sigma_plus and sigma_minus are mutually inverse and preserve q on `count`
/// random points with coordinates up to 10^12 in absolute value.
IdentityReport check_sigma_moves(int count, std::uint64_t seed);

/// The parity sums of a around `center` as a dimension pair.
DimPair pushdown(const TreeVector& a, long long t, const VertexId& center = {});

}  // namespace fibquiver

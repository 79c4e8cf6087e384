#pragma once

// Addressing and navigation on the infinite 3-regular tree.
//
// A vertex is named by the non-backtracking path that reaches it from a base
// vertex: the first letter picks one of the three neighbours of the base
// (0, 1, 2), every later letter one of the two vertices further away (0, 1).
// The empty word is the base itself.

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fibquiver/bigint.hpp"

namespace fibquiver {

inline constexpr int kDegree = 3;
inline constexpr int kDefaultBallCap = 16;

class VertexId {
 public:
  VertexId() = default;

  /// Accepts "", "base" or "." for the base; otherwise a word over {0,1,2}
  /// whose letters after the first are 0 or 1. Throws std::invalid_argument.
  static VertexId parse(std::string_view text);

  static VertexId base() { return {}; }

  bool is_base() const noexcept { return path_.empty(); }
  std::size_t depth() const noexcept { return path_.size(); }
  std::string_view path() const noexcept { return path_; }
  int letter(std::size_t i) const { return path_[i] - '0'; }

  VertexId parent() const;
  VertexId child(int letter) const;

  /// "base" for the empty word, the letters otherwise.
  std::string to_string() const;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend bool operator==(const VertexId&, const VertexId&) = default;

 private:
  explicit VertexId(std::string path) : path_(std::move(path)) {}

  std::string path_;
};

enum class Parity { even, odd };

inline Parity parity_of(long long n) { return (n % 2 == 0) ? Parity::even : Parity::odd; }
std::string_view to_string(Parity p);

/// Parent first (if any), then children by letter. The base lists its three
/// children. This order is also the cyclic order used when re-rooting.
std::array<VertexId, kDegree> neighbors(const VertexId& v);

bool are_neighbors(const VertexId& v, const VertexId& w);

/// Tree metric: |v| + |w| - 2 |common prefix|.
std::size_t distance(const VertexId& v, const VertexId& w);

/// The vertices of the unique path from v to w, both ends included.
std::vector<VertexId> tree_path(const VertexId& v, const VertexId& w);

/// All vertices within `radius` of `center` in breadth-first order.
/// Throws RadiusTooLarge when radius > cap.
std::vector<VertexId> ball(const VertexId& center, int radius, int cap = kDefaultBallCap);

struct SideCounts {
  BigInt away;     // |T_s(x,y)|: distance s, path avoids y
  BigInt through;  // |T'_s(x,y)|: distance s, path passes through y

  friend bool operator==(const SideCounts&, const SideCounts&) = default;
};

/// (2^s, 2^{s-1}) for neighbours x, y and s >= 1. When s <= cap the counts
/// are also obtained by enumerating ball(x, s) and must agree.
SideCounts side_counts(const VertexId& x, const VertexId& y, int s, int cap = kDefaultBallCap);

/// Bipartite orientation with `base` a sink for even parity and a source for odd.
struct Orientation {
  VertexId base;
  Parity t_parity = Parity::even;

  bool is_sink(const VertexId& v) const;
  /// Same orientation of the whole tree (there are only two).
  bool same_as(const Orientation& other) const { return is_sink(other.base) == other.is_sink(other.base); }

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

// Re-rooting. Vertex names depend on the chosen base; `relative_to` renames a
// vertex (given relative to the canonical base) as seen from `root`, and
// `absolute_from` inverts it. Names seen from a root r != base are assigned by
// the cyclic neighbour order, with the neighbour of r towards the canonical
// base receiving label r.letter(0).

VertexId relative_to(const VertexId& v, const VertexId& root);
VertexId absolute_from(const VertexId& local, const VertexId& root);

}  // namespace fibquiver

template <>
struct std::hash<fibquiver::VertexId> {
  std::size_t operator()(const fibquiver::VertexId& v) const noexcept {
    return std::hash<std::string_view>{}(v.path());
  }
};

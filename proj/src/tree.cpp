#include "fibquiver/tree.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "fibquiver/errors.hpp"

namespace fibquiver {

VertexId VertexId::parse(std::string_view text) {
  if (text.empty() || text == "base" || text == ".") return {};
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char max_letter = (i == 0) ? '2' : '1';
    if (text[i] < '0' || text[i] > max_letter) {
      throw std::invalid_argument("invalid vertex address '" + std::string(text) + "'");
    }
  }
  return VertexId(std::string(text));
}

VertexId VertexId::parent() const {
  if (is_base()) throw std::logic_error("the base vertex has no parent");
  return VertexId(path_.substr(0, path_.size() - 1));
}

VertexId VertexId::child(int letter) const {
  const int limit = is_base() ? kDegree : kDegree - 1;
  if (letter < 0 || letter >= limit) throw std::out_of_range("child letter out of range");
  std::string p = path_;
  p.push_back(static_cast<char>('0' + letter));
  return VertexId(std::move(p));
}

std::string VertexId::to_string() const { return is_base() ? "base" : path_; }

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::array<VertexId, kDegree> neighbors(const VertexId& v) {
  if (v.is_base()) return {v.child(0), v.child(1), v.child(2)};
  return {v.parent(), v.child(0), v.child(1)};
}

namespace {

std::size_t common_prefix(const VertexId& v, const VertexId& w) {
  const auto a = v.path();
  const auto b = w.path();
  const auto n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

std::size_t index_in(const std::array<VertexId, kDegree>& list, const VertexId& v) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == v) return i;
  }
  throw std::logic_error("vertex is not a neighbour");
}

}  // namespace

bool are_neighbors(const VertexId& v, const VertexId& w) { return distance(v, w) == 1; }

std::size_t distance(const VertexId& v, const VertexId& w) {
  return v.depth() + w.depth() - 2 * common_prefix(v, w);
}

std::vector<VertexId> tree_path(const VertexId& v, const VertexId& w) {
  const std::size_t lca = common_prefix(v, w);
  std::vector<VertexId> up;
  for (VertexId cur = v; cur.depth() > lca; cur = cur.parent()) up.push_back(cur);
  std::vector<VertexId> down;
  for (VertexId cur = w; cur.depth() > lca; cur = cur.parent()) down.push_back(cur);
  VertexId meet = v;
  while (meet.depth() > lca) meet = meet.parent();
  up.push_back(meet);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<VertexId> ball(const VertexId& center, int radius, int cap) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  if (radius > cap) {
    throw RadiusTooLarge("ball radius " + std::to_string(radius) + " exceeds the cap " +
                         std::to_string(cap));
  }
  struct Item {
    VertexId v;
    VertexId from;
    int dist;
  };
  std::vector<VertexId> out{center};
  std::deque<Item> queue{{center, center, 0}};
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    if (item.dist == radius) continue;
    for (auto& n : neighbors(item.v)) {
      if (item.dist > 0 && n == item.from) continue;
      out.push_back(n);
      queue.push_back({n, item.v, item.dist + 1});
    }
  }
  return out;
}

SideCounts side_counts(const VertexId& x, const VertexId& y, int s, int cap) {
  if (!are_neighbors(x, y)) throw NotNeighbors(x.to_string() + " and " + y.to_string() + " are not neighbours");
  if (s < 1) throw std::invalid_argument("side_counts needs s >= 1");
  SideCounts counts{pow2(static_cast<unsigned long>(s)), pow2(static_cast<unsigned long>(s - 1))};
  if (s <= cap) {
    SideCounts seen{0, 0};
    for (const auto& z : ball(x, s, cap)) {
      if (distance(x, z) != static_cast<std::size_t>(s)) continue;
      // The path x..z passes through y iff y is one step closer to z.
      if (distance(y, z) + 1 == static_cast<std::size_t>(s)) {
        ++seen.through;
      } else {
        ++seen.away;
      }
    }
    if (seen != counts) throw std::logic_error("side_counts enumeration disagrees with 2^s");
  }
  return counts;
}

bool Orientation::is_sink(const VertexId& v) const {
  const bool base_sink = (t_parity == Parity::even);
  return (distance(base, v) % 2 == 0) ? base_sink : !base_sink;
}

VertexId relative_to(const VertexId& v, const VertexId& root) {
  if (root.is_base()) return v;
  const auto path = tree_path(root, v);
  std::string word;
  if (path.size() > 1) {
    // neighbors(root)[0] is the parent, i.e. the direction of the canonical base.
    const std::size_t j = index_in(neighbors(root), path[1]);
    word.push_back(static_cast<char>('0' + (j + root.letter(0)) % kDegree));
  }
  for (std::size_t k = 1; k + 1 < path.size(); ++k) {
    const auto around = neighbors(path[k]);
    const std::size_t i = index_in(around, path[k - 1]);
    const std::size_t j = index_in(around, path[k + 1]);
    word.push_back(static_cast<char>('0' + (j + kDegree - i - 1) % kDegree));
  }
  return VertexId::parse(word);
}

VertexId absolute_from(const VertexId& local, const VertexId& root) {
  if (root.is_base() || local.is_base()) return root.is_base() ? local : root;
  const std::size_t first = (static_cast<std::size_t>(local.letter(0)) + kDegree - root.letter(0)) % kDegree;
  VertexId prev = root;
  VertexId cur = neighbors(root)[first];
  for (std::size_t k = 1; k < local.depth(); ++k) {
    const auto around = neighbors(cur);
    const std::size_t i = index_in(around, prev);
    VertexId next = around[(i + 1 + local.letter(k)) % kDegree];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace fibquiver

#include "fibquiver/catident.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

#include "fibquiver/errors.hpp"
#include "fibquiver/profiles.hpp"

namespace fibquiver {

std::vector<VertexId> PathSpec::walk() const {
  std::vector<VertexId> out;
  if (before) out.push_back(*before);
  out.insert(out.end(), vertices.begin(), vertices.end());
  if (after) out.push_back(*after);
  return out;
}

void PathSpec::validate() const {
  const auto w = walk();
  if (vertices.empty()) throw std::invalid_argument("path has no vertices");
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!are_neighbors(w[i - 1], w[i])) {
      throw std::invalid_argument("path steps from " + w[i - 1].to_string() + " to non-neighbour " +
                                  w[i].to_string());
    }
    if (i >= 2 && w[i] == w[i - 2]) {
      throw std::invalid_argument("path backtracks at " + w[i - 1].to_string());
    }
  }
}

std::vector<VertexId> leftmost_walk(int length) {
  std::vector<VertexId> out{VertexId::base()};
  for (int i = 0; i < length; ++i) out.push_back(out.back().child(0));
  return out;
}

namespace {

// The neighbours of v other than `from`, in canonical order.
std::vector<VertexId> onward(const VertexId& v, const VertexId& from) {
  std::vector<VertexId> out;
  for (const auto& n : neighbors(v)) {
    if (n != from) out.push_back(n);
  }
  return out;
}

VertexId third_neighbor(const VertexId& x, const VertexId& a, const VertexId& b) {
  for (const auto& n : neighbors(x)) {
    if (n != a && n != b) return n;
  }
  throw std::logic_error("no third neighbour");
}

}  // namespace

std::vector<VertexId> steered_walk(const VertexId& start, const std::vector<int>& choices) {
  std::vector<VertexId> out{start};
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (i == 0) {
      out.push_back(neighbors(start).at(static_cast<std::size_t>(choices[0])));
    } else {
      out.push_back(onward(out[i], out[i - 1]).at(static_cast<std::size_t>(choices[i])));
    }
  }
  return out;
}

std::vector<VertexId> random_walk(int length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto starts = ball(VertexId::base(), 2);
  std::vector<int> choices;
  for (int i = 0; i < length; ++i) {
    std::uniform_int_distribution<int> pick(0, i == 0 ? 2 : 1);
    choices.push_back(pick(rng));
  }
  std::uniform_int_distribution<std::size_t> start(0, starts.size() - 1);
  return steered_walk(starts[start(rng)], choices);
}

std::vector<std::vector<VertexId>> sample_walks(int length) {
  std::vector<int> zigzag, drift;
  for (int i = 0; i < length; ++i) {
    zigzag.push_back(i == 0 ? 1 : i % 2);
    drift.push_back(i == 0 ? 0 : (i % 3 == 1 ? 1 : 0));
  }
  return {leftmost_walk(length), steered_walk(VertexId::base(), zigzag), steered_walk(VertexId::parse("21"), drift),
          random_walk(length, 0x5eedULL + static_cast<std::uint64_t>(length))};
}

std::vector<std::pair<VertexId, VertexId>> sample_edges() {
  const VertexId base = VertexId::base();
  return {{base, base.child(0)}, {base, base.child(2)}, {VertexId::parse("1"), base},
          {VertexId::parse("01"), VertexId::parse("010")}};
}

PathSpec path_from_walk(const std::vector<VertexId>& walk) {
  PathSpec p{walk, std::nullopt, std::nullopt};
  p.validate();
  return p;
}

PathSpec anchored_path_from_walk(const std::vector<VertexId>& walk) {
  if (walk.size() < 3) throw std::invalid_argument("anchored path needs at least 3 vertices");
  PathSpec p{{walk.begin() + 1, walk.end() - 1}, walk.front(), walk.back()};
  p.validate();
  return p;
}

bool IdentityReport::passed() const { return first_failure() == nullptr; }

const IdentityCheck* IdentityReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

DimPair pushdown(const TreeVector& a, long long t, const VertexId& center) {
  auto sums = parity_sums(a, t, center);
  return {std::move(sums.minus), std::move(sums.plus)};
}

namespace {

std::string describe(const DimPair& p) { return "[" + to_decimal(p.x) + "," + to_decimal(p.y) + "]"; }

IdentityCheck vector_check(std::string name, const TreeVector& lhs, const TreeVector& rhs) {
  IdentityCheck c{std::move(name), equals(lhs, rhs), {}};
  if (!c.passed) {
    TreeVector diff = lhs - rhs;
    const auto& [v, value] = *diff.entries().begin();
    c.detail = "sides differ by " + to_decimal(value) + " at " + v.to_string();
  } else {
    c.detail = "support " + std::to_string(lhs.support_size());
  }
  return c;
}

IdentityCheck pair_check(std::string name, const DimPair& lhs, const DimPair& rhs) {
  return {std::move(name), lhs == rhs, describe(lhs) + (lhs == rhs ? " = " : " != ") + describe(rhs)};
}

IdentityCheck orientation_check(std::string name, const Orientation& reference,
                                const std::vector<Orientation>& others) {
  for (const auto& o : others) {
    if (!reference.same_as(o)) {
      return {std::move(name), false,
              "orientation at " + o.base.to_string() + " (" + std::string(to_string(o.t_parity)) +
                  ") disagrees"};
    }
  }
  return {std::move(name), true, std::to_string(others.size()) + " orientations agree"};
}

// Re-expresses a vector in the frame rooted at `root` (a canonical name).
TreeVector framed(const TreeVector& a, const VertexId& root) { return rebase(a, root); }

}  // namespace

IdentityReport check_prop41(int t, const VertexId& x, const VertexId& y, const OracleLimits& limits) {
  if (t < 1) throw std::invalid_argument("check_prop41 needs t >= 1");
  if (!are_neighbors(x, y)) throw NotNeighbors(x.to_string() + " and " + y.to_string() + " are not neighbours");
  const auto others = onward(x, y);
  const VertexId& y1 = others[0];
  const VertexId& y2 = others[1];

  const TreeVector sx = s_vec_at(x, t, limits);
  const TreeVector sy = s_vec_at(y, t - 1, limits);
  const TreeVector rxy = r_vec_at(x, y, t, limits);
  const TreeVector sy1 = s_vec_at(y1, t - 1, limits);
  const TreeVector ry2x = r_vec_at(y2, x, t - 1, limits);

  IdentityReport report{"prop41", t, {}};
  report.checks.push_back(
      vector_check("s_t(x) = s_{t-1}(y) + r_t(x,y)", framed(sx, x), framed(sy, x) + framed(rxy, x)));
  report.checks.push_back(
      vector_check("r_t(x,y) = s_{t-1}(y') + r_{t-1}(y'',x)", framed(rxy, x), framed(sy1, x) + framed(ry2x, x)));

  const Parity pt = parity_of(t);
  const Parity pt1 = parity_of(t - 1);
  report.checks.push_back(orientation_check("orientation", {x, pt}, {{y, pt1}, {y1, pt1}, {y2, pt1}}));

  const DimPair dsx = pushdown(sx, t, x);
  const DimPair dsy = pushdown(sy, t - 1, y);
  const DimPair drxy = pushdown(rxy, t, x);
  report.checks.push_back(pair_check("dim s_t(x) = dim s_{t-1}(y) + dim r_t(x,y)", dsx, dsy + drxy));
  report.checks.push_back(pair_check("dim r_t(x,y) = dim s_{t-1}(y') + dim r_{t-1}(y'',x)", drxy,
                                     pushdown(sy1, t - 1, y1) + pushdown(ry2x, t - 1, y2)));
  report.checks.push_back(pair_check("dim s_t(x) = [f_2t, f_2t+2]", dsx, fib_pair(2LL * t, Direction::up)));
  report.checks.push_back(pair_check("dim r_t(x,y) = [f_2t-1, f_2t+1]", drxy, fib_pair(2LL * t - 1, Direction::up)));
  return report;
}

IdentityReport check_prop41(int t, const OracleLimits& limits) {
  return check_prop41(t, VertexId::base(), VertexId::base().child(0), limits);
}

IdentityReport check_cor42(int t, const PathSpec& path, const OracleLimits& limits) {
  if (t < 1) throw std::invalid_argument("check_cor42 needs t >= 1");
  path.validate();
  if (path.vertices.size() != static_cast<std::size_t>(t) + 1) {
    throw std::invalid_argument("check_cor42 needs a path x_0..x_t");
  }
  const auto& x = path.vertices;
  const VertexId& frame = x.front();

  TreeVector rhs = framed(unit(x[0]), frame);
  std::vector<Orientation> orientations;
  for (int i = 1; i <= t; ++i) {
    rhs += framed(r_vec_at(x[i], x[i - 1], i, limits), frame);
    orientations.push_back({x[i], parity_of(i)});
  }
  const TreeVector lhs = framed(s_vec_at(x[t], t, limits), frame);

  IdentityReport report{"cor42", t, {}};
  report.checks.push_back(vector_check("s_t(x_t) = s_0(x_0) + sum r_i(x_i,x_{i-1})", lhs, rhs));
  report.checks.push_back(orientation_check("orientation", {x[0], Parity::even}, orientations));
  BigInt sum = 0;
  for (int i = 1; i <= t; ++i) sum += fib(2LL * i - 1);
  const BigInt f = fib(2LL * t);
  report.checks.push_back({"f_2t = sum f_2i-1", f == sum, to_decimal(f) + " vs " + to_decimal(sum)});
  return report;
}

IdentityReport check_cor42(int t, const OracleLimits& limits) {
  return check_cor42(t, path_from_walk(leftmost_walk(t)), limits);
}

IdentityReport check_cor43(int t, const PathSpec& path, const OracleLimits& limits) {
  if (t < 0) throw std::invalid_argument("check_cor43 needs t >= 0");
  path.validate();
  if (!path.before || !path.after || path.vertices.size() != static_cast<std::size_t>(t) + 1) {
    throw std::invalid_argument("check_cor43 needs a path x_{-1}, x_0..x_t, x_{t+1}");
  }
  const auto walk = path.walk();  // walk[i + 1] = x_i
  const VertexId& frame = path.vertices.front();

  TreeVector rhs = framed(edge_unit(*path.before, path.vertices[0]), frame);
  std::vector<Orientation> orientations{{*path.before, Parity::even}, {path.vertices[t], parity_of(t + 1)}};
  for (int i = 0; i <= t; ++i) {
    const VertexId z = third_neighbor(walk[i + 1], walk[i], walk[i + 2]);
    rhs += framed(s_vec_at(z, i, limits), frame);
    orientations.push_back({z, parity_of(i)});
  }
  const TreeVector lhs = framed(r_vec_at(path.vertices[t], *path.after, t + 1, limits), frame);

  IdentityReport report{"cor43", t, {}};
  report.checks.push_back(vector_check("r_{t+1}(x_t,x_{t+1}) = r_0(x_{-1},x_0) + sum s_i(z_i)", lhs, rhs));
  report.checks.push_back(orientation_check("orientation", {path.vertices[0], Parity::odd}, orientations));
  BigInt sum = 1;
  for (int i = 1; i <= t; ++i) sum += fib(2LL * i);
  const BigInt f = fib(2LL * t + 1);
  report.checks.push_back({"f_2t+1 = 1 + sum f_2i", f == sum, to_decimal(f) + " vs " + to_decimal(sum)});
  return report;
}

IdentityReport check_cor43(int t, const OracleLimits& limits) {
  return check_cor43(t, anchored_path_from_walk(leftmost_walk(t + 2)), limits);
}

IdentityReport check_scalar_corollaries(long long t_max) {
  IdentityReport report{"scalar", t_max, {}};
  IdentityCheck even{"f_2t = sum_{i=1..t} f_2i-1", true, {}};
  IdentityCheck odd{"f_2t+1 = 1 + sum_{i=1..t} f_2i", true, {}};
  if (t_max >= 0) {
    const auto f = fib_range(0, 2 * t_max + 1);  // f[k] = f_k
    BigInt odd_sum = 0;
    BigInt even_sum = 1;
    for (long long t = 0; t <= t_max; ++t) {
      if (t >= 1) {
        odd_sum += f[2 * t - 1];
        even_sum += f[2 * t];
      }
      if (even.passed && f[2 * t] != odd_sum) {
        even.passed = false;
        even.detail = "fails at t=" + std::to_string(t);
      }
      if (odd.passed && f[2 * t + 1] != even_sum) {
        odd.passed = false;
        odd.detail = "fails at t=" + std::to_string(t);
      }
    }
  }
  if (even.passed) even.detail = "t in [0," + std::to_string(t_max) + "]";
  if (odd.passed) odd.detail = "t in [0," + std::to_string(t_max) + "]";
  report.checks.push_back(std::move(even));
  report.checks.push_back(std::move(odd));
  return report;
}

IdentityReport check_pair_recursion(long long n_max) {
  IdentityReport report{"pair-recursion", n_max, {}};
  for (long long shift : {0LL, 1LL}) {
    IdentityCheck c{shift == 0 ? "p_{n-1} + p_{n+1} = 3 p_n (even pairs)"
                               : "p_{n-1} + p_{n+1} = 3 p_n (odd pairs)",
                    true, "n in [" + std::to_string(-n_max) + "," + std::to_string(n_max) + "]"};
    for (long long n = -n_max; n <= n_max && c.passed; ++n) {
      const DimPair lo = fib_pair(2 * (n - 1) + shift, Direction::up);
      const DimPair mid = fib_pair(2 * n + shift, Direction::up);
      const DimPair hi = fib_pair(2 * (n + 1) + shift, Direction::up);
      if (lo + hi != 3 * mid) {
        c.passed = false;
        c.detail = "fails at n=" + std::to_string(n);
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

namespace {

std::string describe(const std::vector<BigInt>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + to_decimal(values[i]);
  return out + "]";
}

std::string describe(const ClassValues& c) {
  return "from class " + std::to_string(c.min_class()) + " " + describe(c.dense());
}

template <typename T>
IdentityCheck value_check(std::string name, const T& lhs, const T& rhs) {
  IdentityCheck c{std::move(name), lhs == rhs, {}};
  c.detail = c.passed ? describe(lhs) : describe(lhs) + " != " + describe(rhs);
  return c;
}

// Collects the first failure of a scan over many cases into one check.
struct Scan {
  IdentityCheck check;
  void fail(const std::string& why) {
    if (!check.passed) return;
    check.passed = false;
    check.detail = why;
  }
};

}  // namespace

IdentityReport check_oracle(int t, const OracleLimits& limits) {
  if (t < 0) throw std::invalid_argument("check_oracle needs t >= 0");
  IdentityReport report{"oracle", t, {}};

  const RadialProfile p = radial_profile(t);
  const TreeVector s = s_vec(t, limits);
  report.checks.push_back(vector_check("expand(radial_t) = s_t", expand_radial(p, limits), s));
  report.checks.push_back(value_check("compress(s_t) = radial_t", compress_radial(s, limits).values, p.values));

  const int k = t / 2;
  const BiRadialProfile u = u_table(k).back();
  const TreeVector r = r_vec(2 * k, limits);
  report.checks.push_back(vector_check("expand(u_k) = r_2k", expand_biradial(u, limits), r));
  report.checks.push_back(value_check("compress(r_2k) = u_k", compress_biradial(r, k, limits).values, u.values));
  report.checks.push_back(
      vector_check("expand(compress(r_2k)) = r_2k", expand_classes(compress_classes(r, limits), limits), r));

  if (t % 2 == 1) {
    report.checks.push_back(
        value_check("half step of u_k = r_t", u_half_step(u), compress_classes(r_vec(t, limits), limits)));
  }
  return report;
}

IdentityReport check_profile_sums(int t_max) {
  IdentityReport report{"sums", t_max, {}};
  const std::string range = "t in [0," + std::to_string(t_max) + "]";
  Scan radial{{"radial_sums(s_t) = (f_2t, f_2t+2)", true, range}};
  Scan biradial{{"u_sums(u_t) = (f_4t-1, f_4t+1)", true, range}};
  if (t_max >= 0) {
    const auto f = fib_range(-1, 4LL * t_max + 1);  // f[k + 1] = f_k
    auto at = [&](long long k) -> const BigInt& { return f[static_cast<std::size_t>(k + 1)]; };
    RadialProfile p = radial_initial();
    BiRadialProfile u = u_initial();
    for (int t = 0; t <= t_max; ++t) {
      if (t > 0) {
        p = radial_step(p);
        u = u_step(u);
      }
      const auto rs = radial_sums(p);
      if (rs.minus != at(2LL * t) || rs.plus != at(2LL * t + 2)) radial.fail("fails at t=" + std::to_string(t));
      const auto us = u_sums(u);
      if (us.minus != at(4LL * t - 1) || us.plus != at(4LL * t + 1)) biradial.fail("fails at t=" + std::to_string(t));
    }
  }
  report.checks.push_back(std::move(radial.check));
  report.checks.push_back(std::move(biradial.check));
  return report;
}

IdentityReport check_classification_box(long long max) {
  IdentityReport report{"classify-box", max, {}};
  Scan agree{{"classify_pair accepts exactly |q| = 1, even iff q = 1", true, {}}};
  Scan witness{{"witness names the point", true, {}}};
  long long accepted = 0;
  for (long long x = -max; x <= max; ++x) {
    for (long long y = -max; y <= max; ++y) {
      const DimPair p{BigInt(static_cast<long>(x)), BigInt(static_cast<long>(y))};
      const long long q = x * x + y * y - 3 * x * y;
      const PairClass c = classify_pair(p);
      const PairKind expected = q == 1 ? PairKind::EvenPair : q == -1 ? PairKind::OddPair : PairKind::NotAPair;
      if (c.kind != expected) {
        agree.fail("(" + std::to_string(x) + "," + std::to_string(y) + ") q=" + std::to_string(q) + " classified " +
                   std::string(to_string(c.kind)));
      }
      if (c.kind == PairKind::NotAPair) continue;
      ++accepted;
      if (!c.witness || witness_point(*c.witness) != p) {
        witness.fail("(" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
  const std::string summary = std::to_string(accepted) + " pairs with |x|,|y| <= " + std::to_string(max);
  if (agree.check.passed) agree.check.detail = summary;
  if (witness.check.passed) witness.check.detail = summary;
  report.checks.push_back(std::move(agree.check));
  report.checks.push_back(std::move(witness.check));
  return report;
}

IdentityReport check_recursions(FibIndex from, FibIndex to) {
  IdentityReport report{"three-term", to, {}};
  const std::string range = "t in [" + std::to_string(from) + "," + std::to_string(to) + "]";
  Scan three{{"f_t+2 = 3f_t - f_t-2", true, range}};
  Scan nega{{"f_-t = (-1)^(t+1) f_t", true, range}};
  for (FibIndex t = from; t <= to; ++t) {
    if (!check_three_term(t)) three.fail("fails at t=" + std::to_string(t));
    const BigInt f = fib(t);
    if (fib(-t) != (std::llabs(t) % 2 == 1 ? f : BigInt(-f))) nega.fail("fails at t=" + std::to_string(t));
  }
  report.checks.push_back(std::move(three.check));
  report.checks.push_back(std::move(nega.check));
  return report;
}

IdentityReport check_sigma_moves(int count, std::uint64_t seed) {
  IdentityReport report{"sigma-moves", count, {}};
  Scan inverse{{"sigma_minus(sigma_plus(p)) = p = sigma_plus(sigma_minus(p))", true, {}}};
  Scan form{{"q(sigma_plus(p)) = q(p) = q(sigma_minus(p))", true, {}}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coord(-1'000'000'000'000LL, 1'000'000'000'000LL);
  for (int i = 0; i < count; ++i) {
    const DimPair p{BigInt(static_cast<long>(coord(rng))), BigInt(static_cast<long>(coord(rng)))};
    const auto name = describe(p);
    if (sigma_minus(sigma_plus(p)) != p || sigma_plus(sigma_minus(p)) != p) inverse.fail("fails at " + name);
    const BigInt q = euler_form(p);
    if (euler_form(sigma_plus(p)) != q || euler_form(sigma_minus(p)) != q) form.fail("fails at " + name);
  }
  const std::string summary = std::to_string(count) + " random points, seed " + std::to_string(seed);
  if (inverse.check.passed) inverse.check.detail = summary;
  if (form.check.passed) form.check.detail = summary;
  report.checks.push_back(std::move(inverse.check));
  report.checks.push_back(std::move(form.check));
  return report;
}

}  // namespace fibquiver

#pragma once

// Compressed Fibonacci vectors. s_t(x) depends only on the distance to x and
// r_{2t}(x, y) only on the distance and on whether the path runs through y,
// so both sequences can be iterated on one number per symmetry class.

#include <string>
#include <vector>

#include "fibquiver/bigint.hpp"
#include "fibquiver/errors.hpp"
#include "fibquiver/reflect.hpp"

namespace fibquiver {

/// s_t(base) as one value per distance d = 0..t.
struct RadialProfile {
  int t = 0;
  std::vector<BigInt> values;

  friend bool operator==(const RadialProfile&, const RadialProfile&) = default;
};

/// Number of vertices at distance d from a vertex: 1, then 3 * 2^{d-1}.
BigInt shell_size(int d);

RadialProfile radial_initial();
/// One reflection pass t -> t+1: the classes d with d != t (mod 2).
RadialProfile radial_step(const RadialProfile& p);
/// s_t(base) compressed, by iterating radial_step.
RadialProfile radial_profile(int t);
/// The profiles for steps 0..t_max.
std::vector<RadialProfile> radial_sequence(int t_max);
ParitySums radial_sums(const RadialProfile& p);

/// Integer-indexed values, dense over [lo, lo + values.size()), zero outside.
/// Leading and trailing zeros are trimmed so equal functions compare equal.
class ClassValues {
 public:
  ClassValues() = default;
  ClassValues(int lo, std::vector<BigInt> values);

  BigInt at(int s) const;
  bool empty() const noexcept { return values_.empty(); }
  int min_class() const noexcept { return lo_; }
  int max_class() const noexcept { return lo_ + static_cast<int>(values_.size()) - 1; }
  const std::vector<BigInt>& dense() const noexcept { return values_; }

  friend bool operator==(const ClassValues&, const ClassValues&) = default;

 private:
  void trim();

  int lo_ = 0;
  std::vector<BigInt> values_;
};

/// u_t: r_{2t}(base, y) compressed. Class s >= 0 holds the value on T_s(x,y)
/// (distance s, path avoiding y); class s <= -1 the value on T'_{-s}(x,y).
struct BiRadialProfile {
  int t = 0;
  ClassValues values;

  BigInt at(int s) const { return values.at(s); }

  friend bool operator==(const BiRadialProfile&, const BiRadialProfile&) = default;
};

/// Coefficients (left, self, right) with which class s is recomputed from
/// classes s-1, s, s+1.
struct Stencil {
  int left;
  int self;
  int right;

  friend bool operator==(const Stencil&, const Stencil&) = default;
};

Stencil u_stencil(int s);

BiRadialProfile u_initial();
/// Odd classes only, from u_t. This is the state after one reflection pass.
ClassValues u_half_step(const BiRadialProfile& u);
/// u_t -> u_{t+1}: odd classes from u_t, then even classes from the mixed state.
BiRadialProfile u_step(const BiRadialProfile& u);
std::vector<BiRadialProfile> u_table(int t_max);

/// Entry a_ij of the generalized Cartan matrix on Z whose simple reflections,
/// odd indices first, reproduce u_step. Nonzero only for |i - j| <= 1.
int cartan_entry(int i, int j);
/// u_step computed as sigma_i(v)_i = v_i - sum_j a_ij v_j over odd i, then even i.
BiRadialProfile u_step_cartan(const BiRadialProfile& u);

/// Weighted sums over odd classes (minus) and even classes (plus), with
/// weights 2^s on class s >= 0 and 2^{s-1} on class -s.
ParitySums u_sums(const BiRadialProfile& u);

struct PartitionTerm {
  int s;
  BigInt weight;
  BigInt value;
  BigInt product;

  friend bool operator==(const PartitionTerm&, const PartitionTerm&) = default;
};

struct PartitionReport {
  int t = 0;
  BigInt target_minus;  // f_{4t-1}
  BigInt target_plus;   // f_{4t+1}
  std::vector<PartitionTerm> terms_minus;
  std::vector<PartitionTerm> terms_plus;

  BigInt total_minus() const;
  BigInt total_plus() const;

  friend bool operator==(const PartitionReport&, const PartitionReport&) = default;
};

PartitionReport partition_report(int t);

class NotSymmetric : public Error {
 public:
  NotSymmetric(VertexId first, VertexId second, BigInt first_value, BigInt second_value);

  const VertexId& first() const noexcept { return first_; }
  const VertexId& second() const noexcept { return second_; }

 private:
  VertexId first_;
  VertexId second_;
};

/// Class of a vertex for the bi-radial symmetry around the base with y = child 0.
int biradial_class(const VertexId& z);

TreeVector expand_radial(const RadialProfile& p, const OracleLimits& limits = {});
TreeVector expand_biradial(const BiRadialProfile& u, const OracleLimits& limits = {});
TreeVector expand_classes(const ClassValues& values, const OracleLimits& limits = {});

/// t is taken as the support radius.
RadialProfile compress_radial(const TreeVector& a, const OracleLimits& limits = {});
ClassValues compress_classes(const TreeVector& a, const OracleLimits& limits = {});
BiRadialProfile compress_biradial(const TreeVector& a, int t, const OracleLimits& limits = {});

}  // namespace fibquiver

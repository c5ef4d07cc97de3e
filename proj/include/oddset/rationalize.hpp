#pragma once

// Turning an approximately given odd-distance set into an exact rational one
// with prescribed odd distances, and scaling rational sets onto dyadic
// coordinates.
//
// Pipeline: spread every coordinate so distinct points differ by at least 2
// everywhere, fix the sign of every coordinate difference, write each
// distance as a linear equation in the coordinates, solve the system exactly,
// snap the free variables to nearby small-denominator rationals and read off
// the dependent ones. Perturbations below 1 cannot flip any sign once points
// are 2 apart, so the snapped set has exactly the prescribed distances.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddset/geometry.hpp"
#include "oddset/rref.hpp"

namespace oddset {

using RrefResult = RrefResultT<Rational>;

/// Coordinates as exact decimal strings standing in for real numbers.
struct DecimalPointSet {
  Eigen::Index dimension = 1;
  std::vector<std::vector<std::string>> points;
  /// Keyed by 0-based (i, j), i < j.
  std::map<std::pair<std::size_t, std::size_t>, BigInt> declared_distances;

  /// Exact rational values of the decimal strings.
  PointSet proxies() const;
};

/// Absolute tolerance for reading an integer distance off decimal proxies.
Rational distance_tolerance();

/// s_i^{p,q} = +1 if p_i > q_i, -1 if p_i < q_i, stored once per unordered pair.
class SignPattern {
 public:
  /// Throws std::invalid_argument on any coordinate tie between two points.
  explicit SignPattern(const PointSet& ps);

  std::size_t point_count() const noexcept { return points_; }
  Eigen::Index dimension() const noexcept { return dimension_; }
  int sign(std::size_t p, std::size_t q, Eigen::Index coord) const;

 private:
  std::size_t points_;
  Eigen::Index dimension_;
  std::vector<std::int8_t> signs_;
};

/// One row per unordered pair (i < j, in that order):
///   sum_c s_c^{i,j} (x_{i,c} - x_{j,c}) = d_{i,j},
/// with variable x_{k,c} in column k * dimension + c.
struct LinearSystem {
  std::size_t point_count = 0;
  Eigen::Index dimension = 1;
  std::vector<std::pair<std::size_t, std::size_t>> row_pairs;
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> coefficients;
  PointT<Rational> rhs;

  Eigen::Index column(std::size_t point, Eigen::Index coord) const {
    return static_cast<Eigen::Index>(point) * dimension + coord;
  }
  bool satisfied_by(const PointT<Rational>& x) const;
};

/// Flattened coordinates of `ps` in LinearSystem column order.
PointT<Rational> flatten(const PointSet& ps);

/// Result of spreading every coordinate. origin[k] is the input index of
/// output point k; applied[c] records whether coordinate c was not already
/// 2-separated before its pass (every pass runs regardless).
struct Separation {
  PointSet points;
  std::vector<std::size_t> origin;
  std::vector<bool> applied;
};

/// Spreads coordinates 0..n-1 in turn without any oddness requirement.
Separation separate(const PointSet& ps);

/// spread_translate on every coordinate; throws std::invalid_argument unless
/// `ps` is an odd-distance set.
PointSet ensure_separation(const PointSet& ps);

struct AssembledSystem {
  SignPattern signs;
  LinearSystem system;
};

/// Right-hand sides are the exact distances of `ps`; asserts that the points
/// themselves solve the system.
AssembledSystem assemble_system(const PointSet& ps);

/// Right-hand sides given per row, in (i, j), i < j order.
AssembledSystem assemble_system(const PointSet& ps, std::span<const Rational> targets);

RrefResult rref(const LinearSystem& system);

/// 1 / (max(C, 1) * points * dimension).
Rational perturbation_radius(const RrefResult& solved, std::size_t point_count, Eigen::Index dimension);

/// Snaps each free variable to the simplest rational within the perturbation
/// radius of its hint and evaluates the dependents. Throws std::runtime_error
/// if a dependent lands 1 or more away from its hint.
PointSet perturb_and_solve(const RrefResult& solved, const PointSet& hints);

struct RationalizeProvenance {
  std::vector<bool> separation_applied;
  std::size_t free_variables = 0;
  Rational bound;
  Rational epsilon;
  BigInt scale = 1;
};

struct TargetDistance {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational distance;
};

struct RationalizeResult {
  /// Same point order as the input.
  PointSet points;
  /// Post-separation distances, 0-based i < j in input numbering.
  std::vector<TargetDistance> targets;
  RationalizeProvenance provenance;
};

/// Throws std::invalid_argument naming the pair when a distance is not within
/// tolerance of an integer or rounds to an even one.
RationalizeResult rationalize_set(const DecimalPointSet& input);

struct DyadicResult {
  PointSet points;
  BigInt scale;
};

/// Multiplies by the lcm of the odd parts of all denominators. Throws
/// std::invalid_argument unless `ps` is an odd-distance set.
DyadicResult dyadic_scale(const PointSet& ps);

}  // namespace oddset

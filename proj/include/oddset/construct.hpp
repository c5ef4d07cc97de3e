#pragma once

// Inductive construction of 2^n-point odd-distance sets in (1/2 Z)^n.
//
// One induction step spreads the first coordinate (rank r gets +2r) and then
// splits it into two coordinates with dim2_pair, doubling the set.

#include <cstddef>
#include <vector>

#include "oddset/geometry.hpp"

namespace oddset {

/// Two points of the plane at l1 distance 1 whose coordinates each sum to
/// target_sum and lie in [target_sum/2 - 1/2, target_sum/2 + 1/2].
struct Dim2Pair {
  Rational target_sum;
  Point first;
  Point second;
};

/// Throws std::invalid_argument unless x is in (1/2)Z.
Dim2Pair dim2_pair(const Rational& x);

/// Indices of `ps` sorted by coordinate `coord`, ties broken lexicographically.
std::vector<std::size_t> spread_order(const PointSet& ps, Eigen::Index coord);

/// Sorts by coordinate `coord` (ties lexicographic) and adds 2r to that
/// coordinate of the point with 1-based rank r. Output is in sorted order.
/// Throws std::out_of_range for a bad coordinate index.
PointSet spread_translate(const PointSet& ps, Eigen::Index coord);

/// Replaces each (b, v) by (dim2_pair(b).first, v), (dim2_pair(b).second, v).
/// Requires coordinates in (1/2)Z and pairwise gaps of at least 2 in
/// coordinate 0; throws std::invalid_argument otherwise.
PointSet extend_dimension(const PointSet& ps);

/// {0, 1} in dimension 1, then n - 1 rounds of spread_translate(., 0) and
/// extend_dimension. Throws std::invalid_argument for n == 0.
PointSet build_odd_set(std::size_t n);

}  // namespace oddset

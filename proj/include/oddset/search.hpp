#pragma once

// Exhaustive maximum odd-distance set search inside a bounded lattice box.
//
// Odd-distance sets among a finite point list are exactly the cliques of the
// graph joining points at odd-integer l1 distance, so the search is a maximum
// clique problem: branch and bound over packed bit rows, pruned by greedy
// colouring bounds.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oddset/geometry.hpp"

namespace oddset {

enum class Lattice { integers, half_integers };

std::string_view to_string(Lattice lattice);

struct LatticeBox {
  Eigen::Index dimension = 1;
  Lattice lattice = Lattice::integers;
  Point lower;
  Point upper;

  /// [lo, hi]^n.
  static LatticeBox cube(Eigen::Index dimension, Lattice lattice, const Rational& lo, const Rational& hi);

  Rational step() const;
  /// Throws std::invalid_argument if bounds are inverted, off-lattice or of
  /// the wrong length.
  void validate() const;
  /// Number of lattice points, saturated at SIZE_MAX.
  std::size_t point_count() const;
};

inline constexpr std::size_t kDefaultVertexLimit = 100000;

/// All lattice points of the box in lexicographic order. Throws
/// std::length_error naming the count when it exceeds `limit`.
std::vector<Point> enumerate_box(const LatticeBox& box, std::size_t limit = kDefaultVertexLimit);

class OddGraph {
 public:
  /// Vertices must be pairwise distinct and of equal dimension; an empty
  /// list gives an empty graph of dimension `empty_dimension`.
  explicit OddGraph(std::vector<Point> vertices, Eigen::Index empty_dimension = 1);

  std::size_t size() const noexcept { return vertices_.size(); }
  Eigen::Index dimension() const noexcept { return dimension_; }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }

  std::size_t words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> row(std::size_t u) const { return {bits_.data() + u * words_, words_}; }
  bool adjacent(std::size_t u, std::size_t v) const { return (row(u)[v / 64] >> (v % 64)) & 1u; }
  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const noexcept { return edges_; }

 private:
  Eigen::Index dimension_;
  std::vector<Point> vertices_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::size_t edges_ = 0;
};

OddGraph build_odd_graph(std::vector<Point> points);

struct CliqueResult {
  std::size_t max_size = 0;
  PointSet witness{1, {}};
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct CliqueOptions {
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Exact maximum clique. max_size does not depend on the thread count; the
/// witness may.
CliqueResult max_odd_clique(const OddGraph& graph, const CliqueOptions& options = {});

/// 2^n for the half-integer lattice, 2 for the integer lattice.
std::size_t lattice_cap(Eigen::Index dimension, Lattice lattice);

struct BoundReport {
  Eigen::Index dimension = 1;
  Lattice lattice = Lattice::integers;
  std::size_t max_size = 0;
  std::size_t cap = 0;
  bool violation = false;

  std::string summary() const;
};

BoundReport bound_report(Eigen::Index dimension, Lattice lattice, std::size_t max_size);
inline BoundReport bound_report(Eigen::Index dimension, Lattice lattice, const CliqueResult& result) {
  return bound_report(dimension, lattice, result.max_size);
}

}  // namespace oddset

#pragma once

// Points over Rational, exact l1 distances, odd-distance certificates and the
// half-integer parity fingerprint.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "oddset/rational.hpp"

namespace oddset {

template <typename Scalar>
using PointT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Point = PointT<Rational>;

Point make_point(std::initializer_list<Rational> coords);

/// Lexicographic order on coordinates; shorter points sort first on a common prefix.
template <typename DerivedA, typename DerivedB>
std::strong_ordering lex_compare(const Eigen::MatrixBase<DerivedA>& p, const Eigen::MatrixBase<DerivedB>& q) {
  const Eigen::Index n = std::min(p.size(), q.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (auto c = p(i) <=> q(i); c != 0) return c;
  }
  return p.size() <=> q.size();
}

/// Sum of absolute coordinate differences, exact for Rational scalars.
/// Throws std::invalid_argument on a dimension mismatch.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar l1_distance(const Eigen::MatrixBase<DerivedA>& p, const Eigen::MatrixBase<DerivedB>& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("l1_distance: dimension mismatch (" + std::to_string(p.size()) + " vs " +
                                std::to_string(q.size()) + ")");
  }
  return (p - q).cwiseAbs().sum();
}

/// Ordered list of pairwise distinct points of one dimension.
class PointSet {
 public:
  /// Throws std::invalid_argument if dimension < 1, any point has the wrong
  /// length, or two points coincide. Messages use 1-based point numbers.
  PointSet(Eigen::Index dimension, std::vector<Point> points);

  Eigen::Index dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  /// All coordinates, point by point.
  std::vector<Rational> coordinates() const;

  friend bool operator==(const PointSet& lhs, const PointSet& rhs);

 private:
  Eigen::Index dimension_;
  std::vector<Point> points_;
};

PointSet translate(const PointSet& ps, const Point& offset);
PointSet scale(const PointSet& ps, const Rational& factor);

/// Coordinates multiplied by a common denominator so that every distance
/// computation stays inside int64. Column k holds point k.
struct IntegerEmbedding {
  std::int64_t denominator = 1;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> coords;
};

/// Empty when the common denominator or the scaled magnitudes are too large
/// for overflow-free pairwise sums.
std::optional<IntegerEmbedding> integer_embedding(std::span<const Point> points);

struct PairResult {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  Rational distance;
  bool is_odd_integer = false;
};

struct OddCertificate {
  std::size_t set_size = 0;
  /// Every unordered pair once, in (i, j), i < j order, 0-based.
  std::vector<PairResult> pair_results;
  bool verdict = true;

  const PairResult* first_failure() const;
};

struct VerifyOptions {
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Skip the int64 path; the result must be identical either way.
  bool force_rational_path = false;
};

OddCertificate verify_odd_set(const PointSet& ps, const VerifyOptions& options = {});

using Fingerprint = std::vector<bool>;

/// Bit i set iff coordinate i is in Z + 1/2. Throws std::invalid_argument if
/// a coordinate is outside (1/2)Z.
Fingerprint phi_fingerprint(const Point& p);

enum class Parity { even, odd };

struct ParityAudit {
  std::vector<Fingerprint> fingerprints;
  std::map<Fingerprint, std::size_t> fiber_sizes;
  std::vector<Parity> weight_parities;
  bool uniform_weight_parity = true;
  bool fibers_at_most_two = true;

  bool passes() const noexcept { return uniform_weight_parity && fibers_at_most_two; }
};

/// Necessary conditions for a (1/2)Z odd-distance set: all fingerprint weights
/// share a parity, and no fingerprint is shared by three points.
ParityAudit parity_audit(const PointSet& ps);

unsigned resolve_threads(unsigned requested);

}  // namespace oddset

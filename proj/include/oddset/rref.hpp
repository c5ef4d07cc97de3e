#pragma once

// Exact Gauss-Jordan elimination for scalar types with exact arithmetic.

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace oddset {

/// Solved form of a consistent linear system A x = b: every pivot
/// (dependent) variable is an affine function of the free variables,
///   x[pivot_columns[g]] = offsets[g] + sum_f coefficients(g, f) * x[free_columns[f]].
template <typename Scalar>
struct RrefResultT {
  std::vector<Eigen::Index> pivot_columns;
  std::vector<Eigen::Index> free_columns;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> offsets;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> coefficients;
  /// max |coefficients(g, f)|, zero when there are no dependents or no frees.
  Scalar bound{0};

  Eigen::Index variable_count() const {
    return static_cast<Eigen::Index>(pivot_columns.size() + free_columns.size());
  }

  /// Full variable vector induced by an assignment of the free variables.
  template <typename Derived>
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> solve(const Eigen::MatrixBase<Derived>& free_values) const {
    if (free_values.size() != static_cast<Eigen::Index>(free_columns.size())) {
      throw std::invalid_argument("solve: expected " + std::to_string(free_columns.size()) + " free values");
    }
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(variable_count());
    for (std::size_t f = 0; f < free_columns.size(); ++f) x(free_columns[f]) = free_values(static_cast<Eigen::Index>(f));
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> dependents = offsets + coefficients * free_values;
    for (std::size_t g = 0; g < pivot_columns.size(); ++g) x(pivot_columns[g]) = dependents(static_cast<Eigen::Index>(g));
    return x;
  }
};

/// Reduced row echelon form of [A | b]. Pivots are taken column by column,
/// left to right, from the first remaining row with a nonzero entry.
/// Throws std::runtime_error if the system is inconsistent.
template <typename DerivedA, typename DerivedB>
RrefResultT<typename DerivedA::Scalar> rref(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.rows() != b.size()) throw std::invalid_argument("rref: rhs length does not match the row count");

  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Matrix m(rows, cols + 1);
  m.leftCols(cols) = a;
  m.col(cols) = b;

  const Scalar zero(0);
  RrefResultT<Scalar> out;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == zero) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar pivot = m(r, c);
    for (Eigen::Index k = c; k <= cols; ++k) m(r, k) /= pivot;
    for (Eigen::Index q = 0; q < rows; ++q) {
      if (q == r || m(q, c) == zero) continue;
      const Scalar factor = m(q, c);
      for (Eigen::Index k = c; k <= cols; ++k) {
        if (m(r, k) != zero) m(q, k) -= factor * m(r, k);
      }
    }
    out.pivot_columns.push_back(c);
    is_pivot[static_cast<std::size_t>(c)] = true;
    ++r;
  }
  for (Eigen::Index q = r; q < rows; ++q) {
    if (m(q, cols) != zero) {
      throw std::runtime_error("rref: inconsistent system (row " + std::to_string(q + 1) + " reduces to 0 = nonzero)");
    }
  }
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) out.free_columns.push_back(c);
  }

  const auto deps = static_cast<Eigen::Index>(out.pivot_columns.size());
  const auto frees = static_cast<Eigen::Index>(out.free_columns.size());
  out.offsets.resize(deps);
  out.coefficients.resize(deps, frees);
  out.bound = zero;
  for (Eigen::Index g = 0; g < deps; ++g) {
    out.offsets(g) = m(g, cols);
    for (Eigen::Index f = 0; f < frees; ++f) {
      out.coefficients(g, f) = -m(g, out.free_columns[static_cast<std::size_t>(f)]);
      using std::abs;
      const Scalar mag = abs(out.coefficients(g, f));
      if (out.bound < mag) out.bound = mag;
    }
  }
  return out;
}

}  // namespace oddset

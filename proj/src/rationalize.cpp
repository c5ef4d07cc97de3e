#include "oddset/rationalize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "oddset/construct.hpp"
#include "oddset/exact_arith.hpp"

namespace oddset {
namespace {

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
}

bool separated(const PointSet& ps, Eigen::Index coord) {
  std::vector<Rational> values;
  values.reserve(ps.size());
  for (const auto& p : ps) values.push_back(p(coord));
  std::sort(values.begin(), values.end());
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] - values[k - 1] < Rational(2)) return false;
  }
  return true;
}

void require_odd_set(const PointSet& ps, const char* what) {
  const OddCertificate cert = verify_odd_set(ps);
  if (const PairResult* bad = cert.first_failure()) {
    throw std::invalid_argument(std::string(what) + ": input is not an odd-distance set; pair " +
                                pair_name(bad->i, bad->j) + " has distance " + bad->distance.to_string());
  }
}

}  // namespace

PointSet DecimalPointSet::proxies() const {
  std::vector<Point> out;
  out.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    Point p(static_cast<Eigen::Index>(points[k].size()));
    for (std::size_t c = 0; c < points[k].size(); ++c) {
      try {
        p(static_cast<Eigen::Index>(c)) = parse_decimal(points[k][c]);
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("point " + std::to_string(k + 1) + ", coordinate " + std::to_string(c + 1) +
                                    ": " + e.what());
      }
    }
    out.push_back(std::move(p));
  }
  return PointSet(dimension, std::move(out));
}

Rational distance_tolerance() { return Rational(1, 1000000); }

SignPattern::SignPattern(const PointSet& ps) : points_(ps.size()), dimension_(ps.dimension()) {
  const std::size_t m = ps.size();
  const auto n = static_cast<std::size_t>(dimension_);
  signs_.resize(m * (m > 0 ? m - 1 : 0) / 2 * n);
  std::size_t slot = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (Eigen::Index c = 0; c < dimension_; ++c) {
        const auto cmp = ps[i](c) <=> ps[j](c);
        if (cmp == 0) {
          throw std::invalid_argument("sign pattern: points " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " tie in coordinate " + std::to_string(c + 1));
        }
        signs_[slot++] = cmp > 0 ? 1 : -1;
      }
    }
  }
}

int SignPattern::sign(std::size_t p, std::size_t q, Eigen::Index coord) const {
  if (p == q || p >= points_ || q >= points_ || coord < 0 || coord >= dimension_) {
    throw std::out_of_range("sign pattern index out of range");
  }
  const auto [i, j] = std::minmax(p, q);
  const std::size_t pair = i * points_ - i * (i + 1) / 2 + (j - i - 1);
  const int s = signs_[pair * static_cast<std::size_t>(dimension_) + static_cast<std::size_t>(coord)];
  return p == i ? s : -s;
}

bool LinearSystem::satisfied_by(const PointT<Rational>& x) const {
  if (x.size() != coefficients.cols()) return false;
  for (Eigen::Index r = 0; r < coefficients.rows(); ++r) {
    Rational lhs;
    for (Eigen::Index c = 0; c < coefficients.cols(); ++c) {
      if (!coefficients(r, c).is_zero()) lhs += coefficients(r, c) * x(c);
    }
    if (lhs != rhs(r)) return false;
  }
  return true;
}

PointT<Rational> flatten(const PointSet& ps) {
  PointT<Rational> x(static_cast<Eigen::Index>(ps.size()) * ps.dimension());
  for (std::size_t k = 0; k < ps.size(); ++k) x.segment(static_cast<Eigen::Index>(k) * ps.dimension(), ps.dimension()) = ps[k];
  return x;
}

Separation separate(const PointSet& ps) {
  Separation out{ps, {}, {}};
  out.origin.resize(ps.size());
  std::iota(out.origin.begin(), out.origin.end(), 0);
  for (Eigen::Index c = 0; c < ps.dimension(); ++c) {
    out.applied.push_back(!separated(out.points, c));
    const std::vector<std::size_t> order = spread_order(out.points, c);
    std::vector<std::size_t> origin(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) origin[k] = out.origin[order[k]];
    out.points = spread_translate(out.points, c);
    out.origin = std::move(origin);
  }
  return out;
}

PointSet ensure_separation(const PointSet& ps) {
  require_odd_set(ps, "ensure_separation");
  return separate(ps).points;
}

AssembledSystem assemble_system(const PointSet& ps, std::span<const Rational> targets) {
  const std::size_t m = ps.size();
  const Eigen::Index n = ps.dimension();
  const std::size_t pairs = m * (m > 0 ? m - 1 : 0) / 2;
  if (targets.size() != pairs) {
    throw std::invalid_argument("assemble_system: expected " + std::to_string(pairs) + " target distances");
  }
  SignPattern signs(ps);
  LinearSystem sys;
  sys.point_count = m;
  sys.dimension = n;
  sys.coefficients = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>::Zero(static_cast<Eigen::Index>(pairs),
                                                                                  static_cast<Eigen::Index>(m) * n);
  sys.rhs.resize(static_cast<Eigen::Index>(pairs));
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j, ++row) {
      for (Eigen::Index c = 0; c < n; ++c) {
        const int s = signs.sign(i, j, c);
        sys.coefficients(row, sys.column(i, c)) = Rational(s);
        sys.coefficients(row, sys.column(j, c)) = Rational(-s);
      }
      sys.rhs(row) = targets[static_cast<std::size_t>(row)];
      sys.row_pairs.emplace_back(i, j);
    }
  }
  return {std::move(signs), std::move(sys)};
}

AssembledSystem assemble_system(const PointSet& ps) {
  std::vector<Rational> targets;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) targets.push_back(l1_distance(ps[i], ps[j]));
  }
  AssembledSystem out = assemble_system(ps, targets);
  if (!out.system.satisfied_by(flatten(ps))) {
    throw std::logic_error("assemble_system: the points do not solve their own distance system");
  }
  return out;
}

RrefResult rref(const LinearSystem& system) { return rref(system.coefficients, system.rhs); }

Rational perturbation_radius(const RrefResult& solved, std::size_t point_count, Eigen::Index dimension) {
  const Rational c = std::max(solved.bound, Rational(1));
  return Rational(1) / (c * Rational(static_cast<std::int64_t>(point_count)) * Rational(dimension));
}

PointSet perturb_and_solve(const RrefResult& solved, const PointSet& hints) {
  const Eigen::Index n = hints.dimension();
  const PointT<Rational> hint = flatten(hints);
  if (hint.size() != solved.variable_count()) {
    throw std::invalid_argument("perturb_and_solve: hints supply " + std::to_string(hint.size()) +
                                " values for " + std::to_string(solved.variable_count()) + " variables");
  }
  const Rational eps = perturbation_radius(solved, hints.size(), n);

  PointT<Rational> free_values(static_cast<Eigen::Index>(solved.free_columns.size()));
  for (std::size_t f = 0; f < solved.free_columns.size(); ++f) {
    const Rational& h = hint(solved.free_columns[f]);
    free_values(static_cast<Eigen::Index>(f)) = best_rational_in_interval(h - eps, h + eps);
  }
  const PointT<Rational> x = solved.solve(free_values);

  for (Eigen::Index g : solved.pivot_columns) {
    if (abs(x(g) - hint(g)) >= Rational(1)) {
      throw std::runtime_error("perturb_and_solve: point " + std::to_string(g / n + 1) + ", coordinate " +
                               std::to_string(g % n + 1) + " drifted by " + abs(x(g) - hint(g)).to_string() +
                               " from its hint; the hints are not near a solution");
    }
  }

  std::vector<Point> points;
  points.reserve(hints.size());
  for (std::size_t k = 0; k < hints.size(); ++k) points.emplace_back(x.segment(static_cast<Eigen::Index>(k) * n, n));
  return PointSet(n, std::move(points));
}

RationalizeResult rationalize_set(const DecimalPointSet& input) {
  const PointSet proxies = input.proxies();
  const std::size_t m = proxies.size();
  const Rational tol = distance_tolerance();

  // Integer distance per input pair.
  std::vector<Rational> target(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Rational d;
      if (auto it = input.declared_distances.find({i, j}); it != input.declared_distances.end()) {
        d = Rational(it->second, BigInt(1));
        if (!is_odd_integer(d) || d.sign() <= 0) {
          throw std::invalid_argument("pair " + pair_name(i, j) + ": declared distance " + d.to_string() +
                                      " is not an odd positive integer");
        }
      } else {
        const Rational exact = l1_distance(proxies[i], proxies[j]);
        d = Rational(floor(exact + Rational(1, 2)), BigInt(1));
        if (abs(exact - d) > tol) {
          throw std::invalid_argument("pair " + pair_name(i, j) + ": distance " + exact.to_string() +
                                      " is not within 1e-6 of an integer");
        }
        if (!is_odd_integer(d)) {
          throw std::invalid_argument("pair " + pair_name(i, j) + ": distance " + exact.to_string() +
                                      " rounds to the even integer " + d.to_string());
        }
      }
      target[i * m + j] = target[j * m + i] = d;
    }
  }

  const Separation sep = separate(proxies);

  // Spreading adds an exact even integer to each distance.
  std::vector<Rational> sep_targets;
  sep_targets.reserve(m * (m > 0 ? m - 1 : 0) / 2);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const std::size_t i = sep.origin[a], j = sep.origin[b];
      const Rational shift = l1_distance(sep.points[a], sep.points[b]) - l1_distance(proxies[i], proxies[j]);
      if (classify_rational(shift) != RationalClass::even_integer || shift.sign() < 0) {
        throw std::logic_error("separation changed a distance by a non-even amount");
      }
      sep_targets.push_back(target[i * m + j] + shift);
    }
  }

  const AssembledSystem assembled = assemble_system(sep.points, sep_targets);
  const RrefResult solved = rref(assembled.system);
  const PointSet snapped = perturb_and_solve(solved, sep.points);
  if (!assembled.system.satisfied_by(flatten(snapped))) {
    throw std::logic_error("rationalize_set: snapped points do not solve the distance system");
  }

  std::vector<Point> ordered(m);
  for (std::size_t a = 0; a < m; ++a) ordered[sep.origin[a]] = snapped[a];
  RationalizeResult result{PointSet(proxies.dimension(), std::move(ordered)), {}, {}};

  std::size_t row = 0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b, ++row) {
      const auto [i, j] = std::minmax(sep.origin[a], sep.origin[b]);
      result.targets.push_back({i, j, sep_targets[row]});
    }
  }
  std::sort(result.targets.begin(), result.targets.end(),
            [](const TargetDistance& x, const TargetDistance& y) { return std::pair(x.i, x.j) < std::pair(y.i, y.j); });

  for (const auto& t : result.targets) {
    if (l1_distance(result.points[t.i], result.points[t.j]) != t.distance) {
      throw std::logic_error("rationalize_set: output distance for pair " + pair_name(t.i, t.j) +
                             " differs from its target");
    }
  }
  require_odd_set(result.points, "rationalize_set");

  result.provenance.separation_applied = sep.applied;
  result.provenance.free_variables = solved.free_columns.size();
  result.provenance.bound = solved.bound;
  result.provenance.epsilon = m > 0 ? perturbation_radius(solved, m, proxies.dimension()) : Rational(0);
  return result;
}

DyadicResult dyadic_scale(const PointSet& ps) {
  require_odd_set(ps, "dyadic_scale");
  if (ps.empty()) return {ps, BigInt(1)};
  const BigInt k = odd_denominator_lcm(ps.coordinates());
  return {scale(ps, Rational(k, BigInt(1))), k};
}

}  // namespace oddset

#include "oddset/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "oddset/exact_arith.hpp"

namespace oddset {

Dim2Pair dim2_pair(const Rational& x) {
  const auto kind = classify_rational(x);
  const Rational half_x = x / Rational(2);
  Dim2Pair out{x, Point(2), Point(2)};
  if (kind == RationalClass::odd_integer || kind == RationalClass::even_integer) {
    const Rational half(1, 2);
    out.first = make_point({half_x + half, half_x - half});
    out.second = make_point({half_x, half_x});
  } else if (kind == RationalClass::strict_half_integer) {
    const Rational quarter(1, 4);
    out.first = make_point({half_x + quarter, half_x - quarter});
    out.second = make_point({half_x - quarter, half_x + quarter});
  } else {
    throw std::invalid_argument("dim2_pair: " + x.to_string() + " is not in (1/2)Z");
  }
  return out;
}

std::vector<std::size_t> spread_order(const PointSet& ps, Eigen::Index coord) {
  if (coord < 0 || coord >= ps.dimension()) {
    throw std::out_of_range("spread_translate: coordinate " + std::to_string(coord) + " out of range for dimension " +
                            std::to_string(ps.dimension()));
  }
  std::vector<std::size_t> order(ps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (auto c = ps[a](coord) <=> ps[b](coord); c != 0) return c < 0;
    return lex_compare(ps[a], ps[b]) < 0;
  });
  return order;
}

PointSet spread_translate(const PointSet& ps, Eigen::Index coord) {
  const std::vector<std::size_t> order = spread_order(ps, coord);
  std::vector<Point> out;
  out.reserve(ps.size());
  for (std::size_t rank = 1; rank <= order.size(); ++rank) {
    Point p = ps[order[rank - 1]];
    p(coord) += Rational(static_cast<std::int64_t>(2 * rank));
    out.push_back(std::move(p));
  }
  return PointSet(ps.dimension(), std::move(out));
}

PointSet extend_dimension(const PointSet& ps) {
  std::vector<Rational> firsts;
  firsts.reserve(ps.size());
  for (const auto& p : ps) firsts.push_back(p(0));
  std::sort(firsts.begin(), firsts.end());
  for (std::size_t k = 1; k < firsts.size(); ++k) {
    if (firsts[k] - firsts[k - 1] < Rational(2)) {
      throw std::invalid_argument("extend_dimension: first coordinates " + firsts[k - 1].to_string() + " and " +
                                  firsts[k].to_string() + " are closer than 2; spread the set first");
    }
  }

  const Eigen::Index n = ps.dimension();
  std::vector<Point> out;
  out.reserve(2 * ps.size());
  for (const auto& p : ps) {
    const Dim2Pair pair = dim2_pair(p(0));
    for (const Point* c : {&pair.first, &pair.second}) {
      Point q(n + 1);
      q.head(2) = *c;
      q.tail(n - 1) = p.tail(n - 1);
      out.push_back(std::move(q));
    }
  }
  return PointSet(n + 1, std::move(out));
}

PointSet build_odd_set(std::size_t n) {
  if (n == 0) throw std::invalid_argument("build_odd_set: n must be at least 1");
  PointSet ps(1, {make_point({0}), make_point({1})});
  for (std::size_t step = 1; step < n; ++step) ps = extend_dimension(spread_translate(ps, 0));
  return ps;
}

}  // namespace oddset

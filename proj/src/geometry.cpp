#include "oddset/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

#include "oddset/exact_arith.hpp"

namespace oddset {

Point make_point(std::initializer_list<Rational> coords) {
  Point p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index k = 0;
  for (const auto& c : coords) p(k++) = c;
  return p;
}

PointSet::PointSet(Eigen::Index dimension, std::vector<Point> points)
    : dimension_(dimension), points_(std::move(points)) {
  if (dimension_ < 1) throw std::invalid_argument("point set dimension must be at least 1");
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (points_[k].size() != dimension_) {
      throw std::invalid_argument("point " + std::to_string(k + 1) + " has dimension " +
                                  std::to_string(points_[k].size()) + ", expected " + std::to_string(dimension_));
    }
  }
  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto c = lex_compare(points_[a], points_[b]);
    return c != 0 ? c < 0 : a < b;
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (lex_compare(points_[order[k - 1]], points_[order[k]]) == 0) {
      const auto [a, b] = std::minmax(order[k - 1], order[k]);
      throw std::invalid_argument("points " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " coincide");
    }
  }
}

std::vector<Rational> PointSet::coordinates() const {
  std::vector<Rational> out;
  out.reserve(points_.size() * static_cast<std::size_t>(dimension_));
  for (const auto& p : points_) out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool operator==(const PointSet& lhs, const PointSet& rhs) {
  if (lhs.dimension_ != rhs.dimension_ || lhs.size() != rhs.size()) return false;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (lex_compare(lhs[k], rhs[k]) != 0) return false;
  }
  return true;
}

PointSet translate(const PointSet& ps, const Point& offset) {
  if (offset.size() != ps.dimension()) throw std::invalid_argument("translate: offset has the wrong dimension");
  std::vector<Point> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.emplace_back(p + offset);
  return PointSet(ps.dimension(), std::move(out));
}

PointSet scale(const PointSet& ps, const Rational& factor) {
  if (factor.is_zero() && ps.size() > 1) throw std::invalid_argument("scale: zero factor collapses the set");
  std::vector<Point> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.emplace_back(p * factor);
  return PointSet(ps.dimension(), std::move(out));
}

std::optional<IntegerEmbedding> integer_embedding(std::span<const Point> points) {
  using i128 = __int128;
  constexpr std::int64_t kDenLimit = std::int64_t{1} << 62;
  if (points.empty()) return IntegerEmbedding{};
  const Eigen::Index n = points.front().size();
  const std::int64_t magnitude_limit = (std::int64_t{1} << 62) / std::max<Eigen::Index>(n, 1);

  std::int64_t den = 1;
  for (const auto& p : points) {
    for (const auto& c : p) {
      if (!c.is_small()) return std::nullopt;
      const std::int64_t d = c.small_denominator();
      const i128 l = static_cast<i128>(den / std::gcd(den, d)) * d;
      if (l > kDenLimit) return std::nullopt;
      den = static_cast<std::int64_t>(l);
    }
  }

  IntegerEmbedding out;
  out.denominator = den;
  out.coords.resize(n, static_cast<Eigen::Index>(points.size()));
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const Rational& c = points[k](i);
      const i128 v = static_cast<i128>(c.small_numerator()) * (den / c.small_denominator());
      if (v > magnitude_limit || v < -magnitude_limit) return std::nullopt;
      out.coords(i, static_cast<Eigen::Index>(k)) = static_cast<std::int64_t>(v);
    }
  }
  return out;
}

const PairResult* OddCertificate::first_failure() const {
  for (const auto& r : pair_results) {
    if (!r.is_odd_integer) return &r;
  }
  return nullptr;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Offset of pair (i, i+1) in the (i, j), i < j enumeration of m points.
std::size_t row_offset(std::size_t i, std::size_t m) { return i * m - i * (i + 1) / 2; }

template <typename RowFn>
void for_each_row(std::size_t m, unsigned threads, RowFn&& fn) {
  if (m < 2) return;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(m - 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i + 1 < m; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i + 1 < m; i = next++) fn(i);
    });
  }
}

}  // namespace

OddCertificate verify_odd_set(const PointSet& ps, const VerifyOptions& options) {
  OddCertificate cert;
  const std::size_t m = ps.size();
  cert.set_size = m;
  if (m < 2) return cert;
  cert.pair_results.resize(m * (m - 1) / 2);
  const unsigned threads = resolve_threads(options.threads);

  std::optional<IntegerEmbedding> embedding;
  if (!options.force_rational_path) embedding = integer_embedding(ps.points());

  if (embedding) {
    const auto& coords = embedding->coords;
    const std::int64_t den = embedding->denominator;
    for_each_row(m, threads, [&](std::size_t i) {
      std::size_t slot = row_offset(i, m);
      const auto pi = coords.col(static_cast<Eigen::Index>(i));
      for (std::size_t j = i + 1; j < m; ++j, ++slot) {
        const std::int64_t sum = (pi - coords.col(static_cast<Eigen::Index>(j))).cwiseAbs().sum();
        auto& r = cert.pair_results[slot];
        r.i = static_cast<std::uint32_t>(i);
        r.j = static_cast<std::uint32_t>(j);
        r.distance = Rational(sum, den);
        r.is_odd_integer = sum % den == 0 && ((sum / den) & 1) != 0;
      }
    });
  } else {
    for_each_row(m, threads, [&](std::size_t i) {
      std::size_t slot = row_offset(i, m);
      for (std::size_t j = i + 1; j < m; ++j, ++slot) {
        auto& r = cert.pair_results[slot];
        r.i = static_cast<std::uint32_t>(i);
        r.j = static_cast<std::uint32_t>(j);
        r.distance = l1_distance(ps[i], ps[j]);
        r.is_odd_integer = is_odd_integer(r.distance);
      }
    });
  }
  cert.verdict = std::all_of(cert.pair_results.begin(), cert.pair_results.end(),
                             [](const PairResult& r) { return r.is_odd_integer; });
  return cert;
}

Fingerprint phi_fingerprint(const Point& p) {
  Fingerprint out(static_cast<std::size_t>(p.size()));
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const auto c = classify_rational(p(i));
    if (c == RationalClass::strict_half_integer) {
      out[static_cast<std::size_t>(i)] = true;
    } else if (c != RationalClass::odd_integer && c != RationalClass::even_integer) {
      throw std::invalid_argument("coordinate " + std::to_string(i + 1) + " is " + p(i).to_string() +
                                  ", not in (1/2)Z");
    }
  }
  return out;
}

ParityAudit parity_audit(const PointSet& ps) {
  ParityAudit audit;
  audit.fingerprints.reserve(ps.size());
  for (std::size_t k = 0; k < ps.size(); ++k) {
    Fingerprint f;
    try {
      f = phi_fingerprint(ps[k]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("point " + std::to_string(k + 1) + ": " + e.what());
    }
    const auto weight = std::count(f.begin(), f.end(), true);
    audit.weight_parities.push_back(weight % 2 == 0 ? Parity::even : Parity::odd);
    ++audit.fiber_sizes[f];
    audit.fingerprints.push_back(std::move(f));
  }
  audit.uniform_weight_parity =
      std::adjacent_find(audit.weight_parities.begin(), audit.weight_parities.end(), std::not_equal_to<>()) ==
      audit.weight_parities.end();
  audit.fibers_at_most_two = std::all_of(audit.fiber_sizes.begin(), audit.fiber_sizes.end(),
                                         [](const auto& kv) { return kv.second <= 2; });
  return audit;
}

}  // namespace oddset

#include "oddset/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "oddset/exact_arith.hpp"

namespace oddset {

std::string_view to_string(Lattice lattice) {
  return lattice == Lattice::integers ? "integers" : "half-integers";
}

LatticeBox LatticeBox::cube(Eigen::Index dimension, Lattice lattice, const Rational& lo, const Rational& hi) {
  LatticeBox box;
  box.dimension = dimension;
  box.lattice = lattice;
  box.lower = Point::Constant(dimension, lo);
  box.upper = Point::Constant(dimension, hi);
  return box;
}

Rational LatticeBox::step() const { return lattice == Lattice::integers ? Rational(1) : Rational(1, 2); }

void LatticeBox::validate() const {
  if (dimension < 1) throw std::invalid_argument("box dimension must be at least 1");
  if (lower.size() != dimension || upper.size() != dimension) {
    throw std::invalid_argument("box bounds must have one entry per coordinate");
  }
  for (Eigen::Index i = 0; i < dimension; ++i) {
    if (upper(i) < lower(i)) {
      throw std::invalid_argument("box coordinate " + std::to_string(i + 1) + ": upper bound " +
                                  upper(i).to_string() + " is below lower bound " + lower(i).to_string());
    }
    for (const Rational* b : {&lower(i), &upper(i)}) {
      const bool on_lattice = lattice == Lattice::integers ? b->is_integer() : is_half_lattice(*b);
      if (!on_lattice) {
        throw std::invalid_argument("box bound " + b->to_string() + " is not on the " +
                                    std::string(to_string(lattice)) + " lattice");
      }
    }
  }
}

std::size_t LatticeBox::point_count() const {
  validate();
  BigInt total = 1;
  const Rational s = step();
  for (Eigen::Index i = 0; i < dimension; ++i) {
    total *= ((upper(i) - lower(i)) / s).numerator() + 1;
  }
  if (!total.fits_ulong_p()) return std::numeric_limits<std::size_t>::max();
  return total.get_ui();
}

std::vector<Point> enumerate_box(const LatticeBox& box, std::size_t limit) {
  const std::size_t count = box.point_count();
  if (count > limit) {
    const std::string shown = count == std::numeric_limits<std::size_t>::max() ? "more than 2^64"
                                                                                 : std::to_string(count);
    throw std::length_error("box has " + shown + " lattice points, over the limit of " + std::to_string(limit));
  }
  const Rational s = box.step();
  std::vector<Point> out;
  out.reserve(count);
  Point cursor = box.lower;
  while (true) {
    out.push_back(cursor);
    // Odometer, last coordinate fastest, gives lexicographic order.
    Eigen::Index i = box.dimension - 1;
    for (; i >= 0; --i) {
      if (cursor(i) < box.upper(i)) {
        cursor(i) += s;
        break;
      }
      cursor(i) = box.lower(i);
    }
    if (i < 0) break;
  }
  return out;
}

OddGraph::OddGraph(std::vector<Point> vertices, Eigen::Index empty_dimension)
    : dimension_(vertices.empty() ? empty_dimension : vertices.front().size()) {
  // Validates distinctness and equal dimension.
  PointSet checked(dimension_, std::move(vertices));
  vertices_ = checked.points();
  const std::size_t m = vertices_.size();
  words_ = (m + 63) / 64;
  bits_.assign(m * words_, 0);

  auto link = [&](std::size_t u, std::size_t v) {
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++edges_;
  };

  if (auto emb = integer_embedding(vertices_)) {
    const auto& coords = emb->coords;
    const std::int64_t den = emb->denominator;
    for (std::size_t u = 0; u < m; ++u) {
      const auto pu = coords.col(static_cast<Eigen::Index>(u));
      for (std::size_t v = u + 1; v < m; ++v) {
        const std::int64_t sum = (pu - coords.col(static_cast<Eigen::Index>(v))).cwiseAbs().sum();
        if (sum % den == 0 && ((sum / den) & 1) != 0) link(u, v);
      }
    }
  } else {
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t v = u + 1; v < m; ++v) {
        if (is_odd_integer(l1_distance(vertices_[u], vertices_[v]))) link(u, v);
      }
    }
  }
}

std::size_t OddGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

OddGraph build_odd_graph(std::vector<Point> points) { return OddGraph(std::move(points)); }

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

void reset(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

// Shared state of one clique search. Vertices are renumbered so that index
// order is the branching order.
struct SharedBest {
  std::atomic<std::size_t> size{0};
  std::mutex mutex;
  std::vector<std::size_t> clique;  // renumbered vertices

  void offer(const std::vector<std::size_t>& candidate) {
    std::lock_guard lock(mutex);
    if (candidate.size() > clique.size()) {
      clique = candidate;
      size.store(candidate.size());
    }
  }
};

class Branch {
 public:
  Branch(const std::vector<Bits>& adjacency, std::size_t words, SharedBest& best)
      : adj_(adjacency), words_(words), best_(best) {}

  std::uint64_t nodes() const noexcept { return nodes_; }

  // Greedy sequential colouring of `p`; order[k] gets colour colours[k], and
  // colours are nondecreasing along order.
  void colour_sort(const Bits& p, std::vector<std::size_t>& order, std::vector<std::size_t>& colours) const {
    order.clear();
    colours.clear();
    Bits uncoloured = p;
    Bits q(words_);
    std::size_t colour = 0;
    while (any(uncoloured)) {
      ++colour;
      q = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
          reset(uncoloured, v);
          const auto& row = adj_[v];
          for (std::size_t x = w; x < words_; ++x) q[x] &= ~row[x];
          reset(q, v);
          order.push_back(v);
          colours.push_back(colour);
        }
      }
    }
  }

  // Explore cliques extending {root} inside `candidates`.
  void run_root(std::size_t root, Bits candidates) {
    ++nodes_;
    current_.assign(1, root);
    if (!any(candidates)) {
      if (best_.size.load() < 1) best_.offer(current_);
      return;
    }
    expand(candidates);
  }

 private:
  void expand(Bits& p) {
    ++nodes_;
    std::vector<std::size_t> order, colours;
    colour_sort(p, order, colours);
    Bits next(words_);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current_.size() + colours[k] <= best_.size.load(std::memory_order_relaxed)) return;
      const std::size_t v = order[k];
      const auto& row = adj_[v];
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & row[w];
      current_.push_back(v);
      if (!any(next)) {
        if (current_.size() > best_.size.load()) best_.offer(current_);
      } else {
        Bits child = next;
        expand(child);
      }
      current_.pop_back();
      reset(p, v);
    }
  }

  const std::vector<Bits>& adj_;
  std::size_t words_;
  SharedBest& best_;
  std::vector<std::size_t> current_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CliqueResult max_odd_clique(const OddGraph& graph, const CliqueOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CliqueResult result;
  result.witness = PointSet(graph.dimension(), {});
  const std::size_t m = graph.size();
  if (m == 0) {
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
  }

  // Branching order: descending degree, ties by vertex order.
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> degree(m);
  for (std::size_t u = 0; u < m; ++u) degree[u] = graph.degree(u);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  const std::size_t words = (m + 63) / 64;
  std::vector<Bits> adj(m, Bits(words, 0));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (graph.adjacent(perm[a], perm[b])) adj[a][b / 64] |= std::uint64_t{1} << (b % 64);
    }
  }

  SharedBest best;
  Bits all(words, 0);
  for (std::size_t v = 0; v < m; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);

  // Root level: the colouring of the full vertex set splits the search into
  // independent tasks, task k rooted at order[k] with candidates drawn from
  // order[0..k-1].
  std::vector<std::size_t> order, colours;
  Branch(adj, words, best).colour_sort(all, order, colours);
  std::vector<std::size_t> position(m);
  for (std::size_t k = 0; k < m; ++k) position[order[k]] = k;

  std::atomic<std::size_t> next_task{0};
  std::atomic<std::uint64_t> nodes{0};
  auto worker = [&] {
    Branch branch(adj, words, best);
    for (std::size_t t = next_task++; t < m; t = next_task++) {
      const std::size_t k = m - 1 - t;
      if (colours[k] <= best.size.load()) continue;
      const std::size_t root = order[k];
      Bits candidates(words, 0);
      for (std::size_t w = 0; w < words; ++w) candidates[w] = adj[root][w];
      for (std::size_t v = 0; v < m; ++v) {
        if (position[v] >= k) reset(candidates, v);
      }
      branch.run_root(root, std::move(candidates));
    }
    nodes += branch.nodes();
  };

  const unsigned threads = std::min<unsigned>(resolve_threads(options.threads), static_cast<unsigned>(m));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<std::size_t> witness = best.clique;
  std::vector<Point> points;
  for (auto v : witness) points.push_back(graph.vertices()[perm[v]]);
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return lex_compare(a, b) < 0; });
  result.max_size = witness.size();
  result.witness = PointSet(graph.dimension(), std::move(points));
  result.nodes_explored = nodes.load();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::size_t lattice_cap(Eigen::Index dimension, Lattice lattice) {
  if (lattice == Lattice::integers) return 2;
  if (dimension >= static_cast<Eigen::Index>(std::numeric_limits<std::size_t>::digits)) {
    return std::numeric_limits<std::size_t>::max();
  }
  return std::size_t{1} << dimension;
}

BoundReport bound_report(Eigen::Index dimension, Lattice lattice, std::size_t max_size) {
  BoundReport r;
  r.dimension = dimension;
  r.lattice = lattice;
  r.max_size = max_size;
  r.cap = lattice_cap(dimension, lattice);
  r.violation = max_size > r.cap;
  return r;
}

std::string BoundReport::summary() const {
  std::ostringstream os;
  os << "within box: largest odd-distance set on the " << to_string(lattice) << " lattice in dimension "
     << dimension << " has " << max_size << " points; cap " << cap;
  if (violation) {
    os << "; VIOLATION: exceeds the cap (implementation bug)";
  } else {
    os << "; no violation";
  }
  return os.str();
}

}  // namespace oddset

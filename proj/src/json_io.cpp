#include "oddset/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "oddset/exact_arith.hpp"

namespace oddset {
namespace {

Json::array_t rational_row(const Point& p) {
  Json::array_t row;
  row.reserve(static_cast<std::size_t>(p.size()));
  for (const auto& c : p) row.emplace_back(c.to_string());
  return row;
}

// Integers that fit are emitted as JSON numbers, larger ones as decimal strings.
Json big_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

std::string fingerprint_string(const Fingerprint& f) {
  std::string s;
  s.reserve(f.size());
  for (bool b : f) s.push_back(b ? '1' : '0');
  return s;
}

Eigen::Index read_dimension(const Json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("point set: expected a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw std::invalid_argument("point set: missing integer \"dim\"");
  }
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw std::invalid_argument("point set: missing array \"points\"");
  }
  const auto dim = doc["dim"].get<std::int64_t>();
  if (dim < 1) throw std::invalid_argument("point set: \"dim\" must be at least 1");
  return static_cast<Eigen::Index>(dim);
}

// Coordinate entries are strings; JSON integers are also accepted since they
// are exact.
std::string coordinate_text(const Json& v, std::size_t point, std::size_t coord) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw std::invalid_argument("point " + std::to_string(point + 1) + ", coordinate " + std::to_string(coord + 1) +
                              ": expected a string");
}

template <typename Fn>
void for_each_point(const Json& doc, Eigen::Index dim, Fn&& fn) {
  const auto& points = doc["points"];
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& row = points[k];
    if (!row.is_array()) throw std::invalid_argument("point " + std::to_string(k + 1) + ": expected an array");
    if (static_cast<Eigen::Index>(row.size()) != dim) {
      throw std::invalid_argument("point " + std::to_string(k + 1) + " has dimension " + std::to_string(row.size()) +
                                  ", expected " + std::to_string(dim));
    }
    std::vector<std::string> coords;
    for (std::size_t c = 0; c < row.size(); ++c) coords.push_back(coordinate_text(row[c], k, c));
    fn(k, std::move(coords));
  }
}

}  // namespace

Json to_json(const PointSet& ps) {
  Json doc;
  doc["dim"] = ps.dimension();
  Json::array_t points;
  points.reserve(ps.size());
  for (const auto& p : ps) points.emplace_back(rational_row(p));
  doc["points"] = std::move(points);
  return doc;
}

PointSet point_set_from_json(const Json& doc) {
  const Eigen::Index dim = read_dimension(doc);
  std::vector<Point> points;
  for_each_point(doc, dim, [&](std::size_t k, std::vector<std::string> coords) {
    Point p(dim);
    for (std::size_t c = 0; c < coords.size(); ++c) {
      try {
        p(static_cast<Eigen::Index>(c)) = Rational::parse(coords[c]);
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("point " + std::to_string(k + 1) + ", coordinate " + std::to_string(c + 1) +
                                    ": " + e.what());
      }
    }
    points.push_back(std::move(p));
  });
  return PointSet(dim, std::move(points));
}

DecimalPointSet decimal_point_set_from_json(const Json& doc) {
  DecimalPointSet out;
  out.dimension = read_dimension(doc);
  for_each_point(doc, out.dimension, [&](std::size_t, std::vector<std::string> coords) {
    out.points.push_back(std::move(coords));
  });
  if (doc.contains("distances")) {
    const auto& list = doc["distances"];
    if (!list.is_array()) throw std::invalid_argument("\"distances\" must be an array of [i, j, d]");
    for (const auto& entry : list) {
      if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_unsigned() || !entry[1].is_number_unsigned()) {
        throw std::invalid_argument("\"distances\" entries must be [i, j, d] with 0-based indices");
      }
      auto i = entry[0].get<std::size_t>();
      auto j = entry[1].get<std::size_t>();
      if (i == j || i >= out.points.size() || j >= out.points.size()) {
        throw std::invalid_argument("\"distances\" entry names an invalid pair [" + std::to_string(i) + ", " +
                                    std::to_string(j) + "]");
      }
      if (i > j) std::swap(i, j);
      const Json& d = entry[2];
      if (!d.is_string() && !d.is_number_integer()) throw std::invalid_argument("declared distance must be an integer");
      const Rational value = Rational::parse(d.is_string() ? d.get<std::string>() : d.dump());
      if (!value.is_integer()) throw std::invalid_argument("declared distance " + value.to_string() + " is not an integer");
      out.declared_distances[{i, j}] = value.numerator();
    }
  }
  return out;
}

Json to_json(const OddCertificate& cert) {
  Json doc;
  doc["set_size"] = cert.set_size;
  doc["verdict"] = cert.verdict;
  Json::array_t pairs;
  pairs.reserve(cert.pair_results.size());
  for (const auto& r : cert.pair_results) {
    pairs.push_back(Json::array({r.i, r.j, r.distance.to_string(), r.is_odd_integer}));
  }
  doc["pairs"] = std::move(pairs);
  return doc;
}

Json to_json(const ParityAudit& audit) {
  Json doc;
  Json::array_t fingerprints, parities;
  for (const auto& f : audit.fingerprints) fingerprints.emplace_back(fingerprint_string(f));
  for (auto p : audit.weight_parities) parities.emplace_back(p == Parity::even ? "even" : "odd");
  Json fibers = Json::object();
  for (const auto& [f, count] : audit.fiber_sizes) fibers[fingerprint_string(f)] = count;
  doc["fingerprints"] = std::move(fingerprints);
  doc["fiber_sizes"] = std::move(fibers);
  doc["weight_parities"] = std::move(parities);
  doc["uniform_weight_parity"] = audit.uniform_weight_parity;
  doc["fibers_at_most_two"] = audit.fibers_at_most_two;
  doc["passes"] = audit.passes();
  return doc;
}

Json to_json(const CliqueResult& result, const BoundReport& report, const LatticeBox& box) {
  Json doc;
  doc["max_size"] = result.max_size;
  doc["cap"] = report.cap;
  doc["witness"] = to_json(result.witness);
  doc["nodes_explored"] = result.nodes_explored;
  doc["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(result.elapsed).count();
  doc["within_box"] = true;
  doc["lattice"] = std::string(to_string(box.lattice));
  doc["box"] = {{"lower", rational_row(box.lower)}, {"upper", rational_row(box.upper)}};
  doc["violation"] = report.violation;
  doc["report"] = report.summary();
  return doc;
}

Json to_json(const RationalizeResult& result) {
  Json doc = to_json(result.points);
  Json::array_t targets;
  for (const auto& t : result.targets) targets.push_back(Json::array({t.i, t.j, t.distance.to_string()}));
  doc["distances"] = std::move(targets);
  Json::array_t applied;
  for (bool b : result.provenance.separation_applied) applied.emplace_back(b);
  doc["provenance"] = {{"separation_applied", std::move(applied)},
                       {"free_variables", result.provenance.free_variables},
                       {"C", result.provenance.bound.to_string()},
                       {"epsilon", result.provenance.epsilon.to_string()},
                       {"scale", big_json(result.provenance.scale)}};
  return doc;
}

Json to_json(const DyadicResult& result) {
  Json doc = to_json(result.points);
  doc["provenance"] = {{"scale", big_json(result.scale)}};
  return doc;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": malformed JSON (" + e.what() + ")");
  }
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(1) << '\n';
}

std::string format_text(const PointSet& ps) {
  std::ostringstream os;
  os << ps.size() << " points in dimension " << ps.dimension() << '\n';
  for (std::size_t k = 0; k < ps.size(); ++k) {
    os << "  " << k + 1 << ": (";
    for (Eigen::Index c = 0; c < ps.dimension(); ++c) os << (c ? ", " : "") << ps[k](c);
    os << ")\n";
  }
  return os.str();
}

std::string format_text(const OddCertificate& cert) {
  std::ostringstream os;
  os << "odd-distance certificate for " << cert.set_size << " points, " << cert.pair_results.size() << " pairs\n";
  for (const auto& r : cert.pair_results) {
    os << "  (" << r.i + 1 << ", " << r.j + 1 << ")  distance " << r.distance << (r.is_odd_integer ? "  odd" : "  FAIL")
       << '\n';
  }
  os << "verdict: " << (cert.verdict ? "odd-distance set" : "not an odd-distance set") << '\n';
  return os.str();
}

std::string format_text(const ParityAudit& audit) {
  std::ostringstream os;
  os << "parity audit of " << audit.fingerprints.size() << " points\n";
  for (std::size_t k = 0; k < audit.fingerprints.size(); ++k) {
    os << "  " << k + 1 << ": " << fingerprint_string(audit.fingerprints[k]) << "  weight "
       << (audit.weight_parities[k] == Parity::even ? "even" : "odd") << '\n';
  }
  os << "fibers:\n";
  for (const auto& [f, count] : audit.fiber_sizes) os << "  " << fingerprint_string(f) << ": " << count << '\n';
  os << "uniform weight parity: " << (audit.uniform_weight_parity ? "pass" : "FAIL") << '\n';
  os << "fibers at most two:    " << (audit.fibers_at_most_two ? "pass" : "FAIL") << '\n';
  return os.str();
}

}  // namespace oddset

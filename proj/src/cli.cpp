#include "oddset/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "oddset/construct.hpp"
#include "oddset/json_io.hpp"
#include "oddset/rationalize.hpp"
#include "oddset/search.hpp"

namespace oddset {
namespace {

constexpr std::size_t kMaxConstructDimension = 20;

std::size_t vertex_limit() {
  const char* env = std::getenv("ODDSET_VERTEX_LIMIT");
  if (env == nullptr || *env == '\0') return kDefaultVertexLimit;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw std::invalid_argument("ODDSET_VERTEX_LIMIT must be a positive integer");
  return static_cast<std::size_t>(v);
}

struct Options {
  std::size_t n = 0;
  std::string input;
  std::string output;
  std::string lattice = "half";
  std::string lo, hi;
  unsigned threads = 0;
  bool pretty = false;
};

void emit(std::ostream& out, const Json& doc) { out << doc.dump(1) << '\n'; }

int do_construct(const Options& o, std::ostream& out) {
  const PointSet ps = build_odd_set(o.n);
  const OddCertificate cert = verify_odd_set(ps, {o.threads, false});
  Json summary;
  summary["n"] = o.n;
  summary["size"] = ps.size();
  summary["verdict"] = cert.verdict;
  if (!o.output.empty()) {
    write_json_file(o.output, to_json(ps));
    summary["output"] = o.output;
  } else {
    summary["set"] = to_json(ps);
  }
  emit(out, summary);
  return cert.verdict ? kExitOk : kExitClaimFailed;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const PointSet ps = point_set_from_json(read_json_file(o.input));
  const OddCertificate cert = verify_odd_set(ps, {o.threads, false});
  if (o.pretty) {
    out << format_text(cert);
  } else {
    emit(out, to_json(cert));
  }
  if (const PairResult* bad = cert.first_failure()) {
    err << "verify: pair (" << bad->i + 1 << ", " << bad->j + 1 << ") has distance " << bad->distance
        << ", not an odd integer\n";
    return kExitClaimFailed;
  }
  return kExitOk;
}

int do_audit(const Options& o, std::ostream& out, std::ostream& err) {
  const PointSet ps = point_set_from_json(read_json_file(o.input));
  const ParityAudit audit = parity_audit(ps);
  if (o.pretty) {
    out << format_text(audit);
  } else {
    emit(out, to_json(audit));
  }
  if (!audit.uniform_weight_parity) err << "audit: fingerprint weights have mixed parity\n";
  if (!audit.fibers_at_most_two) {
    for (const auto& [f, count] : audit.fiber_sizes) {
      if (count > 2) {
        std::string bits;
        for (bool b : f) bits.push_back(b ? '1' : '0');
        err << "audit: fingerprint " << bits << " is shared by " << count << " points\n";
        break;
      }
    }
  }
  return audit.passes() ? kExitOk : kExitClaimFailed;
}

int do_search(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 1) throw std::invalid_argument("search: -n must be at least 1");
  const Lattice lattice = o.lattice == "int" ? Lattice::integers : Lattice::half_integers;
  const LatticeBox box =
      LatticeBox::cube(static_cast<Eigen::Index>(o.n), lattice, Rational::parse(o.lo), Rational::parse(o.hi));
  box.validate();
  const OddGraph graph = build_odd_graph(enumerate_box(box, vertex_limit()));
  const CliqueResult result = max_odd_clique(graph, {o.threads});
  const BoundReport report = bound_report(box.dimension, lattice, result);
  if (o.pretty) {
    out << report.summary() << '\n' << "witness: " << format_text(result.witness);
  } else {
    emit(out, to_json(result, report, box));
  }
  if (report.violation) {
    err << "search: " << report.summary() << '\n';
    return kExitClaimFailed;
  }
  return kExitOk;
}

int do_rationalize(const Options& o, std::ostream& out) {
  const DecimalPointSet input = decimal_point_set_from_json(read_json_file(o.input));
  const RationalizeResult result = rationalize_set(input);
  const Json doc = to_json(result);
  if (!o.output.empty()) {
    write_json_file(o.output, doc);
    emit(out, {{"size", result.points.size()}, {"verdict", true}, {"output", o.output}});
  } else {
    emit(out, doc);
  }
  return kExitOk;
}

int do_dyadic(const Options& o, std::ostream& out) {
  const PointSet ps = point_set_from_json(read_json_file(o.input));
  const DyadicResult result = dyadic_scale(ps);
  const Json doc = to_json(result);
  if (!o.output.empty()) {
    write_json_file(o.output, doc);
    emit(out, {{"scale", doc["provenance"]["scale"]}, {"output", o.output}});
  } else {
    emit(out, doc);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact odd-distance point sets under the l1 metric", "oddset"};
  app.require_subcommand(1, 1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build the 2^n-point odd-distance set in (1/2 Z)^n");
  construct->add_option("-n", o.n, "Dimension")->required()->check(CLI::Range(std::size_t{1}, kMaxConstructDimension));
  construct->add_option("-o,--output", o.output, "Write the point set to FILE");
  construct->add_option("--threads", o.threads, "Verification threads (default: all cores)");

  auto* verify = app.add_subcommand("verify", "Certify all pairwise distances of a point set");
  verify->add_option("file", o.input, "Point-set JSON")->required();
  verify->add_option("--threads", o.threads, "Worker threads (default: all cores)");
  verify->add_flag("--pretty", o.pretty, "Human-readable output");

  auto* audit = app.add_subcommand("audit", "Half-integer parity fingerprints and fiber sizes");
  audit->add_option("file", o.input, "Point-set JSON")->required();
  audit->add_flag("--pretty", o.pretty, "Human-readable output");

  auto* search = app.add_subcommand("search", "Largest odd-distance set inside a lattice box");
  search->add_option("-n", o.n, "Dimension")->required();
  search->add_option("--lattice", o.lattice, "half or int")->required()->check(CLI::IsMember({"half", "int"}));
  search->add_option("--lo", o.lo, "Lower bound for every coordinate")->required();
  search->add_option("--hi", o.hi, "Upper bound for every coordinate")->required();
  search->add_option("--threads", o.threads, "Worker threads (default: all cores)");
  search->add_flag("--pretty", o.pretty, "Human-readable output");

  auto* rationalize = app.add_subcommand("rationalize", "Exact rational set with the distances of a decimal one");
  rationalize->add_option("file", o.input, "Decimal point-set JSON")->required();
  rationalize->add_option("-o,--output", o.output, "Write the result to FILE");

  auto* dyadic = app.add_subcommand("dyadic", "Scale a rational odd-distance set onto dyadic coordinates");
  dyadic->add_option("file", o.input, "Point-set JSON")->required();
  dyadic->add_option("-o,--output", o.output, "Write the result to FILE");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const std::string first_line = std::string(e.what()).substr(0, std::string(e.what()).find('\n'));
    err << "oddset: " << first_line << '\n';
    return kExitUsage;
  }

  try {
    if (*construct) return do_construct(o, out);
    if (*verify) return do_verify(o, out, err);
    if (*audit) return do_audit(o, out, err);
    if (*search) return do_search(o, out, err);
    if (*rationalize) return do_rationalize(o, out);
    if (*dyadic) return do_dyadic(o, out);
  } catch (const std::exception& e) {
    err << "oddset " << app.get_subcommands().front()->get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace oddset
